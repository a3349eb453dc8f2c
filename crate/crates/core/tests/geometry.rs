//! Generating series against values obtained by independent counting.

use motivic::motives::{projective_epoly, specialize_series, MotiveClass, Specialization};
use motivic::partitions::partitions_of;
use motivic::quot::{goettsche, hodge_product, punctual_surface, quot_curve};
use motivic::ring::{BiPoly, ExactInt};
use num_traits::Zero;

fn euler(s: &motivic::Series) -> Vec<ExactInt> {
    specialize_series(s, Specialization::Euler).coeffs().iter().map(|c| c.constant_term()).collect()
}

fn binomial(n: i64, k: usize) -> ExactInt {
    let mut num = ExactInt::from(1);
    let mut den = ExactInt::from(1);
    for i in 0..k {
        num *= ExactInt::from(n - i as i64);
        den *= ExactInt::from(i as i64 + 1);
    }
    num / den
}

fn partition_counts(n: usize) -> Vec<ExactInt> {
    (0..=n).map(|k| ExactInt::from(partitions_of(k).len())).collect()
}

#[test]
fn symmetric_powers_of_the_line_are_projective_spaces() {
    let z = quot_curve(0, 1, 8);
    for n in 0..=8 {
        assert_eq!(z.coeff(n), &projective_epoly(n as u32));
    }
}

#[test]
fn euler_characteristic_of_curve_quot_schemes() {
    // torus fixed points: chi = coefficient of (1-t)^(-r chi(C))
    for g in 0..4i64 {
        for r in 1..5i64 {
            let chi = euler(&hodge_product(g as u32, r as u32, 8));
            let c = r * (2 - 2 * g);
            for (n, x) in chi.iter().enumerate() {
                let expected = if n == 0 { ExactInt::from(1) } else { binomial(c + n as i64 - 1, n) };
                assert_eq!(x, &expected, "g={g} r={r} n={n}");
            }
        }
    }
}

#[test]
fn hilbert_scheme_of_the_plane_has_partition_cells() {
    // one affine cell of dimension n + l(lambda) per partition lambda of n
    let z = goettsche(&MotiveClass::affine(2), 8).unwrap();
    for n in 0..=8 {
        let cells = partitions_of(n)
            .iter()
            .fold(BiPoly::zero(), |acc, lam| acc + BiPoly::lefschetz_pow((n + lam.parts().len()) as u32));
        assert_eq!(z.coeff(n), &cells, "n={n}");
    }
}

#[test]
fn punctual_hilbert_scheme_cells() {
    // punctual Hilb^n(A^2, 0) has one cell of dimension n - l(lambda) per partition
    let p = punctual_surface(8);
    for n in 0..=8 {
        let cells = partitions_of(n)
            .iter()
            .fold(BiPoly::zero(), |acc, lam| acc + BiPoly::lefschetz_pow((n - lam.parts().len()) as u32));
        assert_eq!(p.coeff(n), &cells, "n={n}");
    }
}

#[test]
fn torus_fixed_points_of_plane_hilbert_schemes() {
    // Hilb^n(P^2): triples of partitions; Hilb^n(P^1 x P^1): quadruples
    let p = partition_counts(8);
    let convolve = |a: &[ExactInt], b: &[ExactInt]| -> Vec<ExactInt> {
        (0..a.len()).map(|n| (0..=n).fold(ExactInt::zero(), |acc, i| acc + &a[i] * &b[n - i])).collect()
    };
    let p3 = convolve(&convolve(&p, &p), &p);
    let p4 = convolve(&p3, &p);
    assert_eq!(euler(&goettsche(&MotiveClass::proj(2), 8).unwrap()), p3);
    assert_eq!(euler(&goettsche(&"P^1*P^1".parse().unwrap(), 8).unwrap()), p4);
}

#[test]
fn betti_numbers_of_hilb_p2() {
    // Hilb^2(P^2): b_0..b_8 = 1, 2, 3, 2, 1
    let z = goettsche(&MotiveClass::proj(2), 2).unwrap();
    let expected: BiPoly = "1 + 2*u*v + 3*u^2*v^2 + 2*u^3*v^3 + u^4*v^4".parse().unwrap();
    assert_eq!(z.coeff(2), &expected);
}
