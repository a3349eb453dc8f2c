use motivic::ring::{BiPoly, ExactInt, Monomial, Series};
use proptest::prelude::*;

fn poly(max_terms: usize, max_exp: u32) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=max_exp, 0..=max_exp, -9i64..=9), 0..=max_terms).prop_map(|terms| {
        BiPoly::from_terms(terms.into_iter().map(|(i, j, c)| (Monomial::uv(i, j), ExactInt::from(c))))
    })
}

/// Series with constant term `1` or `-1`.
fn unit_series(order: usize) -> impl Strategy<Value = Series> {
    (any::<bool>(), prop::collection::vec(poly(3, 2), order)).prop_map(move |(neg, rest)| {
        let c0 = BiPoly::from_int(if neg { -1 } else { 1 });
        Series::from_coeffs(order, std::iter::once(c0).chain(rest))
    })
}

fn series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(poly(3, 2), order + 1).prop_map(move |c| Series::from_coeffs(order, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(a in poly(4, 3), b in poly(4, 3), c in poly(4, 3)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &BiPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn polynomial_power_is_repeated_product(a in poly(3, 2), k in 0u32..5) {
        let repeated = (0..k).fold(BiPoly::one(), |acc, _| &acc * &a);
        prop_assert_eq!(a.pow(k), repeated);
    }

    #[test]
    fn adams_is_a_ring_map(a in poly(3, 2), b in poly(3, 2), j in 1u32..4, k in 1u32..4) {
        prop_assert_eq!((&a * &b).adams(k), &a.adams(k) * &b.adams(k));
        prop_assert_eq!((&a + &b).adams(k), &a.adams(k) + &b.adams(k));
        prop_assert_eq!(a.adams(j).adams(k), a.adams(j * k));
    }

    #[test]
    fn display_parses_back(a in poly(6, 4)) {
        let back: BiPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn polynomial_json_round_trip(a in poly(6, 4)) {
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<BiPoly>(&json).unwrap(), a);
    }

    #[test]
    fn series_json_round_trip(s in series(5)) {
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<Series>(&json).unwrap(), s);
    }

    #[test]
    fn inverse_is_an_involution(s in unit_series(6)) {
        let inv = s.inverse().unwrap();
        prop_assert_eq!(&s * &inv, Series::one(6));
        prop_assert_eq!(inv.inverse().unwrap(), s);
    }

    #[test]
    fn inverse_of_product(a in unit_series(5), b in unit_series(5)) {
        let lhs = (&a * &b).inverse().unwrap();
        prop_assert_eq!(lhs, &a.inverse().unwrap() * &b.inverse().unwrap());
    }

    #[test]
    fn substitution_composes(s in series(8), d in 1usize..4, e in 1usize..4) {
        prop_assert_eq!(s.substitute_t_power(d).substitute_t_power(e), s.substitute_t_power(d * e));
        prop_assert_eq!(s.substitute_t_power(1), s);
    }

    #[test]
    fn substitution_is_multiplicative(a in series(6), b in series(6), e in 1usize..4) {
        prop_assert_eq!((&a * &b).substitute_t_power(e), &a.substitute_t_power(e) * &b.substitute_t_power(e));
    }

    #[test]
    fn series_product_commutes(a in series(5), b in series(5), c in series(5)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }
}

#[test]
fn non_unit_constant_term_is_rejected() {
    let s = Series::from_coeffs(3, ["2", "1"].map(|c| c.parse().unwrap()));
    assert!(s.inverse().is_err());
    let s = Series::from_coeffs(3, ["1 + u", "1"].map(|c| c.parse().unwrap()));
    assert!(s.inverse().is_err());
}
