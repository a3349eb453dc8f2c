//! Generating functions of Quot schemes of points, at the level of
//! E-polynomials, and the identities that relate them.
//!
//! Several series here are computed along more than one route on purpose:
//! the curve series as a product of shifted zeta functions, as a plethystic
//! exponential, as an explicit product of linear factors and as a sum over
//! compositions. The routes share no code beyond basic series arithmetic.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::motives::{curve_epoly, projective_epoly, zeta, MotiveClass};
use crate::partitions::{partitions_of, Partition};
use crate::plethystic::{exp_series, log_series, pow_series, sigma_upto, EffSeries, LogSeries};
use crate::ring::{BiPoly, ExactInt, Monomial, Series, Var, MARKERS};

/// `1 - x t`.
fn linear_factor(x: BiPoly, order: usize) -> Series {
    Series::from_coeffs(order, [BiPoly::one(), -x])
}

/// `1 - x t^k`.
fn linear_factor_at(x: BiPoly, k: usize, order: usize) -> Series {
    Series::one(order) - Series::term(x, k, order)
}

fn power(s: &Series, e: u32) -> Series {
    (0..e).fold(Series::one(s.order()), |acc, _| &acc * s)
}

/// Punctual series of a curve, `prod_{i=0}^{r-1} 1/(1 - L^i t)`.
pub fn punctual_curve(r: u32, order: usize) -> EffSeries {
    assert!(r >= 1, "rank must be positive");
    let denominator = (0..r).fold(Series::one(order), |acc, i| &acc * &linear_factor(BiPoly::lefschetz_pow(i), order));
    EffSeries::new(denominator.inverse().expect("constant term is 1")).expect("constant term is 1")
}

/// `Z(t) = prod_{i=1}^{r} zeta_C(L^{i-1} t)` for a genus `g` curve.
pub fn quot_curve(g: u32, r: u32, order: usize) -> EffSeries {
    assert!(r >= 1, "rank must be positive");
    let zeta_c = zeta(&MotiveClass::curve(g), order);
    let product = (0..r).fold(Series::one(order), |acc, i| &acc * &zeta_c.scale_t(&Monomial::uv(i, i)));
    EffSeries::new(product).expect("constant term is 1")
}

/// `Z(t) = Exp([C x P^{r-1}] t)`.
pub fn quot_curve_exp(g: u32, r: u32, order: usize) -> Result<EffSeries> {
    assert!(r >= 1, "rank must be positive");
    let class = curve_epoly(g) * projective_epoly(r - 1);
    exp_series(&LogSeries::from_terms(order, [class]), order)
}

/// `[Quot_C(E, n)]` as the sum over compositions `n_1 + ... + n_r = n` of
/// `prod_i [Sym^{n_i} C] * L^{sum_i (i-1) n_i}`.
pub fn bfp_sum(g: u32, r: u32, n: usize) -> BiPoly {
    assert!(r >= 1, "rank must be positive");
    let sym = sigma_upto(&curve_epoly(g), n);
    let mut total = BiPoly::zero();
    let mut parts = vec![0usize; r as usize];
    for_each_composition(n, &mut parts, 0, &mut |parts| {
        let shift: usize = parts.iter().enumerate().map(|(i, &ni)| i * ni).sum();
        let term = parts.iter().fold(BiPoly::lefschetz_pow(shift as u32), |acc, &ni| &acc * &sym[ni]);
        total = &total + &term;
    });
    total
}

fn for_each_composition(rest: usize, parts: &mut [usize], at: usize, f: &mut impl FnMut(&[usize])) {
    if at + 1 == parts.len() {
        parts[at] = rest;
        f(parts);
        return;
    }
    for k in 0..=rest {
        parts[at] = k;
        for_each_composition(rest - k, parts, at + 1, f);
    }
}

/// `prod_{i=0}^{r-1} (1 - u^i v^{i+1} t)^g (1 - u^{i+1} v^i t)^g / ((1 - u^i v^i t)(1 - u^{i+1} v^{i+1} t))`.
pub fn hodge_product(g: u32, r: u32, order: usize) -> EffSeries {
    assert!(r >= 1, "rank must be positive");
    let mono = |a: u32, b: u32| BiPoly::monomial(Monomial::uv(a, b));
    let mut numerator = Series::one(order);
    let mut denominator = Series::one(order);
    for i in 0..r {
        numerator = &numerator * &power(&linear_factor(mono(i, i + 1), order), g);
        numerator = &numerator * &power(&linear_factor(mono(i + 1, i), order), g);
        denominator = &denominator * &linear_factor(mono(i, i), order);
        denominator = &denominator * &linear_factor(mono(i + 1, i + 1), order);
    }
    let quotient = &numerator * &denominator.inverse().expect("constant term is 1");
    EffSeries::new(quotient).expect("constant term is 1")
}

/// `prod_{i=0}^{r-1} (1 - u^{2i+1} t)^{2g} / ((1 - u^{2i} t)(1 - u^{2i+2} t))`, in `u` alone.
pub fn poincare_product(g: u32, r: u32, order: usize) -> EffSeries {
    assert!(r >= 1, "rank must be positive");
    let u = |a: u32| BiPoly::monomial(Monomial::var(Var::U, a));
    let mut numerator = Series::one(order);
    let mut denominator = Series::one(order);
    for i in 0..r {
        numerator = &numerator * &power(&linear_factor(u(2 * i + 1), order), 2 * g);
        denominator = &denominator * &linear_factor(u(2 * i), order);
        denominator = &denominator * &linear_factor(u(2 * i + 2), order);
    }
    let quotient = &numerator * &denominator.inverse().expect("constant term is 1");
    EffSeries::new(quotient).expect("constant term is 1")
}

/// Hilbert schemes of points on a surface: `Exp([S] t / (1 - L t))`.
pub fn goettsche(surface: &MotiveClass, order: usize) -> Result<EffSeries> {
    let s = surface.e_poly();
    let terms = (1..=order).map(|n| s * &BiPoly::lefschetz_pow(n as u32 - 1));
    exp_series(&LogSeries::from_terms(order, terms), order)
}

/// Punctual Hilbert schemes of a surface point, `prod_{n>=1} (1 - L^{n-1} t^n)^{-1}`.
pub fn punctual_surface(order: usize) -> EffSeries {
    let denominator = (1..=order)
        .fold(Series::one(order), |acc, n| &acc * &linear_factor_at(BiPoly::lefschetz_pow(n as u32 - 1), n, order));
    EffSeries::new(denominator.inverse().expect("constant term is 1")).expect("constant term is 1")
}

/// The classes `Omega_1..Omega_N` with `Exp(sum Omega_n t^n) = P(t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaList {
    omegas: Vec<BiPoly>,
}

impl OmegaList {
    /// `Omega_1, ..., Omega_N`.
    pub fn omegas(&self) -> &[BiPoly] {
        &self.omegas
    }

    /// `Omega_n` for `n >= 1`.
    pub fn get(&self, n: usize) -> Option<&BiPoly> {
        n.checked_sub(1).and_then(|i| self.omegas.get(i))
    }

    pub fn order(&self) -> usize {
        self.omegas.len()
    }

    pub fn to_log_series(&self) -> LogSeries {
        LogSeries::from_terms(self.order(), self.omegas.iter().cloned())
    }
}

pub fn omega_extract(p: &EffSeries, order: usize) -> Result<OmegaList> {
    let log = log_series(p, order)?;
    Ok(OmegaList { omegas: log.coeffs()[1..].to_vec() })
}

/// Outcome of a coefficientwise comparison of two series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Comparison {
    /// Order up to which the series were compared.
    pub order: usize,
    pub first_mismatch: Option<usize>,
}

impl Comparison {
    pub fn of(a: &Series, b: &Series) -> Self {
        Comparison { order: a.order().min(b.order()), first_mismatch: a.first_mismatch(b) }
    }

    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Checks `Z(t) = P(t)^{[X]}` coefficientwise.
pub fn theorem_a_check(x: &MotiveClass, p: &EffSeries, z: &EffSeries, order: usize) -> Result<Comparison> {
    let lhs = pow_series(p, x.e_poly(), order)?;
    Ok(Comparison::of(&lhs, &z.truncate(order)))
}

/// Compares the punctual curve series with `zeta_{P^{r-1}}`.
pub fn sym_punctual_check(r: u32, order: usize) -> Comparison {
    Comparison::of(&punctual_curve(r, order), &zeta(&MotiveClass::proj(r - 1), order))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRow {
    pub partition: Partition,
    pub class: BiPoly,
}

/// E-polynomials of the strata of the `t^n` coefficient of `B(t)^m`, one row
/// per partition of `n` in [`partitions_of`] order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumTable {
    pub n: usize,
    pub rows: Vec<StratumRow>,
}

impl StratumTable {
    pub fn total(&self) -> BiPoly {
        self.rows.iter().fold(BiPoly::zero(), |acc, row| acc + &row.class)
    }

    pub fn get(&self, alpha: &Partition) -> Option<&BiPoly> {
        self.rows.iter().find(|row| &row.partition == alpha).map(|row| &row.class)
    }
}

/// Refines the `t^n` coefficient of `B(t)^m` by support type: marker `s_i`
/// is attached to the `t^i` coefficient of `B`, the power is taken in the
/// extended ring, and the coefficient of `t^n prod s_i^{a_i}` is the stratum
/// indexed by `a`.
pub fn strata(b: &EffSeries, m: &BiPoly, n: usize) -> Result<StratumTable> {
    if n > MARKERS {
        return Err(Error::TooManyMarkers { max: MARKERS, requested: n });
    }
    if n > b.order() {
        return Err(Error::InvalidArgument(format!("series known to order {}, stratum n = {n}", b.order())));
    }
    if b.coeffs().iter().any(BiPoly::has_markers) || m.has_markers() {
        return Err(Error::InvalidArgument("inputs must not contain markers".into()));
    }
    let marked =
        b.truncate(n).map_indexed(|i, c| if i == 0 { c.clone() } else { c.mul_monomial(&Monomial::var(Var::S(i), 1)) });
    let power = pow_series(&EffSeries::new(marked)?, m, n)?;
    let top = power.coeff(n);
    let rows = partitions_of(n)
        .into_iter()
        .map(|alpha| {
            let mut marker = Monomial::ONE;
            for (i, &a) in alpha.mult().iter().enumerate() {
                marker.0[Var::S(i + 1).index()] = a;
            }
            let class = BiPoly::from_terms(top.terms().iter().filter_map(|(mono, c)| {
                let (base, markers) = mono.split_markers();
                (markers == marker).then(|| (base, c.clone()))
            }));
            StratumRow { partition: alpha, class }
        })
        .collect();
    Ok(StratumTable { n, rows })
}

/// True if every coefficient has non-negative coefficients after `u = v = q`,
/// as for the class of a variety with a cell-like stratification.
pub fn has_effective_shape(s: &Series) -> bool {
    s.coeffs().iter().all(|c| c.set_v_to_u().terms().iter().all(|(_, x)| !x.is_negative()))
}

/// `Omega_n` as read off Göttsche's formula for one surface: the `t^n`
/// coefficient of `Log Z_S` divided exactly by `E(S)`. `None` if some
/// division is not exact.
pub fn omega_from_surface(surface: &MotiveClass, order: usize) -> Result<Option<OmegaList>> {
    let s = surface.e_poly();
    if s.is_zero() {
        return Err(Error::InvalidArgument("surface class must be non-zero".into()));
    }
    let log = log_series(&goettsche(surface, order)?, order)?;
    Ok(log.coeffs()[1..].iter().map(|c| c.div_exact(s)).collect::<Option<Vec<_>>>().map(|omegas| OmegaList { omegas }))
}

/// Hodge numbers `h^{p,q}` of `Quot_C(E, n)`, `n = 0..=nmax`, read off the
/// E-polynomial as `(-1)^{p+q}` times the `u^p v^q` coefficient.
pub fn hodge_numbers(g: u32, r: u32, nmax: usize) -> Vec<HodgeEntry> {
    let series = hodge_product(g, r, nmax);
    let mut rows = Vec::new();
    for (n, c) in series.coeffs().iter().enumerate() {
        let mut entries: Vec<HodgeEntry> = c
            .terms()
            .iter()
            .map(|(m, x)| {
                let (p, q) = (m.exp(Var::U), m.exp(Var::V));
                let h = if (p + q) % 2 == 0 { x.clone() } else { -x };
                HodgeEntry { n, p, q, h }
            })
            .collect();
        entries.sort_by_key(|e| (e.p, e.q));
        rows.extend(entries);
    }
    rows
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HodgeEntry {
    pub n: usize,
    pub p: u32,
    pub q: u32,
    #[serde(serialize_with = "as_string")]
    pub h: ExactInt,
}

fn as_string<S: serde::Serializer>(x: &ExactInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl HodgeEntry {
    pub fn is_zero(&self) -> bool {
        self.h.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn punctual_curve_examples() {
        assert_eq!(*punctual_curve(1, 5), Series::from_coeffs(5, vec![BiPoly::one(); 6]));
        for r in 1..=4 {
            assert_eq!(punctual_curve(r, 3).coeff(1), &projective_epoly(r - 1));
        }
        assert_eq!(punctual_curve(2, 2).coeff(2), &p("1 + u*v + u^2*v^2"));
    }

    #[test]
    fn quot_curve_examples() {
        for g in 0..3 {
            assert_eq!(quot_curve(g, 1, 6), zeta(&MotiveClass::curve(g), 6));
        }
        assert_eq!(quot_curve(0, 2, 3).coeff(1), &p("1 + 2*u*v + u^2*v^2"));
        for (g, r) in [(0, 1), (1, 3), (3, 2)] {
            let expected = curve_epoly(g) * projective_epoly(r - 1);
            assert_eq!(quot_curve(g, r, 2).coeff(1), &expected);
        }
    }

    #[test]
    fn quot_curve_exp_examples() {
        assert_eq!(quot_curve_exp(0, 1, 5).unwrap(), zeta(&MotiveClass::proj(1), 5));
        let c1 = curve_epoly(1);
        let expected = (&c1 * &c1 + c1.adams(2)).div_exact_scalar(&ExactInt::from(2)).unwrap();
        assert_eq!(quot_curve_exp(1, 1, 2).unwrap().coeff(2), &expected);
        assert_eq!(quot_curve_exp(2, 3, 6).unwrap(), quot_curve(2, 3, 6));
    }

    #[test]
    fn bfp_examples() {
        assert_eq!(bfp_sum(2, 3, 0), BiPoly::one());
        let sym = sigma_upto(&curve_epoly(2), 5);
        for (n, s) in sym.iter().enumerate() {
            assert_eq!(&bfp_sum(2, 1, n), s);
        }
        assert_eq!(bfp_sum(0, 2, 1), p("1 + 2*u*v + u^2*v^2"));
    }

    #[test]
    fn hodge_product_examples() {
        assert_eq!(hodge_product(0, 1, 6), zeta(&MotiveClass::proj(1), 6));
        assert_eq!(hodge_product(2, 1, 1).coeff(1), &p("1 - 2*u - 2*v + u*v"));
        assert_eq!(hodge_product(1, 2, 1).coeff(1), &(curve_epoly(1) * p("1 + u*v")));
    }

    #[test]
    fn poincare_examples() {
        let expected = (linear_factor(BiPoly::one(), 4) * linear_factor(p("u^2"), 4)).inverse().unwrap();
        assert_eq!(*poincare_product(0, 1, 4), expected);
        assert_eq!(poincare_product(1, 1, 1).coeff(1), &p("1 - 2*u + u^2"));
    }

    #[test]
    fn goettsche_examples() {
        let a2 = MotiveClass::affine(2);
        let z = goettsche(&a2, 3).unwrap();
        assert_eq!(z.coeff(1), &p("u^2*v^2"));
        assert_eq!(z.coeff(2), &p("u^4*v^4 + u^3*v^3"));
        assert_eq!(goettsche(&MotiveClass::proj(2), 1).unwrap().coeff(1), &p("1 + u*v + u^2*v^2"));
    }

    #[test]
    fn punctual_surface_examples() {
        let ps = punctual_surface(3);
        assert_eq!(ps.coeff(1), &BiPoly::one());
        assert_eq!(ps.coeff(2), &p("1 + u*v"));
        assert_eq!(ps.coeff(3), &p("1 + u*v + u^2*v^2"));
    }

    #[test]
    fn omega_examples() {
        let om = omega_extract(&punctual_curve(3, 6), 6).unwrap();
        assert_eq!(om.get(1), Some(&projective_epoly(2)));
        assert!(om.omegas()[1..].iter().all(BiPoly::is_zero));

        let om = omega_extract(&punctual_surface(6), 6).unwrap();
        for n in 1..=6 {
            assert_eq!(om.get(n), Some(&BiPoly::lefschetz_pow(n as u32 - 1)));
        }
        assert_eq!(exp_series(&om.to_log_series(), 6).unwrap(), punctual_surface(6));

        let om = omega_extract(&EffSeries::one(4), 4).unwrap();
        assert_eq!(om.order(), 4);
        assert!(om.omegas().iter().all(BiPoly::is_zero));
    }

    #[test]
    fn power_of_punctual_examples() {
        let z = quot_curve(2, 2, 6);
        let c = theorem_a_check(&MotiveClass::curve(2), &punctual_curve(2, 6), &z, 6).unwrap();
        assert!(c.passed());

        let a2 = MotiveClass::affine(2);
        let c = theorem_a_check(&a2, &punctual_surface(6), &goettsche(&a2, 6).unwrap(), 6).unwrap();
        assert!(c.passed());

        let pser = punctual_surface(5);
        assert!(theorem_a_check(&MotiveClass::point(), &pser, &pser, 5).unwrap().passed());
    }

    #[test]
    fn power_check_reports_mismatch() {
        let wrong = quot_curve(1, 2, 6);
        let c = theorem_a_check(&MotiveClass::curve(2), &punctual_curve(2, 6), &wrong, 6).unwrap();
        assert_eq!(c.first_mismatch, Some(1));
    }

    #[test]
    fn sym_punctual_examples() {
        assert!(sym_punctual_check(1, 8).passed());
        let c = sym_punctual_check(2, 2);
        assert!(c.passed());
        assert_eq!(punctual_curve(2, 2).coeff(2), &p("1 + u*v + u^2*v^2"));
        assert!(sym_punctual_check(3, 10).passed());
    }

    #[test]
    fn strata_of_sym2_affine_line() {
        let table = strata(&punctual_curve(1, 4), &BiPoly::lefschetz(), 2).unwrap();
        assert_eq!(table.get(&Partition::from_parts(&[1, 1])), Some(&p("u^2*v^2 - u*v")));
        assert_eq!(table.get(&Partition::from_parts(&[2])), Some(&p("u*v")));
        assert_eq!(table.total(), p("u^2*v^2"));
    }

    #[test]
    fn strata_single_point() {
        let b = punctual_surface(3);
        let m = p("1 + u*v + u^2*v^2");
        let table = strata(&b, &m, 1).unwrap();
        assert_eq!(table.rows.len(), 1);
        assert_eq!(table.rows[0].class, &m * b.coeff(1));
    }

    #[test]
    fn strata_hilb2_plane() {
        let table = strata(&punctual_surface(4), &BiPoly::lefschetz_pow(2), 2).unwrap();
        assert_eq!(table.get(&Partition::from_parts(&[2])), Some(&p("u^2*v^2*(1 + u*v)")));
        assert_eq!(table.total(), p("u^4*v^4 + u^3*v^3"));
    }

    #[test]
    fn strata_rejects_large_n() {
        let b = punctual_surface(12);
        assert!(matches!(strata(&b, &BiPoly::one(), 10), Err(Error::TooManyMarkers { .. })));
        assert!(strata(&punctual_surface(2), &BiPoly::one(), 3).is_err());
    }

    #[test]
    fn strata_json_shape() {
        let table = strata(&punctual_curve(1, 2), &BiPoly::lefschetz(), 1).unwrap();
        assert_eq!(
            serde_json::to_string(&table).unwrap(),
            r#"{"n":1,"rows":[{"partition":{"mult":[1]},"class":{"terms":[{"u":1,"v":1,"coef":"1"}]}}]}"#
        );
    }

    #[test]
    fn surface_omega_from_two_surfaces() {
        for s in [MotiveClass::proj(2), "A^1*P^1".parse().unwrap()] {
            let om = omega_from_surface(&s, 6).unwrap().unwrap();
            for n in 1..=6 {
                assert_eq!(om.get(n), Some(&BiPoly::lefschetz_pow(n as u32 - 1)));
            }
        }
    }

    #[test]
    fn effective_shapes() {
        assert!(has_effective_shape(&punctual_curve(3, 8)));
        assert!(has_effective_shape(&punctual_surface(8)));
        assert!(has_effective_shape(&goettsche(&MotiveClass::affine(2), 8).unwrap()));
        let quot_a1 = pow_series(&punctual_curve(2, 8), &BiPoly::lefschetz(), 8).unwrap();
        assert!(has_effective_shape(&quot_a1));
        assert!(!has_effective_shape(&Series::constant(p("1 - u"), 0)));
    }

    #[test]
    fn hodge_diamonds() {
        // P^1
        let rows = hodge_numbers(0, 1, 1);
        let at1: Vec<_> = rows.iter().filter(|e| e.n == 1).map(|e| (e.p, e.q, e.h.clone())).collect();
        assert_eq!(at1, vec![(0, 0, 1.into()), (1, 1, 1.into())]);
        // elliptic curve
        let rows = hodge_numbers(1, 1, 1);
        let at1: Vec<_> = rows.iter().filter(|e| e.n == 1).map(|e| (e.p, e.q, e.h.clone())).collect();
        assert_eq!(at1, vec![(0, 0, 1.into()), (0, 1, 1.into()), (1, 0, 1.into()), (1, 1, 1.into())]);
        // C x P^1 for g = 2: h^{0,1} = h^{1,0} = 2, h^{1,2} = h^{2,1} = 2
        let rows = hodge_numbers(2, 2, 1);
        let h = |p, q| rows.iter().find(|e| e.n == 1 && e.p == p && e.q == q).map(|e| e.h.clone());
        assert_eq!(h(0, 0), Some(1.into()));
        assert_eq!(h(1, 0), Some(2.into()));
        assert_eq!(h(1, 1), Some(2.into()));
        assert_eq!(h(2, 1), Some(2.into()));
        assert_eq!(h(2, 2), Some(1.into()));
        assert!(rows.iter().all(|e| !e.h.is_negative()));
    }
}
