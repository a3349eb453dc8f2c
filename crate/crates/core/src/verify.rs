//! Reproducible identity-verification suites.
//!
//! Randomized checks draw every instance from its own ChaCha stream derived
//! from `(seed, check, instance)`, so reports do not depend on how rayon
//! schedules the work. Reports are returned sorted by check name.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::motives::{curve_epoly, projective_epoly, specialize, specialize_series, zeta, MotiveClass, Specialization};
use crate::partitions::partitions_of;
use crate::plethystic::{
    exp_series, exp_series_product, geometric_pow, log_series, pow_series, pow_stanley, sigma_n, sigma_upto, EffSeries,
    LogSeries,
};
use crate::quot::{
    bfp_sum, goettsche, has_effective_shape, hodge_product, omega_extract, omega_from_surface, poincare_product,
    punctual_curve, punctual_surface, quot_curve, quot_curve_exp, strata, sym_punctual_check, theorem_a_check,
};
use crate::ring::{BiPoly, ExactInt, Monomial, Series};

pub const DEFAULT_ORDER: usize = 10;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_INSTANCES: usize = 50;

/// Genus and rank grid for the curve identities.
pub const GENERA: [u32; 4] = [0, 1, 2, 3];
pub const RANKS: [u32; 4] = [1, 2, 3, 4];

/// Surfaces used for the Hilbert-scheme identities.
pub const SURFACES: [&str; 3] = ["A^2", "P^2", "P^1*P^1"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    /// `t`-degree of the first differing coefficient, when the failure is a
    /// coefficient mismatch.
    pub first_mismatch: Option<usize>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn from_outcome(check: impl Into<String>, outcome: Outcome) -> Self {
        let (status, first_mismatch) = match outcome {
            Ok(None) => (Status::Pass, None),
            Ok(Some(k)) => (Status::Fail, Some(k)),
            Err(_) => (Status::Fail, None),
        };
        CheckReport { check: check.into(), status, first_mismatch }
    }

    /// Passes iff every instance passes; reports the first failing instance.
    fn from_outcomes(check: impl Into<String>, outcomes: Vec<Outcome>) -> Self {
        let first_bad = outcomes.into_iter().find(|o| !matches!(o, Ok(None)));
        Self::from_outcome(check, first_bad.unwrap_or(Ok(None)))
    }
}

/// `Ok(None)` is a pass, `Ok(Some(k))` a mismatch at `t^k`.
type Outcome = Result<Option<usize>>;

fn same(a: &impl AsRef<Series>, b: &impl AsRef<Series>) -> Option<usize> {
    a.as_ref().first_mismatch(b.as_ref())
}

fn both(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

fn flag(ok: bool) -> Option<usize> {
    (!ok).then_some(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Curve,
    Surface,
    Oracle,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "axioms" => Ok(Suite::Axioms),
            "curve" => Ok(Suite::Curve),
            "surface" => Ok(Suite::Surface),
            "oracle" => Ok(Suite::Oracle),
            "all" => Ok(Suite::All),
            _ => Err(Error::InvalidArgument(format!("unknown suite {s:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Axioms => "axioms",
            Suite::Curve => "curve",
            Suite::Surface => "surface",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub order: usize,
    pub seed: u64,
    /// Random instances per randomized check.
    pub instances: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { order: DEFAULT_ORDER, seed: DEFAULT_SEED, instances: DEFAULT_INSTANCES }
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Vec<CheckReport> {
    let mut reports = match suite {
        Suite::Axioms => axiom_suite(config),
        Suite::Curve => curve_suite(config.order),
        Suite::Surface => surface_suite(config.order),
        Suite::Oracle => oracle_suite(config),
        Suite::All => {
            let mut all = axiom_suite(config);
            all.extend(oracle_suite(config));
            all.extend(curve_suite(config.order));
            all.extend(surface_suite(config.order));
            all
        }
    };
    reports.sort_by(|a, b| a.check.cmp(&b.check));
    reports
}

/// Random instance generators shared by the suites and the tests.
pub mod gen {
    use super::*;

    fn mix(mut z: u64) -> u64 {
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Deterministic generator for instance `index` of the check `salt`.
    pub fn instance_rng(seed: u64, salt: &str, index: usize) -> ChaCha8Rng {
        let salt = salt.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3));
        ChaCha8Rng::seed_from_u64(mix(seed ^ mix(salt ^ mix(index as u64))))
    }

    /// Up to `max_terms` terms with exponents `<= max_exp` in each of
    /// `u, v` and coefficients in `coef`.
    pub fn poly(rng: &mut impl Rng, max_terms: usize, max_exp: u32, coef: std::ops::RangeInclusive<i64>) -> BiPoly {
        let n = rng.gen_range(0..=max_terms);
        BiPoly::from_terms((0..n).map(|_| {
            let m = Monomial::uv(rng.gen_range(0..=max_exp), rng.gen_range(0..=max_exp));
            (m, ExactInt::from(rng.gen_range(coef.clone())))
        }))
    }

    /// Polynomial of total degree `<= max_degree`.
    pub fn poly_total_degree(
        rng: &mut impl Rng,
        max_terms: usize,
        max_degree: u32,
        coef: std::ops::RangeInclusive<i64>,
    ) -> BiPoly {
        let n = rng.gen_range(1..=max_terms);
        BiPoly::from_terms((0..n).map(|_| {
            let i = rng.gen_range(0..=max_degree);
            let j = rng.gen_range(0..=max_degree - i);
            (Monomial::uv(i, j), ExactInt::from(rng.gen_range(coef.clone())))
        }))
    }

    /// Random series with constant term 1 and sparse small coefficients.
    pub fn eff_series(rng: &mut impl Rng, order: usize) -> EffSeries {
        let coeffs = std::iter::once(BiPoly::one()).chain((1..=order).map(|_| poly(rng, 2, 1, -3..=3)));
        EffSeries::new(Series::from_coeffs(order, coeffs)).expect("constant term is 1")
    }

    /// Random series with constant term 0 and non-negative coefficients.
    pub fn effective_log(rng: &mut impl Rng, order: usize) -> LogSeries {
        LogSeries::from_terms(order, (1..=order).map(|_| poly(rng, 2, 1, 0..=3)))
    }

    /// Random series with constant term 0, coefficients of either sign.
    pub fn log(rng: &mut impl Rng, order: usize) -> LogSeries {
        LogSeries::from_terms(order, (1..=order).map(|_| poly(rng, 2, 1, -3..=3)))
    }

    /// Random exponent: total degree `<= 2`.
    pub fn exponent(rng: &mut impl Rng) -> BiPoly {
        poly_total_degree(rng, 3, 2, -3..=3)
    }

    /// Effective exponent: total degree `<= 2`, non-negative coefficients.
    pub fn effective_exponent(rng: &mut impl Rng) -> BiPoly {
        poly_total_degree(rng, 3, 2, 0..=3)
    }

    /// Random integer series `1 + sum a_n t^n`, `a_n` in `[-5, 5]`.
    pub fn constant_series(rng: &mut impl Rng, order: usize) -> EffSeries {
        let coeffs = std::iter::once(BiPoly::one()).chain((1..=order).map(|_| BiPoly::from_int(rng.gen_range(-5..=5))));
        EffSeries::new(Series::from_coeffs(order, coeffs)).expect("constant term is 1")
    }
}

fn randomized(name: &str, config: &VerifyConfig, check: impl Fn(&mut ChaCha8Rng) -> Outcome + Sync) -> CheckReport {
    let outcomes: Vec<Outcome> =
        (0..config.instances).into_par_iter().map(|i| check(&mut gen::instance_rng(config.seed, name, i))).collect();
    CheckReport::from_outcomes(name, outcomes)
}

/// Outcomes of the seven power-structure axioms on one random instance.
pub fn axiom_instance(rng: &mut impl Rng, order: usize) -> [Outcome; 7] {
    let a = gen::eff_series(rng, order);
    let b = gen::eff_series(rng, order);
    let m = gen::exponent(rng);
    let m2 = gen::exponent(rng);
    let e = rng.gen_range(2..=3);
    let pow = |s: &EffSeries, x: &BiPoly| pow_series(s, x, order);
    let one_plus_t = EffSeries::new(Series::from_coeffs(order, [BiPoly::one(), BiPoly::one()])).expect("c0 = 1");
    [
        pow(&a, &BiPoly::zero()).map(|r| same(&r, &Series::one(order))),
        pow(&a, &BiPoly::one()).map(|r| same(&r, &a)),
        (|| Ok(same(&pow(&a.mul(&b), &m)?, &pow(&a, &m)?.mul(&pow(&b, &m)?))))(),
        (|| Ok(same(&pow(&a, &(&m + &m2))?, &pow(&a, &m)?.mul(&pow(&a, &m2)?))))(),
        (|| Ok(same(&pow(&a, &(&m * &m2))?, &pow(&pow(&a, &m)?, &m2)?)))(),
        pow(&one_plus_t, &m).map(|r| {
            let head = Series::from_coeffs(1, [BiPoly::one(), m.clone()]);
            same(&r.truncate(1), &head)
        }),
        (|| {
            let lhs = pow(&a, &m)?.substitute_t_power(e);
            let rhs = pow(&EffSeries::new(a.substitute_t_power(e))?, &m)?;
            Ok(same(&lhs, &rhs))
        })(),
    ]
}

pub const AXIOM_NAMES: [&str; 7] = [
    "axioms.1-zero-exponent",
    "axioms.2-unit-exponent",
    "axioms.3-product-base",
    "axioms.4-sum-exponent",
    "axioms.5-product-exponent",
    "axioms.6-linear-term",
    "axioms.7-substitution",
];

fn axiom_suite(config: &VerifyConfig) -> Vec<CheckReport> {
    let per_instance: Vec<[Outcome; 7]> = (0..config.instances)
        .into_par_iter()
        .map(|i| axiom_instance(&mut gen::instance_rng(config.seed, "axioms", i), config.order))
        .collect();
    let mut columns: Vec<Vec<Outcome>> = vec![Vec::new(); 7];
    for row in per_instance {
        for (col, o) in columns.iter_mut().zip(row) {
            col.push(o);
        }
    }
    AXIOM_NAMES.iter().zip(columns).map(|(name, col)| CheckReport::from_outcomes(*name, col)).collect()
}

/// `pow_stanley(A, m) == pow_series(A, m)` at `u = v = 1`, constant `A`.
pub fn stanley_instance(rng: &mut impl Rng, order: usize) -> Outcome {
    let a = gen::constant_series(rng, order);
    let m = rng.gen_range(-5..=5i64);
    let lattice = pow_series(&a, &BiPoly::from_int(m), order)?;
    let integer = pow_stanley(&a, &ExactInt::from(m), order)?;
    Ok(same(&specialize_series(&lattice, Specialization::Euler), &integer))
}

/// `Euler(A^m) == Euler(A)^m` for polynomial `A` and integer `m`.
pub fn euler_homomorphism_instance(rng: &mut impl Rng, order: usize) -> Outcome {
    let a = gen::eff_series(rng, order);
    let m = rng.gen_range(-4..=4i64);
    let lhs = specialize_series(pow_series(&a, &BiPoly::from_int(m), order)?.series(), Specialization::Euler);
    let a1 = EffSeries::new(specialize_series(&a, Specialization::Euler))?;
    Ok(same(&lhs, &pow_stanley(&a1, &ExactInt::from(m), order)?))
}

/// Exp/Log round trip on an effective input and the dual Exp routes.
pub fn exp_log_instance(rng: &mut impl Rng, order: usize) -> Outcome {
    let a = gen::effective_log(rng, order);
    let b = exp_series(&a, order)?;
    let roundtrip = same(&log_series(&b, order)?, &a);
    let dual = same(&b, &exp_series_product(&a, order));
    Ok(both(roundtrip, dual))
}

/// `Exp(Log B) == B` for `B` with coefficients of both signs.
pub fn log_exp_instance(rng: &mut impl Rng, order: usize) -> Outcome {
    let b = gen::eff_series(rng, order);
    Ok(same(&exp_series(&log_series(&b, order)?, order)?, &b))
}

/// Product route and Adams route of `Exp` on arbitrary-sign input.
pub fn exp_dual_route_instance(rng: &mut impl Rng, order: usize) -> Outcome {
    let a = gen::log(rng, order);
    Ok(same(&exp_series(&a, order)?, &exp_series_product(&a, order)))
}

/// `sum_{i=0}^n sigma^i(x - y) sigma^{n-i}(y) == sigma^n(x)` for `n <= 6`.
pub fn lambda_relation_instance(rng: &mut impl Rng) -> Outcome {
    let x = gen::poly(rng, 3, 2, -3..=3);
    let y = gen::poly(rng, 3, 2, -3..=3);
    let diff = sigma_upto(&(&x - &y), 6);
    let sy = sigma_upto(&y, 6);
    for n in 0..=6 {
        let lhs = (0..=n).fold(BiPoly::zero(), |acc, i| acc + &diff[i] * &sy[n - i]);
        if lhs != sigma_n(&x, n) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// `zeta_Y(L^s t) == (1-t)^(-L^s [Y])`.
pub fn zeta_shift_instance(rng: &mut impl Rng, order: usize) -> Outcome {
    let f = gen::poly(rng, 3, 2, -3..=3);
    let s = rng.gen_range(0..=3u32);
    let lhs = geometric_pow(&f, 1, order).scale_t(&Monomial::uv(s, s));
    let rhs = geometric_pow(&(&BiPoly::lefschetz_pow(s) * &f), 1, order);
    Ok(same(&lhs, &rhs))
}

/// `Exp(m A) == Exp(A)^m` for effective `A` and `m`.
pub fn pushforward_instance(rng: &mut impl Rng, order: usize) -> Outcome {
    let a = gen::effective_log(rng, order);
    let m = gen::effective_exponent(rng);
    let lhs = exp_series(&a.scale(&m), order)?;
    let rhs = pow_series(&exp_series(&a, order)?, &m, order)?;
    Ok(same(&lhs, &rhs))
}

fn ring_axioms_instance(rng: &mut impl Rng, order: usize) -> Outcome {
    let [a, b, c] = [0, 1, 2].map(|_| gen::poly(rng, 4, 3, -5..=5));
    let ok = &(&a * &b) * &c == &a * &(&b * &c)
        && &a * &b == &b * &a
        && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
        && &(&a + &b) + &c == &a + &(&b + &c);
    let s = gen::eff_series(rng, order);
    let inv = s.inverse()?.inverse()?;
    let sub = s.substitute_t_power(2).substitute_t_power(3) == s.substitute_t_power(6)
        && s.substitute_t_power(1) == *s.series();
    Ok(both(flag(ok && sub), same(&inv, &s)))
}

fn oracle_suite(config: &VerifyConfig) -> Vec<CheckReport> {
    let order = config.order;
    let mut reports = vec![
        randomized("oracle.stanley-specialization", config, |rng| stanley_instance(rng, order)),
        randomized("oracle.euler-homomorphism", config, |rng| euler_homomorphism_instance(rng, order)),
        randomized("oracle.exp-log-roundtrip", config, |rng| exp_log_instance(rng, order)),
        randomized("oracle.log-exp-roundtrip", config, |rng| log_exp_instance(rng, order)),
        randomized("oracle.exp-dual-route", config, |rng| exp_dual_route_instance(rng, order)),
        randomized("oracle.lambda-relation", config, lambda_relation_instance),
        randomized("oracle.zeta-shift", config, |rng| zeta_shift_instance(rng, order)),
        randomized("oracle.pushforward", config, |rng| pushforward_instance(rng, order)),
        randomized("oracle.ring-axioms", config, |rng| ring_axioms_instance(rng, order)),
    ];
    reports.push(CheckReport::from_outcome("oracle.motives-catalog", Ok(catalog_check(order))));
    reports
}

fn catalog_check(order: usize) -> Option<usize> {
    let c2 = MotiveClass::curve(2);
    let p1 = MotiveClass::proj(1);
    let product = MotiveClass::product(vec![c2.clone(), p1.clone()]);
    let ok = product.e_poly() == &(c2.e_poly() * p1.e_poly())
        && MotiveClass::curve(0).e_poly() == p1.e_poly()
        && specialize(c2.e_poly(), Specialization::Euler) == BiPoly::from_int(-2)
        && specialize(&projective_epoly(3), Specialization::Euler) == BiPoly::from_int(4)
        && specialize(c2.e_poly(), Specialization::UvEqual) == "1 - 4*u + u^2".parse().expect("valid");
    let shifted = zeta(&MotiveClass::product(vec![MotiveClass::affine(2), c2.clone()]), order);
    let zeta_ok = same(&shifted, &zeta(&c2, order).scale_t(&Monomial::uv(2, 2)));
    both(flag(ok && zeta(&product, order).coeff(0).is_one()), zeta_ok)
}

/// `quot_curve`, `quot_curve_exp` and `hodge_product` agree.
pub fn curve_triple(g: u32, r: u32, order: usize) -> Outcome {
    let z = quot_curve(g, r, order);
    let e = quot_curve_exp(g, r, order)?;
    let h = hodge_product(g, r, order);
    Ok(both(same(&z, &e), same(&z, &h)))
}

/// `bfp_sum(g, r, n)` is the `t^n` coefficient of `quot_curve`.
pub fn curve_bfp(g: u32, r: u32, order: usize) -> Outcome {
    let z = quot_curve(g, r, order);
    Ok((0..=order).find(|&n| &bfp_sum(g, r, n) != z.coeff(n)))
}

pub fn curve_power_of_punctual(g: u32, r: u32, order: usize) -> Outcome {
    let c = theorem_a_check(&MotiveClass::curve(g), &punctual_curve(r, order), &quot_curve(g, r, order), order)?;
    Ok(c.first_mismatch)
}

pub fn curve_poincare(g: u32, r: u32, order: usize) -> Outcome {
    let lhs = specialize_series(&hodge_product(g, r, order), Specialization::UvEqual);
    Ok(same(&lhs, &poincare_product(g, r, order)))
}

/// `Omega_1 = [P^{r-1}]` and `Omega_n = 0` for `n >= 2`.
pub fn curve_omega(r: u32, order: usize) -> Outcome {
    let om = omega_extract(&punctual_curve(r, order), order)?;
    Ok((1..=order).find(|&n| {
        let expected = if n == 1 { projective_epoly(r - 1) } else { BiPoly::zero() };
        om.get(n) != Some(&expected)
    }))
}

/// Row sums equal the total coefficient and the stratum `(n)` equals `m B_n`.
pub fn strata_consistency(b: &EffSeries, m: &BiPoly, nmax: usize) -> Outcome {
    let total = pow_series(b, m, nmax)?;
    for n in 1..=nmax {
        let table = strata(b, m, n)?;
        let deepest = partitions_of(n).into_iter().next().expect("(n) exists");
        let ok = &table.total() == total.coeff(n) && table.get(&deepest) == Some(&(m * b.coeff(n)));
        if !ok {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

fn curve_suite(order: usize) -> Vec<CheckReport> {
    let grid: Vec<(u32, u32)> = GENERA.iter().flat_map(|&g| RANKS.iter().map(move |&r| (g, r))).collect();
    let mut reports: Vec<CheckReport> = grid
        .par_iter()
        .flat_map_iter(|&(g, r)| {
            let tag = format!("g{g}.r{r}");
            [
                CheckReport::from_outcome(format!("curve.triple.{tag}"), curve_triple(g, r, order)),
                CheckReport::from_outcome(format!("curve.bfp.{tag}"), curve_bfp(g, r, order)),
                CheckReport::from_outcome(
                    format!("curve.power-of-punctual.{tag}"),
                    curve_power_of_punctual(g, r, order),
                ),
                CheckReport::from_outcome(format!("curve.poincare.{tag}"), curve_poincare(g, r, order)),
            ]
        })
        .collect();
    for r in RANKS {
        reports.push(CheckReport::from_outcome(format!("curve.omega-vanishing.r{r}"), curve_omega(r, order)));
        reports.push(CheckReport::from_outcome(
            format!("curve.sym-punctual.r{r}"),
            Ok(sym_punctual_check(r, order).first_mismatch),
        ));
        let base = punctual_curve(r, order);
        let quot_a1 = pow_series(&base, &BiPoly::lefschetz(), order);
        reports.push(CheckReport::from_outcome(
            format!("curve.effective.r{r}"),
            quot_a1.map(|q| flag(has_effective_shape(&base) && has_effective_shape(&q))),
        ));
    }
    let nmax = order.min(6);
    reports.push(CheckReport::from_outcome(
        "curve.strata.r1",
        strata_consistency(&punctual_curve(1, nmax), &BiPoly::lefschetz(), nmax),
    ));
    reports.push(CheckReport::from_outcome(
        "curve.strata.r2",
        strata_consistency(&punctual_curve(2, nmax), &curve_epoly(1), nmax),
    ));
    reports
}

fn surface_suite(order: usize) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    let punctual = punctual_surface(order);
    for name in SURFACES {
        let s: MotiveClass = name.parse().expect("catalog descriptor");
        let outcome =
            goettsche(&s, order).and_then(|z| theorem_a_check(&s, &punctual, &z, order)).map(|c| c.first_mismatch);
        reports.push(CheckReport::from_outcome(format!("surface.power-of-punctual.{name}"), outcome));
        let nmax = order.min(6);
        reports.push(CheckReport::from_outcome(
            format!("surface.strata.{name}"),
            strata_consistency(&punctual.truncate(nmax), s.e_poly(), nmax),
        ));
    }
    let omega = omega_extract(&punctual, order)
        .map(|om| (1..=order).find(|&n| om.get(n) != Some(&BiPoly::lefschetz_pow(n as u32 - 1))));
    reports.push(CheckReport::from_outcome("surface.omega", omega));
    for name in ["P^2", "A^1*P^1"] {
        let s: MotiveClass = name.parse().expect("catalog descriptor");
        let outcome = omega_from_surface(&s, order).map(|om| match om {
            None => Some(0),
            Some(om) => (1..=order).find(|&n| om.get(n) != Some(&BiPoly::lefschetz_pow(n as u32 - 1))),
        });
        reports.push(CheckReport::from_outcome(format!("surface.omega-cancellation.{name}"), outcome));
    }
    // Hilb^2(A^2) = (Sym^2 A^2 minus the diagonal) plus (A^2 x P^1)
    let l = |k| BiPoly::lefschetz_pow(k);
    let stratified = (l(4) - l(2)) + &l(2) * &(l(0) + l(1));
    let hilb2 = goettsche(&MotiveClass::affine(2), order.max(2)).map(|z| flag(z.coeff(2) == &stratified));
    reports.push(CheckReport::from_outcome("surface.hilb2-stratification", hilb2));
    let eff = goettsche(&MotiveClass::affine(2), order)
        .map(|z| flag(has_effective_shape(&punctual) && has_effective_shape(&z)));
    reports.push(CheckReport::from_outcome("surface.effective", eff));
    reports
}
