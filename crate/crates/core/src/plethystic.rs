//! The lambda-ring structure on `Z[u,v]` and the power structure it induces.
//!
//! Every variable (including the stratum markers) is a line element:
//! `psi_k(x) = x^k`. With this convention `(1-t)^(-f) = prod (1 - u^i v^j t)^(-p_ij)`
//! for `f = sum p_ij u^i v^j`, and
//!
//! ```text
//! Exp(A) = exp( sum_{k>=1} psi_k(A) / k )
//! Log(B) = sum_{k>=1} mu(k)/k psi_k(log B)
//! A(t)^m = Exp(m * Log A)
//! ```
//!
//! `Exp` and `Log` are evaluated through the logarithmic derivative
//! `t B'/B = sum_n c_n t^n`, where `c_n = sum_{d|n} d psi_{n/d}(A_d)`. This
//! is the exponential formula with the denominators collected into a single
//! exact division by `n` per coefficient; a division that leaves a remainder
//! is reported as [`Error::NonIntegralResult`].

use std::ops::Deref;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{falling_factorial_int, partitions_of};
use crate::ring::{BiPoly, ExactInt, ExactRat, Series};

/// A series with constant term exactly 1, the domain of the power map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EffSeries(Series);

/// A series with constant term exactly 0, the domain of `Exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogSeries(Series);

impl EffSeries {
    pub fn new(series: Series) -> Result<Self> {
        let c0 = series.coeff(0);
        if c0.is_one() {
            Ok(EffSeries(series))
        } else {
            Err(Error::ConstantTerm { expected: 1, found: c0.to_string() })
        }
    }

    pub fn one(order: usize) -> Self {
        EffSeries(Series::one(order))
    }

    pub fn series(&self) -> &Series {
        &self.0
    }

    pub fn into_series(self) -> Series {
        self.0
    }

    /// Product of two series with constant term 1.
    pub fn mul(&self, other: &Self) -> Self {
        EffSeries(&self.0 * &other.0)
    }

    pub fn truncate(&self, order: usize) -> Self {
        EffSeries(self.0.truncate(order))
    }
}

impl LogSeries {
    pub fn new(series: Series) -> Result<Self> {
        let c0 = series.coeff(0);
        if c0.is_zero() {
            Ok(LogSeries(series))
        } else {
            Err(Error::ConstantTerm { expected: 0, found: c0.to_string() })
        }
    }

    /// `sum_{n>=1} a_n t^n` from `[a_1, a_2, ...]`.
    pub fn from_terms(order: usize, terms: impl IntoIterator<Item = BiPoly>) -> Self {
        LogSeries(Series::from_coeffs(order, std::iter::once(BiPoly::zero()).chain(terms)))
    }

    pub fn series(&self) -> &Series {
        &self.0
    }

    pub fn into_series(self) -> Series {
        self.0
    }

    pub fn scale(&self, m: &BiPoly) -> Self {
        LogSeries(self.0.scale(m))
    }
}

impl Deref for EffSeries {
    type Target = Series;
    fn deref(&self) -> &Series {
        &self.0
    }
}

impl Deref for LogSeries {
    type Target = Series;
    fn deref(&self) -> &Series {
        &self.0
    }
}

impl AsRef<Series> for EffSeries {
    fn as_ref(&self) -> &Series {
        &self.0
    }
}

impl AsRef<Series> for LogSeries {
    fn as_ref(&self) -> &Series {
        &self.0
    }
}

pub fn adams(f: &BiPoly, k: u32) -> BiPoly {
    f.adams(k)
}

/// `psi_k` on series: variables to their `k`-th powers and `t -> t^k`.
pub fn adams_series(a: &Series, k: u32) -> Series {
    a.adams(k)
}

/// Möbius function by trial division.
pub fn mobius(mut k: usize) -> i64 {
    assert!(k >= 1);
    let mut sign = 1;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            k /= p;
            if k.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if k > 1 {
        sign = -sign;
    }
    sign
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

/// `(1 - t^k)^(-f)`, expanded as `prod (1 - x t^k)^(-c)` over the terms
/// `c * x` of `f`. A negative `c` gives the finite factor `(1 - x t^k)^|c|`.
pub fn geometric_pow(f: &BiPoly, k: usize, order: usize) -> EffSeries {
    assert!(k >= 1, "geometric_pow needs k >= 1");
    let mut acc = Series::one(order);
    for (mono, c) in f.terms() {
        let mut coeffs = vec![BiPoly::zero(); order + 1];
        // binom(-c, j) (-1)^j = c (c+1) ... (c+j-1) / j!
        let mut binom = ExactInt::one();
        let mut power = BiPoly::one();
        let x = BiPoly::monomial(*mono);
        for j in 0..=order / k {
            if j > 0 {
                binom = binom * (c + ExactInt::from(j - 1)) / ExactInt::from(j);
                if binom.is_zero() {
                    break;
                }
                power = &power * &x;
            }
            coeffs[j * k] = power.scale(&binom);
        }
        acc = &acc * &Series::from_coeffs(order, coeffs);
    }
    EffSeries(acc)
}

fn log_derivative_to_adams(c: &[BiPoly], n: usize) -> BiPoly {
    // n A_n = sum_{d|n} mu(d) psi_d(c_{n/d})
    let mut acc = BiPoly::zero();
    for d in divisors(n) {
        let mu = mobius(d);
        if mu != 0 {
            acc = acc + c[n / d].adams(d as u32).scale(&ExactInt::from(mu));
        }
    }
    acc
}

/// Plethystic exponential `Exp(A) = exp(sum_k psi_k(A)/k)`.
pub fn exp_series(a: &LogSeries, order: usize) -> Result<EffSeries> {
    let order = order.min(a.order());
    let a = a.series();
    // c_n = sum_{d|n} d psi_{n/d}(A_d)
    let mut c = vec![BiPoly::zero(); order + 1];
    for (n, cn) in c.iter_mut().enumerate().skip(1) {
        for d in divisors(n) {
            if !a.coeff(d).is_zero() {
                *cn = &*cn + &a.coeff(d).adams((n / d) as u32).scale(&ExactInt::from(d));
            }
        }
    }
    let mut b = Vec::with_capacity(order + 1);
    b.push(BiPoly::one());
    for n in 1..=order {
        let mut acc = BiPoly::zero();
        for k in 1..=n {
            if !c[k].is_zero() {
                acc = acc + &c[k] * &b[n - k];
            }
        }
        let bn = acc.div_exact_scalar(&ExactInt::from(n)).ok_or(Error::NonIntegralResult { index: n })?;
        b.push(bn);
    }
    Ok(EffSeries(Series::from_coeffs(order, b)))
}

/// `Exp(A) = prod_{n>=1} (1 - t^n)^(-A_n)`, the product-of-factors route.
pub fn exp_series_product(a: &LogSeries, order: usize) -> EffSeries {
    let order = order.min(a.order());
    let mut acc = Series::one(order);
    for n in 1..=order {
        let an = a.coeff(n);
        if !an.is_zero() {
            acc = &acc * &geometric_pow(an, n, order).0;
        }
    }
    EffSeries(acc)
}

/// Plethystic logarithm, the inverse of [`exp_series`].
pub fn log_series(b: &EffSeries, order: usize) -> Result<LogSeries> {
    let order = order.min(b.order());
    let b = b.series();
    // t B'/B = C  <=>  n B_n = sum_{k=1}^{n} c_k B_{n-k}
    let mut c = vec![BiPoly::zero(); order + 1];
    for n in 1..=order {
        let mut acc = b.coeff(n).scale(&ExactInt::from(n));
        for (k, ck) in c.iter().enumerate().take(n).skip(1) {
            if !ck.is_zero() && !b.coeff(n - k).is_zero() {
                acc = acc - ck * b.coeff(n - k);
            }
        }
        c[n] = acc;
    }
    let mut out = vec![BiPoly::zero(); order + 1];
    for (n, slot) in out.iter_mut().enumerate().skip(1) {
        *slot = log_derivative_to_adams(&c, n)
            .div_exact_scalar(&ExactInt::from(n))
            .ok_or(Error::NonIntegralResult { index: n })?;
    }
    Ok(LogSeries(Series::from_coeffs(order, out)))
}

/// The power structure `A(t)^m = Exp(m Log A)`, for any `m` in `Z[u,v]`.
pub fn pow_series(a: &EffSeries, m: &BiPoly, order: usize) -> Result<EffSeries> {
    let order = order.min(a.order());
    if m.is_zero() {
        return Ok(EffSeries::one(order));
    }
    let log = log_series(a, order)?;
    exp_series(&log.scale(m), order)
}

/// The power structure on `Z` written out over partitions:
///
/// ```text
/// A(t)^m = 1 + sum_n sum_{a |- n} m (m-1) ... (m-||a||+1) prod_i A_i^{a_i} / prod_i a_i!  t^n
/// ```
///
/// Valid for every integer `m`. Independent of `Exp`/`Log`; used as an oracle.
pub fn pow_stanley(a: &EffSeries, m: &ExactInt, order: usize) -> Result<EffSeries> {
    let order = order.min(a.order());
    let coeffs = (0..=order)
        .map(|i| a.coeff(i).as_constant().ok_or(Error::NonConstantCoefficient { index: i }))
        .collect::<Result<Vec<ExactInt>>>()?;
    let mut out = vec![BiPoly::one()];
    for n in 1..=order {
        let mut sum = ExactRat::zero();
        for alpha in partitions_of(n) {
            let mut prod = falling_factorial_int(m, alpha.norm());
            for (i, &ai) in alpha.mult().iter().enumerate() {
                if ai > 0 {
                    prod *= num_traits::pow(coeffs[i + 1].clone(), ai as usize);
                }
            }
            if !prod.is_zero() {
                sum += ExactRat::new(prod, alpha.aut_order());
            }
        }
        if !sum.is_integer() {
            return Err(Error::NonIntegralResult { index: n });
        }
        out.push(BiPoly::constant(sum.to_integer()));
    }
    Ok(EffSeries(Series::from_coeffs(order, out)))
}

/// `sigma^n(m)`, the `t^n` coefficient of `(1-t)^(-m)`, via Newton's
/// identity `k sigma^k = sum_{j=1}^k psi_j(m) sigma^{k-j}`.
pub fn sigma_n(m: &BiPoly, n: usize) -> BiPoly {
    sigma_upto(m, n).pop().expect("non-empty")
}

/// `[sigma^0(m), ..., sigma^n(m)]`.
pub fn sigma_upto(m: &BiPoly, n: usize) -> Vec<BiPoly> {
    let psi: Vec<BiPoly> = (0..=n).map(|j| if j == 0 { BiPoly::zero() } else { m.adams(j as u32) }).collect();
    let mut out = vec![BiPoly::one()];
    for k in 1..=n {
        let mut acc = BiPoly::zero();
        for j in 1..=k {
            acc = acc + &psi[j] * &out[k - j];
        }
        out.push(
            acc.div_exact_scalar(&ExactInt::from(k)).expect("symmetric powers of integer polynomials are integral"),
        );
    }
    out
}
