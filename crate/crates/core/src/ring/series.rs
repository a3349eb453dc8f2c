use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::{Coeff, ExactInt};
use super::monomial::Monomial;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Power series in `t` known exactly up to and including `t^order`.
///
/// Arithmetic between series of different orders truncates to the smaller
/// order; no operation ever reports a coefficient it does not know.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series<C = ExactInt> {
    order: usize,
    coeffs: Vec<Poly<C>>,
}

impl<C: Coeff> Series<C> {
    /// Takes `coeffs[0..=order]`, padding with zeros if `coeffs` is short.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Poly<C>>) -> Self {
        let mut coeffs: Vec<_> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, Poly::zero());
        Series { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(order, [])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Poly::one(), order)
    }

    pub fn constant(c: Poly<C>, order: usize) -> Self {
        Self::from_coeffs(order, [c])
    }

    /// `c * t^k`.
    pub fn term(c: Poly<C>, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Poly<C>] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Poly<C>> {
        self.coeffs
    }

    /// Coefficient of `t^n`. Panics if `n` exceeds the known order.
    pub fn coeff(&self, n: usize) -> &Poly<C> {
        assert!(n <= self.order, "t^{n} is beyond the truncation order {}", self.order);
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&Poly<C>> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Series { order, coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    /// First `t`-degree at which the two series differ, comparing up to the
    /// smaller order.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| a != b)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&Poly<C>) -> Poly<D>) -> Series<D> {
        Series { order: self.order, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &Poly<C>) -> Self {
        self.map_coeffs(|x| x * c)
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let inv0 = c0
            .as_constant()
            .and_then(|c| c.unit_inverse())
            .ok_or_else(|| Error::NonUnitConstantTerm(c0.to_string()))?;
        let inv0 = Poly::constant(inv0);
        let mut out: Vec<Poly<C>> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for n in 1..=self.order {
            let mut acc = Poly::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc + &self.coeffs[k] * &out[n - k];
                }
            }
            out.push(-(&acc * &inv0));
        }
        Ok(Series { order: self.order, coeffs: out })
    }

    /// `A(t^e)`, truncated at the original order.
    pub fn substitute_t_power(&self, e: usize) -> Self {
        assert!(e >= 1, "substitution t -> t^e needs e >= 1");
        let mut out = Self::zero(self.order);
        for (n, c) in self.coeffs.iter().enumerate() {
            if n * e > self.order {
                break;
            }
            out.coeffs[n * e] = c.clone();
        }
        out
    }

    /// `A(m t)` for a monomial `m`.
    pub fn scale_t(&self, m: &Monomial) -> Self {
        let mut power = Monomial::ONE;
        let mut coeffs = Vec::with_capacity(self.order + 1);
        for c in &self.coeffs {
            coeffs.push(c.mul_monomial(&power));
            power = power.mul(m);
        }
        Series { order: self.order, coeffs }
    }

    /// Adams operation on series: `x -> x^k` for every variable and `t -> t^k`.
    pub fn adams(&self, k: u32) -> Self {
        let mut out = Self::zero(self.order);
        for (n, c) in self.coeffs.iter().enumerate() {
            let target = n * k as usize;
            if target > self.order {
                break;
            }
            out.coeffs[target] = c.adams(k);
        }
        out
    }

    /// Multiplies every coefficient by `n`-dependent factors `f(n)`.
    pub fn map_indexed(&self, f: impl Fn(usize, &Poly<C>) -> Poly<C>) -> Self {
        Series { order: self.order, coeffs: self.coeffs.iter().enumerate().map(|(n, c)| f(n, c)).collect() }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Poly<C>, &Poly<C>) -> Poly<C>) -> Self {
        let order = self.order.min(other.order);
        Series {
            order,
            coeffs: self.coeffs[..=order].iter().zip(&other.coeffs[..=order]).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn cauchy(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut coeffs = vec![Poly::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Series { order, coeffs }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a, C: Coeff> $trait<&'a Series<C>> for &'a Series<C> {
            type Output = Series<C>;
            fn $method(self, rhs: &'a Series<C>) -> Series<C> {
                $body(self, rhs)
            }
        }
        impl<C: Coeff> $trait<Series<C>> for Series<C> {
            type Output = Series<C>;
            fn $method(self, rhs: Series<C>) -> Series<C> {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Series<C>, b: &Series<C>| a.zip_with(b, |x, y| x + y));
forward_binop!(Sub, sub, |a: &Series<C>, b: &Series<C>| a.zip_with(b, |x, y| x - y));
forward_binop!(Mul, mul, |a: &Series<C>, b: &Series<C>| a.cauchy(b));

impl<C: Coeff> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        self.map_coeffs(|c| -c)
    }
}

impl<C: Coeff> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}

impl<C: Coeff> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({self})")
    }
}

impl<C: Coeff> AsRef<Series<C>> for Series<C> {
    fn as_ref(&self) -> &Series<C> {
        self
    }
}
