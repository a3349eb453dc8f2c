use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Reduced fraction of arbitrary-precision integers with positive denominator.
pub type ExactRat = BigRational;

/// An exact coefficient ring for [`Poly`](super::Poly).
pub trait Coeff: Clone + Eq + Debug + Display + FromStr + Zero + One + Send + Sync {
    fn from_i64(n: i64) -> Self;
    fn add_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Multiplicative inverse, if `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
    /// `self / d` when the quotient stays in the ring.
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

impl Coeff for ExactInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }

    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

impl Coeff for ExactRat {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
}
