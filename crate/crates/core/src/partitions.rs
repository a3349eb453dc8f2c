//! Integer partitions in multiplicity form `(1^a1 2^a2 ... s^as)`.

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::ring::{BiPoly, ExactInt};

/// A partition stored by multiplicities: `mult[i-1]` is the number of parts
/// of size `i`. The last entry is non-zero unless the partition is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    mult: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { mult: Vec::new() }
    }

    /// Trailing zero multiplicities are dropped.
    pub fn from_mult(mut mult: Vec<u32>) -> Self {
        while mult.last() == Some(&0) {
            mult.pop();
        }
        Partition { mult }
    }

    pub fn from_parts(parts: &[usize]) -> Self {
        let mut mult = vec![0u32; parts.iter().copied().max().unwrap_or(0)];
        for &p in parts {
            assert!(p > 0, "parts are positive");
            mult[p - 1] += 1;
        }
        Partition { mult }
    }

    pub fn mult(&self) -> &[u32] {
        &self.mult
    }

    /// Multiplicity of the part size `i >= 1`.
    pub fn multiplicity(&self, i: usize) -> u32 {
        i.checked_sub(1).and_then(|j| self.mult.get(j)).copied().unwrap_or(0)
    }

    /// Largest part (0 for the empty partition).
    pub fn largest(&self) -> usize {
        self.mult.len()
    }

    /// `n = sum i * a_i`.
    pub fn weight(&self) -> usize {
        self.mult.iter().enumerate().map(|(i, &a)| (i + 1) * a as usize).sum()
    }

    /// `||a|| = sum a_i`, the number of parts.
    pub fn norm(&self) -> usize {
        self.mult.iter().map(|&a| a as usize).sum()
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.norm());
        for (i, &a) in self.mult.iter().enumerate().rev() {
            out.extend(std::iter::repeat_n(i + 1, a as usize));
        }
        out
    }

    /// Order of the automorphism group `prod_i S_{a_i}`, i.e. `prod_i a_i!`.
    pub fn aut_order(&self) -> ExactInt {
        self.mult.iter().map(|&a| factorial(a)).product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts().iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn factorial(a: u32) -> ExactInt {
    (1..=a).map(ExactInt::from).product()
}

/// All partitions of `n`, each exactly once.
///
/// Order: part lists in reverse lexicographic order, so `(n)` comes first and
/// `(1^n)` last; equivalently, multiplicity vectors compared from the
/// largest part size down, larger first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    out
}

fn descend(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_parts(prefix));
        return;
    }
    for first in (1..=rest.min(max)).rev() {
        prefix.push(first);
        descend(rest - first, first, prefix, out);
        prefix.pop();
    }
}

pub fn aut_order(alpha: &Partition) -> ExactInt {
    alpha.aut_order()
}

/// `m (m-1) ... (m-k+1)`; the empty product is 1.
pub fn falling_factorial(m: &BiPoly, k: usize) -> BiPoly {
    let mut acc = BiPoly::one();
    for i in 0..k {
        acc = &acc * &(m - &BiPoly::from_int(i as i64));
    }
    acc
}

/// Integer falling factorial, used by the realization over `Z`.
pub fn falling_factorial_int(m: &ExactInt, k: usize) -> ExactInt {
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc *= m - ExactInt::from(i);
    }
    acc
}
