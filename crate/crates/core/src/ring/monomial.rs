use std::cmp::Ordering;

/// Number of stratum marker variables `s1..s9`.
pub const MARKERS: usize = 9;

/// Total number of exponent slots: `u`, `v`, then the markers.
pub const NVARS: usize = 2 + MARKERS;

/// Index of a variable in an exponent vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    U,
    V,
    /// Stratum marker `s_i`, `1 <= i <= 9`.
    S(usize),
}

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::U => 0,
            Var::V => 1,
            Var::S(i) => {
                assert!((1..=MARKERS).contains(&i), "marker s{i} out of range");
                1 + i
            }
        }
    }

    pub fn name(index: usize) -> String {
        match index {
            0 => "u".to_owned(),
            1 => "v".to_owned(),
            i => format!("s{}", i - 1),
        }
    }
}

/// Exponent vector over `(u, v, s1, ..., s9)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var, exp: u32) -> Self {
        let mut m = Self::ONE;
        m.0[v.index()] = exp;
        m
    }

    pub fn uv(u: u32, v: u32) -> Self {
        let mut m = Self::ONE;
        m.0[0] = u;
        m.0[1] = v;
        m
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = *self;
        for a in out.0.iter_mut() {
            *a = a.checked_mul(k).expect("exponent overflow");
        }
        out
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a = a.checked_sub(b)?;
        }
        Some(out)
    }

    pub fn has_markers(&self) -> bool {
        self.0[2..].iter().any(|&e| e != 0)
    }

    /// Splits into the `(u, v)` part and the marker part.
    pub fn split_markers(&self) -> (Monomial, Monomial) {
        let mut base = *self;
        let mut markers = *self;
        base.0[2..].fill(0);
        markers.0[..2].fill(0);
        (base, markers)
    }

    /// Order used for display and serialization: total degree ascending,
    /// then `u` before `v` before markers within a degree.
    pub fn display_cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}
