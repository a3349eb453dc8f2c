use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::{Coeff, ExactInt, ExactRat};
use super::monomial::{Monomial, Var};

/// Sparse polynomial in `u, v` and the marker variables `s1..s9`.
///
/// Terms are kept sorted by exponent vector with no zero coefficients, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<C> {
    terms: Vec<(Monomial, C)>,
}

/// Integer polynomial: the home of E-polynomials.
pub type BiPoly = Poly<ExactInt>;

/// Rational polynomial, used for intermediate values only.
pub type RatBiPoly = Poly<ExactRat>;

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v, 1))
    }

    /// `uv`, the E-polynomial of the affine line.
    pub fn lefschetz() -> Self {
        Self::monomial(Monomial::uv(1, 1))
    }

    /// `(uv)^k`.
    pub fn lefschetz_pow(k: u32) -> Self {
        Self::monomial(Monomial::uv(k, k))
    }

    /// Builds a polynomial from arbitrary terms, combining repeats and
    /// dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut terms: Vec<_> = terms.into_iter().collect();
        terms.sort_by_key(|a| a.0);
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => lc.add_ref(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    fn from_map(map: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by_key(|a| a.0);
        Poly { terms }
    }

    /// Terms in ascending exponent-vector order.
    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    /// Terms in display order (see [`Monomial::display_cmp`]).
    pub fn display_terms(&self) -> Vec<&(Monomial, C)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| a.0.display_cmp(&b.0));
        t
    }

    /// Number of non-zero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.binary_search_by(|(tm, _)| tm.cmp(m)).map(|i| self.terms[i].1.clone()).unwrap_or_else(|_| C::zero())
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&Monomial::ONE)
    }

    /// The value if the polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn has_markers(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.has_markers())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x.mul_ref(c))).filter(|(_, x)| !x.is_zero()).collect() }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        // multiplying every exponent vector by the same monomial keeps the order
        Poly { terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect() }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Adams operation: every variable `x` is replaced by `x^k`.
    pub fn adams(&self, k: u32) -> Self {
        assert!(k >= 1, "Adams operations are indexed by k >= 1");
        Poly { terms: self.terms.iter().map(|(m, c)| (m.pow(k), c.clone())).collect() }
    }

    /// Substitutes `v := u`.
    pub fn set_v_to_u(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut e = *m;
            e.0[0] += e.0[1];
            e.0[1] = 0;
            (e, c.clone())
        }))
    }

    /// Evaluates with every variable set to 1.
    pub fn eval_at_one(&self) -> C {
        let mut acc = C::zero();
        for (_, c) in &self.terms {
            acc.add_ref(c);
        }
        acc
    }

    /// Divides every coefficient by `d`, failing unless all divisions are exact.
    pub fn div_exact_scalar(&self, d: &C) -> Option<Self> {
        let terms = self.terms.iter().map(|(m, c)| c.div_exact(d).map(|q| (*m, q))).collect::<Option<Vec<_>>>()?;
        Some(Poly { terms })
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lead_m, lead_c) = divisor.terms.last()?;
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.last() {
            let qm = m.div(lead_m)?;
            let qc = c.div_exact(lead_c)?;
            let step = Poly::term(qm, qc.clone());
            rem = &rem - &(&step * divisor);
            quotient.push((qm, qc));
        }
        Some(Self::from_terms(quotient))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Drops every term containing a marker variable.
    pub fn strip_markers(&self) -> Self {
        Poly { terms: self.terms.iter().filter(|(m, _)| !m.has_markers()).cloned().collect() }
    }

    /// Sets every marker variable to 1.
    pub fn forget_markers(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.split_markers().0, c.clone())))
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let rhs = |c: &C| if negate_other { c.neg_ref() } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (am, ac) = &self.terms[i];
            let (bm, bc) = &other.terms[j];
            match am.cmp(bm) {
                std::cmp::Ordering::Less => {
                    out.push((*am, ac.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*bm, rhs(bc)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let mut c = ac.clone();
                    c.add_ref(&rhs(bc));
                    if !c.is_zero() {
                        out.push((*am, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (*m, rhs(c))));
        Poly { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let [(m, c)] = other.terms.as_slice() {
            return self.mul_monomial(m).scale(c);
        }
        if let [(m, c)] = self.terms.as_slice() {
            return other.mul_monomial(m).scale(c);
        }
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.terms.len().max(other.terms.len()) * 2);
        for (am, ac) in &self.terms {
            for (bm, bc) in &other.terms {
                let p = ac.mul_ref(bc);
                acc.entry(am.mul(bm)).and_modify(|x| x.add_ref(&p)).or_insert(p);
            }
        }
        Self::from_map(acc)
    }
}

impl BiPoly {
    pub fn to_rational(&self) -> RatBiPoly {
        self.map_coeffs(|c| ExactRat::from_integer(c.clone()))
    }
}

impl RatBiPoly {
    /// The integer polynomial with the same coefficients, if every
    /// coefficient is integral.
    pub fn to_integer(&self) -> Option<BiPoly> {
        let terms = self
            .terms()
            .iter()
            .map(|(m, c)| c.is_integer().then(|| (*m, c.to_integer())))
            .collect::<Option<Vec<_>>>()?;
        Some(Poly { terms })
    }
}

impl<C: Coeff> From<i64> for Poly<C> {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a, C: Coeff> $trait<&'a Poly<C>> for &'a Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &'a Poly<C>) -> Poly<C> {
                $body(self, rhs)
            }
        }
        impl<C: Coeff> $trait<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: Poly<C>) -> Poly<C> {
                $body(&self, &rhs)
            }
        }
        impl<'a, C: Coeff> $trait<&'a Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $method(self, rhs: &'a Poly<C>) -> Poly<C> {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Poly<C>, b: &Poly<C>| a.merge(b, false));
forward_binop!(Sub, sub, |a: &Poly<C>, b: &Poly<C>| a.merge(b, true));
forward_binop!(Mul, mul, |a: &Poly<C>, b: &Poly<C>| a.product(b));

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c.neg_ref())).collect() }
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

/// Renders in the input grammar, e.g. `1 - 2*u - 2*v + u*v`.
impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.display_terms().into_iter().enumerate() {
            let mut coef = c.to_string();
            let negative = coef.starts_with('-');
            if negative {
                coef.remove(0);
            }
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            // rational coefficients are parenthesised so the output re-parses
            // as a product
            let coef = if coef.contains('/') { format!("({coef})") } else { coef };
            let vars = monomial_text(m);
            match (coef.as_str(), vars.is_empty()) {
                (_, true) => f.write_str(&coef)?,
                ("1", false) => f.write_str(&vars)?,
                (_, false) => write!(f, "{coef}*{vars}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

fn monomial_text(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(Var::name(i)),
            _ => parts.push(format!("{}^{e}", Var::name(i))),
        }
    }
    parts.join("*")
}
