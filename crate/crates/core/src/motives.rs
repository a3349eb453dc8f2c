//! E-polynomials of the standard varieties and their zeta series.
//!
//! E-polynomials use the compactly supported convention, so `E(A^d) = (uv)^d`
//! and `E` is both multiplicative and additive on locally closed strata.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::plethystic::{geometric_pow, EffSeries};
use crate::ring::{BiPoly, ExactInt, Series};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Descriptor {
    Point,
    /// Affine space `A^d`.
    Affine(u32),
    /// Projective space `P^n`.
    Proj(u32),
    /// Smooth projective curve of genus `g`.
    Curve(u32),
    /// `L^s`, the class of `A^s`.
    Lefschetz(u32),
    Product(Vec<MotiveClass>),
    Raw(BiPoly),
}

/// A named variety together with its E-polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotiveClass {
    descriptor: Descriptor,
    epoly: BiPoly,
}

impl MotiveClass {
    fn new(descriptor: Descriptor) -> Self {
        let epoly = match &descriptor {
            Descriptor::Point => BiPoly::one(),
            Descriptor::Affine(d) | Descriptor::Lefschetz(d) => BiPoly::lefschetz_pow(*d),
            Descriptor::Proj(n) => projective_epoly(*n),
            Descriptor::Curve(g) => curve_epoly(*g),
            Descriptor::Product(fs) => fs.iter().fold(BiPoly::one(), |acc, f| &acc * &f.epoly),
            Descriptor::Raw(p) => p.clone(),
        };
        MotiveClass { descriptor, epoly }
    }

    pub fn point() -> Self {
        Self::new(Descriptor::Point)
    }

    pub fn affine(d: u32) -> Self {
        Self::new(Descriptor::Affine(d))
    }

    pub fn proj(n: u32) -> Self {
        Self::new(Descriptor::Proj(n))
    }

    pub fn curve(g: u32) -> Self {
        Self::new(Descriptor::Curve(g))
    }

    pub fn lefschetz(s: u32) -> Self {
        Self::new(Descriptor::Lefschetz(s))
    }

    pub fn product(factors: Vec<MotiveClass>) -> Self {
        Self::new(Descriptor::Product(factors))
    }

    pub fn raw(p: BiPoly) -> Self {
        Self::new(Descriptor::Raw(p))
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    pub fn e_poly(&self) -> &BiPoly {
        &self.epoly
    }
}

/// `sum_{i=0}^{n} (uv)^i`.
pub fn projective_epoly(n: u32) -> BiPoly {
    (0..=n).fold(BiPoly::zero(), |acc, i| acc + BiPoly::lefschetz_pow(i))
}

/// `1 - g u - g v + uv`.
pub fn curve_epoly(g: u32) -> BiPoly {
    let g = ExactInt::from(g);
    let u = BiPoly::var(crate::ring::Var::U);
    let v = BiPoly::var(crate::ring::Var::V);
    BiPoly::one() - (u + v).scale(&g) + BiPoly::lefschetz()
}

pub fn e_poly(m: &MotiveClass) -> BiPoly {
    m.epoly.clone()
}

/// Kapranov zeta function `sum_n E(Sym^n Y) t^n = (1-t)^(-E(Y))`.
pub fn zeta(m: &MotiveClass, order: usize) -> EffSeries {
    geometric_pow(&m.epoly, 1, order)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Specialization {
    /// `v := u`: signed Poincaré polynomials.
    UvEqual,
    /// `u := 1, v := 1`: Euler characteristics.
    Euler,
}

impl FromStr for Specialization {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "uv_equal" | "uv-equal" | "poincare" => Ok(Specialization::UvEqual),
            "euler" => Ok(Specialization::Euler),
            _ => Err(Error::InvalidArgument(format!("unknown specialization {s:?}"))),
        }
    }
}

pub fn specialize(f: &BiPoly, mode: Specialization) -> BiPoly {
    match mode {
        Specialization::UvEqual => f.set_v_to_u(),
        Specialization::Euler => BiPoly::constant(f.eval_at_one()),
    }
}

pub fn specialize_series(s: &Series, mode: Specialization) -> Series {
    s.map_coeffs(|c| specialize(c, mode))
}

impl fmt::Display for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.descriptor {
            Descriptor::Point => f.write_str("point"),
            Descriptor::Affine(d) => write!(f, "A^{d}"),
            Descriptor::Proj(n) => write!(f, "P^{n}"),
            Descriptor::Curve(g) => write!(f, "curve({g})"),
            Descriptor::Lefschetz(s) => write!(f, "L^{s}"),
            Descriptor::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join("*"))
            }
            Descriptor::Raw(p) => write!(f, "raw({p})"),
        }
    }
}

/// Descriptor grammar: `point`, `A^d`, `P^n`, `curve(g)`, `L^s`, `raw(<poly>)`,
/// and products of these joined by `*`.
impl FromStr for MotiveClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let factors = split_top_level(s)?;
        let mut parsed = factors.into_iter().map(parse_factor).collect::<Result<Vec<_>, _>>()?;
        if parsed.len() == 1 {
            Ok(parsed.pop().expect("one factor"))
        } else {
            Ok(MotiveClass::product(parsed))
        }
    }
}

fn split_top_level(s: &str) -> Result<Vec<&str>, Error> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse { offset: i, message: "unbalanced ')'".into() });
                }
            }
            '*' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse { offset: s.len(), message: "unbalanced '('".into() });
    }
    out.push(&s[start..]);
    Ok(out)
}

fn parse_factor(raw: &str) -> Result<MotiveClass, Error> {
    let s = raw.trim();
    let bad = || Error::Parse { offset: 0, message: format!("unknown class descriptor {s:?}") };
    let number = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    if s == "point" {
        return Ok(MotiveClass::point());
    }
    if let Some(inner) = s.strip_prefix("raw(").and_then(|t| t.strip_suffix(')')) {
        return Ok(MotiveClass::raw(inner.parse()?));
    }
    if let Some(inner) = s.strip_prefix("curve(").and_then(|t| t.strip_suffix(')')) {
        return Ok(MotiveClass::curve(number(inner)?));
    }
    if let Some(d) = s.strip_prefix("A^") {
        return Ok(MotiveClass::affine(number(d)?));
    }
    if let Some(n) = s.strip_prefix("P^") {
        return Ok(MotiveClass::proj(number(n)?));
    }
    if let Some(k) = s.strip_prefix("L^") {
        return Ok(MotiveClass::lefschetz(number(k)?));
    }
    Err(bad())
}
