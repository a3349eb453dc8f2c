//! Exact integer and rational arithmetic, sparse polynomials in `u, v` (plus
//! stratum markers) and truncated power series in `t` over them.

mod coeff;
mod json;
mod monomial;
mod parse;
mod poly;
mod series;

pub use coeff::{Coeff, ExactInt, ExactRat};
pub use monomial::{Monomial, Var, MARKERS, NVARS};
pub use poly::{BiPoly, Poly, RatBiPoly};
pub use series::Series;

/// `a + b`.
pub fn poly_add(a: &BiPoly, b: &BiPoly) -> BiPoly {
    a + b
}

/// `a * b`.
pub fn poly_mul(a: &BiPoly, b: &BiPoly) -> BiPoly {
    a * b
}

/// Cauchy product truncated at the smaller order.
pub fn series_mul(a: &Series, b: &Series) -> Series {
    a * b
}

pub fn series_inverse(a: &Series) -> crate::Result<Series> {
    a.inverse()
}

pub fn substitute_t_power(a: &Series, e: usize) -> Series {
    a.substitute_t_power(e)
}
