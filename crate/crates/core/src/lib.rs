//! Power structures and plethystic operations on truncated power series over
//! `Z[u,v]`, with the generating functions of Quot schemes of points at the
//! level of E-polynomials.
//!
//! The layers, bottom-up:
//!
//! - [`ring`]: exact polynomials and truncated series.
//! - [`partitions`]: partitions in multiplicity form.
//! - [`plethystic`]: Adams operations, `Exp`/`Log`, symmetric powers and the
//!   power map `A(t)^m`.
//! - [`motives`]: E-polynomials of standard varieties and their zeta series.
//! - [`quot`]: Quot-scheme series and the identities relating them.
//! - [`verify`]: reproducible identity-verification suites.

pub mod error;
pub mod motives;
pub mod partitions;
pub mod plethystic;
pub mod quot;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{BiPoly, ExactInt, ExactRat, Monomial, Poly, Series, Var};
