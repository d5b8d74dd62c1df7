//! Exact computations in tropical differential algebra.
//!
//! The crate models the field of multivariate power-series fractions
//! `K((t1, ..., tm))` by fractions of polynomials with rational coefficients,
//! together with
//!
//! * the idempotent semiring of vertex polynomials `VB[t]` and its fraction
//!   semifield `VB(t)` ([`vertex`]),
//! * the tropical valuation `trop`, its unit ball, and the residue maps of the
//!   maximal ideals attached to monomial orders ([`series`], [`order`]),
//! * differential polynomials, weight vectors of Boolean power series,
//!   `w`-translations and initial forms ([`diff`]).
//!
//! Everything is exact. The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod diff;
pub mod error;
pub mod exponent;
pub mod feasibility;
pub mod order;
pub mod parse;
pub mod poly;
pub mod series;
pub mod vertex;

pub use diff::{BooleanWeight, DiffMonomial, DiffPoly, DiffVar, SubstitutionKernel};
pub use error::{Error, ParseError, Result};
pub use exponent::Exponent;
pub use order::{MonomialOrder, OrderKind};
pub use poly::QPoly;
pub use series::RationalFunction;
pub use vertex::{VertexFraction, VertexPoly};

/// Exact rational numbers used for every coefficient.
pub type Rational = num_rational::BigRational;
