//! Exact arithmetic in Q(params): polynomials, rational functions, dense linear algebra.

mod linalg;
mod parse;
mod poly;
mod scalar;

pub use linalg::{Matrix, Vector};
pub use parse::{is_identifier, parse_scalar};
pub(crate) use parse::ScalarParser;
pub use poly::{gcd, Monomial, Polynomial};
pub use scalar::Scalar;
