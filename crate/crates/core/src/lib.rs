pub mod checkers;
pub mod constructions;
pub mod corpus;
mod error;
pub mod exactnum;
pub mod identity;
pub mod io;
pub mod structures;

pub use error::Error;
pub use exactnum::{parse_scalar, Matrix, Scalar, Vector};
pub use num_rational::BigRational;
