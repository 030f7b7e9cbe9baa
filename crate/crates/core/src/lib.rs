//! Exact arithmetic for degenerate Frobenius-Euler polynomials and their
//! relatives, with a generating-function oracle and identity checkers.

pub mod egf;
pub mod error;
pub mod families;
pub mod numeric;
pub mod stirling;
pub mod verify;

pub use error::{Error, Result};
pub use numeric::{Poly, Rational};
