//! Exact scalar, polynomial and rational-function arithmetic over Q and F2.

mod gcd;
mod monomial;
mod poly;
mod ratfunc;
mod scalar;

use thiserror::Error;

pub use gcd::{poly_gcd, poly_gcd_many};
pub use monomial::Monomial;
pub use poly::MultiPoly;
pub use ratfunc::{eval_bilinear, RatFunc};
pub use scalar::{Coeff, Domain, F2, Q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable count mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("length mismatch: {0} entries vs {1} coordinates")]
    LengthMismatch(usize, usize),
}
