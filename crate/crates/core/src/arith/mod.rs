//! Exact scalars over Q and Q(x) for a single named parameter x.

mod parse;
mod poly;
mod scalar;

pub use parse::parse_scalar;
pub use poly::{LaurentPoly, Param};
pub use scalar::{RationalFunction, Scalar};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameter mismatch: {0} vs {1}")]
    ParameterMismatch(Param, Param),
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
