use core::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Domain errors raised by the algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient dimension must be at least 1")]
    ZeroDimension,
    #[error("not a monomial order: {0}")]
    NotAMonomialOrder(&'static str),
    #[error("minimum of an empty set")]
    EmptySet,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("element is not in the unit ball")]
    NotInUnitBall,
    #[error("zero input where a nonzero element is required")]
    ZeroInput,
    #[error("the tropical value is zero")]
    ZeroTropicalValue,
    #[error("inconsistent maximal-ideal oracle for {0}")]
    InconsistentOracle(&'static str),
    #[error("indeterminate index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("no Bezout multiplier found up to {0}")]
    BezoutBoundExceeded(u64),
}

/// Errors raised while reading polynomial or rational-function text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax {
        pos: usize,
        message: &'static str,
    },
    UnknownVariable {
        pos: usize,
        name: alloc::string::String,
    },
    NegativeExponent {
        pos: usize,
    },
    NotAPolynomial,
    ZeroDenominator {
        pos: usize,
    },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { pos, message } => write!(f, "syntax error at {pos}: {message}"),
            ParseError::UnknownVariable { pos, name } => {
                write!(f, "unknown variable `{name}` at {pos}")
            }
            ParseError::NegativeExponent { pos } => write!(f, "negative exponent at {pos}"),
            ParseError::NotAPolynomial => f.write_str("expression is not a polynomial"),
            ParseError::ZeroDenominator { pos } => {
                write!(f, "ZeroDenominator: division by zero at {pos}")
            }
        }
    }
}

impl core::error::Error for ParseError {}
