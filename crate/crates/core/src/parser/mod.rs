//! Expression and parameterization-file front end.
//!
//! Grammar for polynomial expressions:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := ('-' | '+')* factor ('*' factor)*
//! factor := base ('^' natural)?
//! base   := natural | identifier | '(' expr ')'
//! ```
//!
//! There is no implicit multiplication: `y1y2` is a single identifier.

mod expr;
mod spec_file;

use thiserror::Error;

pub use expr::{parse_polynomial, parse_polynomial_at};
pub use spec_file::{parse_spec, Mode, ParameterizationSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected {found}, expected {expected}")]
    Unexpected { found: String, expected: String },
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("negative exponents are not supported; put the factor in the denominator")]
    NegativeExponent,
    #[error("exponent {0} is too large")]
    ExponentTooLarge(u64),
    #[error("q = {0} is not a prime in the supported range")]
    NotPrime(u64),
    #[error("denominator g{0} is the zero polynomial")]
    ZeroDenominator(usize),
    #[error("variable `{0}` declared twice")]
    DuplicateVariable(String),
    #[error("key `{0}` given twice")]
    DuplicateKey(String),
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("missing key `{0}`")]
    MissingKey(String),
    #[error("invalid value for `{key}`: {reason}")]
    InvalidValue { key: String, reason: String },
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, column, kind }
    }
}
