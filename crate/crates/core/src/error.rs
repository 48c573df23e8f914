use thiserror::Error;

use crate::parser::ParseError;

/// Errors produced by the algebra and enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("field order {0} exceeds the supported cap of 65521")]
    FieldTooLarge(u64),
    #[error("operands live in different fields (F_{0} and F_{1})")]
    FieldMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("point has {got} coordinates, ring has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },
    #[error("zero polynomial in divisor list")]
    ZeroDivisor,
    #[error("ideal is not graded: {0}")]
    NotGraded(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("the ideal is the whole ring")]
    UnitIdeal,
    #[error("enumeration of {requested} points exceeds the cap of {cap}")]
    CapExceeded { requested: u128, cap: u64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
