use thiserror::Error;

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input document.
    Parse,
    /// Input parsed but violates a precondition of the requested operation.
    Precondition,
    /// A property guaranteed by theory failed; the input or the arithmetic is corrupt.
    Invariant,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("cyclotomic order {order} exceeds the configured bound {bound}")]
    OrderBound { order: u64, bound: u64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("group of order {order} exceeds the configured bound {bound}")]
    GroupTooLarge { order: usize, bound: usize },

    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),

    #[error(
        "grading violation: [{left}, {right}] has a component on {stray} of degree {stray_degree}, expected degree {expected_degree}"
    )]
    GradingViolation {
        left: String,
        right: String,
        stray: String,
        stray_degree: String,
        expected_degree: String,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not split over the working field: {0}")]
    NonSplit(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse(_) => ErrorClass::Parse,
            Error::InvariantViolation(_) => ErrorClass::Invariant,
            _ => ErrorClass::Precondition,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
