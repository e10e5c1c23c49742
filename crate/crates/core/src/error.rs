use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact")]
    NonExactDivision,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("series expansion needs a denominator with constant term ±1, found {0}")]
    NonUnitSeriesDenominator(BigInt),

    #[error("braid token {position} ({token:?}): {reason}")]
    BraidParse {
        position: usize,
        token: String,
        reason: String,
    },

    #[error("index {index} out of range for {n} strands")]
    IndexOutOfRange { index: i64, n: usize },

    #[error("strand count mismatch: expected {expected}, found {found}")]
    StrandMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A structural identity that must hold failed; this means a bug or a
    /// false mathematical claim, never bad user input.
    #[error("identity check failed: {0}")]
    Identity(String),
}

impl Error {
    /// True when the error was caused by the caller's input rather than by a
    /// failed internal identity.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Identity(_) | Error::NonExactDivision)
    }
}
