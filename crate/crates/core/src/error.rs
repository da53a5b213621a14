use thiserror::Error;

/// Errors raised by the library.
///
/// Invariant violations indicate a bug in an engine (a value that should be
/// integral or polynomial was not), never bad user input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {input:?}: {reason}")]
    InvalidPartition { input: String, reason: String },

    #[error("operation is undefined on the zero polynomial")]
    UndefinedOnZero,

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("pole at t = {at}")]
    Pole { at: String },

    #[error("truncation overflow: result degree {degree} exceeds max degree {max_degree}")]
    TruncationOverflow { degree: usize, max_degree: usize },

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
