use thiserror::Error;

use crate::family::Id;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("duplicate id {0}")]
    DuplicateId(Id),

    #[error("unknown id {0}")]
    UnknownId(Id),

    #[error("id {0} appears on both sides of the certificate")]
    OverlappingSides(Id),

    #[error("missing part labels: {0}")]
    MissingPartLabels(String),

    #[error("instance of size {size} exceeds the oracle cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    /// Raised when a finder's case analysis runs out of cases. The underlying
    /// argument guarantees an exit, so this always indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
