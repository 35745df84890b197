use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or mismatched input (degrees, lengths, fields).
    #[error("input error: {0}")]
    Input(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// A configured enumeration or size cap was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),

    #[error("division by zero")]
    DivisionByZero,

    /// A result the theory guarantees did not materialize; signals a bug.
    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("verification failed in clause ({clause}): {message}")]
    Verification { clause: String, message: String },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Verification { .. } | Error::Consistency(_) => 1,
            Error::Input(_) | Error::Parse { .. } | Error::DivisionByZero => 2,
            Error::Resource(_) => 3,
        }
    }
}
