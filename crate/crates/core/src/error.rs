use thiserror::Error;

/// Errors raised across the kernelization pipeline and its oracles.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The input lies outside the operation's domain (e.g. a disconnected
    /// graph where connectivity is required).
    #[error("domain error: {0}")]
    Domain(String),

    /// A caller broke a documented precondition, or a checked postcondition
    /// did not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("search budget of {limit} nodes exhausted in {context}")]
    Budget { limit: u64, context: String },

    #[error("search cancelled in {0}")]
    Cancelled(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
