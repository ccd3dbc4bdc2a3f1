//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failure modes of simulation, circuit construction and experiment runs.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller supplied an argument outside the documented domain.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// An object failed a structural check such as unitarity or Hermiticity.
    #[error("validation failed: {0}")]
    Validation(String),
    /// An iterative numerical routine did not converge.
    #[error("numerical failure: {0}")]
    Numeric(String),
    /// The requested problem size exceeds what a dense routine supports.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// A serialized circuit could not be parsed.
    #[error("parse error on line {line}: {message}")]
    Parse {
        /// One-based line number of the offending input.
        line: usize,
        /// Description of the problem.
        message: String,
    },
    /// Reading or writing a file failed.
    #[error(transparent)]
    Io(#[from] std::io::Error),
    /// Writing CSV output failed.
    #[error(transparent)]
    Csv(#[from] csv::Error),
    /// Writing JSON output failed.
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn argument(message: impl Into<String>) -> Error {
    Error::Argument(message.into())
}

pub(crate) fn validation(message: impl Into<String>) -> Error {
    Error::Validation(message.into())
}
