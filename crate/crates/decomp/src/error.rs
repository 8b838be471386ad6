use std::path::PathBuf;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Malformed file content; `row` is 1-based and counts the header.
    #[error("{path}: row {row}: {msg}")]
    Parse { path: PathBuf, row: usize, msg: String },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    /// A domain-type invariant does not hold.
    #[error("invalid {what}: {msg}")]
    Invalid { what: &'static str, msg: String },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("did not converge after {sweeps} sweeps (residual {residual:.3e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    /// Manifest or input validation failure; maps to exit code 1.
    #[error("validation: {0}")]
    Validation(String),

    /// A pipeline stage failed; maps to exit code 2.
    #[error("stage {stage}: {source}")]
    Stage {
        stage: String,
        #[source]
        source: Box<Error>,
    },

    #[error("oracle instance exceeds enforced bounds: {0}")]
    OracleBounds(String),
}

impl Error {
    pub fn invalid(what: &'static str, msg: impl Into<String>) -> Self {
        Error::Invalid { what, msg: msg.into() }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
