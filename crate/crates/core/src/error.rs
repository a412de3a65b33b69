use thiserror::Error;

/// Errors raised anywhere in the edge-ring pipeline.
///
/// The variants are grouped by how a caller is expected to react: bad input,
/// a violated mathematical invariant, or a resource guard that refused to run
/// an enumeration that would be too large.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("resource guard tripped: {0}")]
    ResourceGuard(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::InvalidGraph(format!("malformed graph JSON: {e}"))
    }
}
