use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("unsupported tail: {0}")]
    UnsupportedTail(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("graph construction: {0}")]
    Construction(String),
    #[error("bad argument: {0}")]
    Argument(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
