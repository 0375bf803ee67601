use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero input rejected")]
    ZeroInput,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn pre(msg: impl Into<String>) -> Error {
        Error::Precondition(msg.into())
    }
}
