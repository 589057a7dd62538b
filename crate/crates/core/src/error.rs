use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid type: {0}")]
    InvalidType(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("ambiguous result for {what}: candidates {candidates:?}")]
    Tie { what: String, candidates: Vec<String> },
    #[error("not found: {0}")]
    NotFound(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
