use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("size mismatch: {0}")]
    Size(String),
    #[error("not central: {0}")]
    NotCentral(String),
    #[error("operator leaves the slice: {0}")]
    OutOfSlice(String),
    #[error("requires a commutative coefficient ring")]
    NonCommutative,
}

pub type Result<T> = std::result::Result<T, Error>;
