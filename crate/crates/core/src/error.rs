use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("polynomial syntax error: {0}")]
    PolySyntax(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("inhomogeneous column {column}")]
    Inhomogeneous { column: usize },

    #[error("index {index} outside 0..={max}")]
    IndexOutOfRange { index: i64, max: i64 },

    #[error("module is not locally free: {0}")]
    NotLocallyFree(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
