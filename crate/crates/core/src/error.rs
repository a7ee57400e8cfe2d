use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("need at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },

    #[error("non-finite coordinate {0}")]
    NonFinite(String),

    #[error("polygon is not convex at vertex {index}")]
    NonConvex { index: usize },

    #[error("polygon is degenerate: {0}")]
    Degenerate(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("stream is empty")]
    EmptyStream,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("ratio undefined: lower bound or oracle radius is zero")]
    UndefinedRatio,
}
