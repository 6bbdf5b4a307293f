use thiserror::Error;

/// Errors raised by the algebra constructions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("path vector is not homogeneous")]
    NotHomogeneous,

    #[error("path vector has a term that is not a closed cycle")]
    NotClosed,

    #[error("not a superpotential: {0}")]
    NotSuperpotential(String),

    #[error("shuffle lift failed: {0}")]
    NonComposableLift(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("search space too large: {arrows} arrows exceeds the limit of {limit}")]
    SearchLimit { arrows: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
