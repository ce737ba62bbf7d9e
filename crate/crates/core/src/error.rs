use thiserror::Error;

/// Errors produced by the invariant library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("variance mismatch: expected {expected}, found {found}")]
    VarianceMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("work estimate {required} exceeds cap {cap} ({what})")]
    CapExceeded {
        what: &'static str,
        required: u128,
        cap: u64,
    },

    #[error("singular input: {0}")]
    Singular(String),

    #[error("input is not symmetric (max deviation {deviation:e})")]
    NotSymmetric { deviation: f64 },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn shape(msg: impl Into<String>) -> Error {
    Error::ShapeMismatch(msg.into())
}
