use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("invalid order: {0}")]
    InvalidOrder(String),

    #[error("rank mismatch: order has rank {expected}, element has rank {found}")]
    RankMismatch { expected: usize, found: usize },

    /// The certified row range would need more rows than the caller allowed.
    #[error("window-insufficient: certificate needs {needed} rows, limit is {limit}")]
    WindowInsufficient { needed: usize, limit: usize },

    #[error("window-too-short: {0}")]
    WindowTooShort(String),

    /// Input vector is not homogeneous of the degree the operation expects.
    #[error("wrong degree: {0}")]
    WrongDegree(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
