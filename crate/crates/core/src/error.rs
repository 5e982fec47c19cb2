//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by construction, numerics, or I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// Vector or image dimensions do not agree.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A parameter is outside its valid range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A dense-only operation was requested on a problem that is too large.
    #[error("problem too large for dense computation: n = {n}, limit {limit}")]
    TooLarge { n: usize, limit: usize },

    /// An iterative method failed to converge or a linear solve broke down.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// The step-size condition for the gradient step is violated.
    #[error("step size rho = {rho} does not exceed beta/2 = {half_beta} for the frozen filter")]
    StepSize { rho: f64, half_beta: f64 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Image decoding or encoding failed.
    #[error("image format error: {0}")]
    ImageFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}
