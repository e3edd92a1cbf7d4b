//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, RealignError>;

/// Errors produced by corpus generation, model evaluation, training, and IO.
#[derive(Debug, Error)]
pub enum RealignError {
    /// An operation received an empty input where at least one element is required.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// A numeric input or intermediate was NaN or infinite.
    #[error("non-finite value: {0}")]
    NonFinite(String),

    /// Vector or matrix dimensions do not line up.
    #[error("shape mismatch in {context}: expected {expected}, got {got}")]
    ShapeMismatch {
        context: String,
        expected: usize,
        got: usize,
    },

    /// A value violates a domain precondition (range, normalization, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A configuration value is invalid or a config file key is unknown.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// A serialized file failed to parse; `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A checkpoint file is malformed or does not match the model.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    /// A gradient check probe produced a non-finite loss at the given coordinate.
    #[error("gradient check: non-finite loss while probing coordinate {coordinate}")]
    GradCheckProbe { coordinate: usize },

    /// Underlying IO failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl RealignError {
    pub(crate) fn shape(context: impl Into<String>, expected: usize, got: usize) -> Self {
        RealignError::ShapeMismatch {
            context: context.into(),
            expected,
            got,
        }
    }
}
