//! Error type shared by the whole toolkit.

use thiserror::Error;

/// Errors produced by model estimation, extraction, scoring and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// Shapes of two operands do not line up.
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    /// An argument violates a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Too little data to estimate the requested model.
    #[error("not enough frames: have {have}, need {need}")]
    NotEnoughFrames { have: usize, need: usize },

    /// EM accumulators carry no information (e.g. all statistics zero).
    #[error("degenerate accumulators")]
    DegenerateAccumulators,

    /// A matrix that must be positive definite is not.
    #[error("matrix not positive definite: {0}")]
    NotPositiveDefinite(String),

    /// Joint refinement requires a generatively trained subspace.
    #[error("generative initialization required: {0}")]
    GenerativeInitRequired(String),

    /// Speaker filtering removed every speaker.
    #[error("no speakers survive filter")]
    EmptyFilter,

    /// SNR mixing has no energy reference to scale against.
    #[error("cannot compute SNR reference: {0}")]
    SnrReference(String),

    /// Iterative training left the healthy regime.
    #[error("training diverged: {0}")]
    Diverged(String),

    /// Underlying filesystem failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// A model or archive file does not match its declared format.
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
