//! Error type shared by all modules.

use thiserror::Error;

/// Failures reported by library operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("operands belong to different algebra contexts")]
    ContextMismatch,
    #[error("invalid algebra context: {0}")]
    InvalidContext(String),
    #[error("blade mask {mask} out of range for dimension {n}")]
    InvalidMask { mask: u32, n: usize },
    #[error("grade {k} out of range for dimension {n}")]
    GradeOutOfRange { k: usize, n: usize },
    #[error("operation requires the Minkowski context")]
    NotMinkowski,
    #[error("real context value has imaginary part {im:e} on blade {mask}")]
    RealViolation { mask: u32, im: f64 },
    #[error("singular gamma-number: |det| = {det:e}")]
    Singular { det: f64 },
    #[error("commutator of generators {k} and {l} leaves the span (residual {residual:e})")]
    ClosureFailure { k: usize, l: usize, residual: f64 },
    #[error("element {index} leaves the generator span (residual {residual:e})")]
    SpanEscape { index: usize, residual: f64 },
    #[error("unknown generator set `{0}`")]
    UnknownGeneratorSet(String),
    #[error("map is not orthogonal (deviation {deviation:e})")]
    NotOrthogonal { deviation: f64 },
    #[error("mass term constraint violated: {0}")]
    MassConstraint(String),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("current coefficient has imaginary part {im:e}")]
    NonRealCurrent { im: f64 },
    #[error("plane-wave constraint violated: {0}")]
    WaveConstraint(String),
    #[error("gauge group not admissible: {0}")]
    Admissibility(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("schema error: {0}")]
    Schema(String),
}

/// Result alias for library operations.
pub type Result<T> = std::result::Result<T, Error>;
