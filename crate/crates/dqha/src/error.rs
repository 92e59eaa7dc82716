use thiserror::Error;

/// Errors shared across the crate. All arithmetic is exact, so every error
/// is structural: a shape mismatch, a non-invertible input, or a failed
/// validation of one of the defining identities.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DqhaError {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("form is not convolution-invertible")]
    NonInvertible,
    #[error("iterated coproduct arity {requested} exceeds cap {cap}")]
    ArityCapExceeded { requested: usize, cap: usize },
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("twist is not normalized: {0}")]
    NotNormalized(String),
    #[error("validation failed: {0}")]
    ValidationFailed(String),
    #[error("flavor mismatch: {0}")]
    FlavorMismatch(String),
    #[error("the two printed action forms disagree: {0}")]
    ActionFormsDisagree(String),
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("values do not satisfy the 3-cocycle law: {0}")]
    NotACocycle(String),
    #[error("ev/coev is not a Yetter-Drinfeld morphism: {0}")]
    NotYDMorphism(String),
    #[error("snake equation failed: {0}")]
    SnakeFailed(String),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("shape error: {0}")]
    ShapeError(String),
}

pub type Result<T> = std::result::Result<T, DqhaError>;
