use thiserror::Error;

/// Structured errors for ring, quasideterminant, and solver operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("constant term is not invertible")]
    NonInvertibleConstantTerm,
    #[error("singular minor in quasideterminant")]
    SingularMinor,
    #[error("spectral collision: Sylvester operator is singular at order zero")]
    SpectralCollision,
    #[error("generating sequence too short: need {need} entries, have {have}")]
    InsufficientSequence { need: usize, have: usize },
    #[error("non-invertible pivot f_{0} in Backlund transform")]
    NonInvertiblePivot(usize),
    #[error("unassigned symbol {0}")]
    UnassignedSymbol(String),
    #[error("operation requires a = 1, got a different parameter")]
    UnsupportedAParameter,
    #[error("parameter inconsistency: {0}")]
    ParameterInconsistency(String),
    #[error("scenario error: {0}")]
    Scenario(String),
}

pub type Result<T> = std::result::Result<T, NcError>;
