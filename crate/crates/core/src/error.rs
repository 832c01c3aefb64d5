use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not antisymmetric (relative deviation {deviation:e})")]
    NotAntisymmetric { deviation: f64 },
    #[error("matrix is not generalized-antisymmetric (relative deviation {deviation:e})")]
    NotGeneralizedAntisymmetric { deviation: f64 },
    #[error("pfaffian needs an even dimension, got {0}")]
    OddDimension(usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular or too ill-conditioned (condition estimate {condition:e})")]
    Singular { condition: f64 },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("mode count {0} outside supported range 1..=6")]
    ModeCountOutOfRange(usize),
    #[error("mode mismatch: {left} vs {right}")]
    ModeMismatch { left: usize, right: usize },
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("covariance matrix is singular; use the moment-based materialization for limit points")]
    SingularCovariance,
    #[error("square-root branch could not be tracked along the homotopy path at t = {t}")]
    BranchAmbiguity { t: f64 },
    #[error("parameters are not physical: {0}")]
    NotPhysical(String),
    #[error("parameters are not thermal (m or m+ nonzero)")]
    NotThermal,
    #[error("finite-difference derivative disagrees with the analytic form (mismatch {mismatch:e})")]
    StepTooLarge { mismatch: f64 },
    #[error("density matrix is not diagonal (largest off-diagonal {max_off_diagonal:e})")]
    NotDiagonal { max_off_diagonal: f64 },
    #[error("density matrix couples sectors of different number parity ({magnitude:e})")]
    SuperselectionViolated { magnitude: f64 },
    #[error("density matrix is not positive semidefinite")]
    NotPositive,
    #[error("density matrix trace is {0}, expected 1")]
    NotNormalized(f64),
    #[error("density matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),
    #[error("occupation totals differ ({row} vs {col}) for a number-conserving target")]
    TotalNumberMismatch { row: usize, col: usize },
    #[error("occupation totals differ by an odd amount ({row} vs {col})")]
    OddNumberDifference { row: usize, col: usize },
    #[error("occupation vector entries must be 0 or 1")]
    InvalidOccupation,
    #[error("epsilon schedule must hold at least two distinct positive values")]
    InvalidSchedule,
    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
