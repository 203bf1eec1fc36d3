//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Operand shapes are incompatible with the requested operation.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// An argument is outside the operation's domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A matrix that must be Hermitian deviates from its adjoint beyond tolerance.
    #[error("matrix is not Hermitian to tolerance (max |M - M^dag| = {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    /// The Choi matrix has a negative eigenvalue beyond tolerance.
    #[error("map is not completely positive (lambda_min = {lambda_min:.17e})")]
    NotCompletelyPositive { lambda_min: f64 },

    /// The tomographic input set is numerically non-invertible.
    #[error("tomographic set is ill-conditioned (condition number {condition:.3e})")]
    IllConditionedSet { condition: f64 },

    /// The joint input state of ancilla-assisted tomography is numerically non-invertible.
    #[error("joint input state is ill-conditioned (condition number {condition:.3e})")]
    IllConditionedAncillaState { condition: f64 },

    /// A measurement set does not span the operator space.
    #[error("measurement set spans only {rank} of {required} operator dimensions")]
    SpanDeficient { rank: usize, required: usize },

    /// A linear solve hit an exactly singular pivot.
    #[error("matrix is singular")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;
