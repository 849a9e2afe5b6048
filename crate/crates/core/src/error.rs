//! Error taxonomy shared by every stage of the pipeline.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// The transition matrix is not irreducible and aperiodic, so it has no
    /// unique stationary distribution.
    #[error("transition matrix is not ergodic (no unique stationary distribution)")]
    NotErgodic,

    /// A matrix that the spectral method must invert is numerically singular.
    #[error("near-singular matrix in spectral step (condition number {cond:.3e})")]
    SingularWhitening { cond: f64 },

    /// The joint diagonalization kept producing complex or colliding
    /// eigenvalues after the maximum number of rotation redraws.
    #[error("diagonalization failed after {attempts} rotation redraws")]
    NonRealDiagonalization { attempts: u32 },

    /// Fewer than `K` significant singular values: the requested number of
    /// hidden states is not supported by the moment matrix.
    #[error("only {rank} significant singular values for K = {k}")]
    KTooLarge { k: usize, rank: usize },

    /// The selected dimension never drops over the penalty grid, so the
    /// dimension-jump heuristic has nothing to calibrate on.
    #[error("no dimension jump over the penalty grid")]
    NoJump,

    /// Slope-heuristic calibration failed (for instance the fitted slope of
    /// the contrast trace is positive).
    #[error("calibration failed: {reason}")]
    CalibrationFailed { reason: String },

    /// The objective returned NaN or infinity for too many consecutive
    /// generations of the optimizer.
    #[error("objective non-finite for {generations} consecutive generations")]
    NonFiniteObjective { generations: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain violation: {what}")]
    DomainViolation { what: String },

    /// A serialized artifact (moment cache, config) is malformed.
    #[error("bad format: {what}")]
    BadFormat { what: String },

    /// A pipeline stage failed; the stage name says where.
    #[error("stage '{stage}' failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Wraps an error with the name of the pipeline stage that produced it.
    pub fn in_stage(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}
