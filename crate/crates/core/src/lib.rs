//! Nonparametric estimation of hidden Markov models with finitely many hidden
//! states and unknown emission densities on [0,1].
//!
//! The pipeline estimates the transition matrix and the emission densities of
//! a stationary ergodic HMM from triples of consecutive observations, without
//! any parametric assumption on the emissions:
//!
//! 1. project the data onto an orthonormal basis of size `M` and accumulate
//!    the first three empirical moments ([`moments`]);
//! 2. run a spectral method on those moments to obtain consistent initial
//!    estimates of the transition matrix and the emission coefficients
//!    ([`spectral`]);
//! 3. refine the emission coefficients by minimizing an empirical least
//!    squares contrast with CMA-ES, keeping the transition matrix fixed
//!    ([`contrast`], [`cmaes`]);
//! 4. select the basis size `M` by a penalized criterion whose constant is
//!    calibrated by the slope heuristic or the dimension jump ([`selection`]).
//!
//! The [`hd`] module numerically verifies the positivity of the quadratic
//! form that links the joint-density risk to the emission risk, including the
//! explicit two-state determinant and its polynomial certificate.

pub mod basis;
pub mod cmaes;
pub mod contrast;
pub mod density;
pub mod error;
pub mod evaluate;
pub mod hd;
pub mod model;
pub mod moments;
mod p5_data;
pub mod quad;
pub mod rng;
pub mod sample;
pub mod selection;
pub mod serde_util;
pub mod spectral;

pub use basis::{BasisFamily, BasisKind};
pub use contrast::{ContrastContext, FitResult};
pub use density::Density;
pub use error::{Error, Result};
pub use cmaes::OptimizerConfig;
pub use evaluate::{AlignedComparison, PipelineConfig, PipelineReport};
pub use hd::{GramMatrix, HDeterminant, ZeroRowSumMatrix};
pub use model::{HmmSpec, JointModel, StationaryDistribution, TransitionMatrix};
pub use moments::MomentSet;
pub use sample::Scenario;
pub use selection::{CalibrationMethod, CalibrationResult, SelectionTrace};
pub use spectral::SpectralEstimate;
