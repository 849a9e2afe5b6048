//! Label alignment, risk and variance metrics, and the end-to-end pipeline
//! that ties sampling, moments, the spectral initializer, the least squares
//! refinement, and basis-size selection together.
//!
//! Hidden states are only identified up to relabeling, so every comparison
//! against a reference first searches the permutation group for the best
//! match. All metrics are reported in `L2([0, 1])` through the orthonormal
//! basis coefficients.

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basis::{BasisFamily, BasisKind};
use crate::cmaes::OptimizerConfig;
use crate::contrast::{minimize_gamma, ContrastContext, FitResult};
use crate::density::Density;
use crate::error::{Error, Result};
use crate::model::{HmmSpec, TransitionMatrix};
use crate::moments::empirical_moments;
use crate::quad::Quadrature;
use crate::sample::{sample_chain, Scenario};
use crate::selection::{
    calibrate_dimension_jump, calibrate_slope_fit, default_rho_grid, default_slope_window, penalty,
    select_m, CalibrationMethod, CalibrationResult, SelectionTrace,
};
use crate::spectral::{spectral_estimate, SpectralEstimate};

/// Result of matching an estimated coefficient matrix against a reference,
/// minimizing the summed squared coefficient distance over all relabelings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlignedComparison {
    /// `permutation[k]` is the estimate column matched to reference state `k`.
    pub permutation: Vec<usize>,
    /// Per-state distances `||a_hat[:, perm[k]] - a_ref[:, k]||_2`.
    pub per_state_l2: Vec<f64>,
    /// Sum of the squared per-state distances; the alignment minimizes this.
    pub total: f64,
    /// Largest squared per-state distance under the same alignment.
    pub max_state: f64,
    /// Frobenius distance between the reference transition matrix and the
    /// relabeled estimate.
    pub q_error: f64,
}

/// Visits every permutation of `0..k` exactly once (Heap's algorithm),
/// starting from the identity. Order is deterministic.
fn for_each_permutation(k: usize, mut visit: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    visit(&idx);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                idx.swap(0, i);
            } else {
                idx.swap(c[i], i);
            }
            visit(&idx);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Squared distances between estimate columns and reference columns:
/// `cost[(r, c)] = ||a_hat[:, c] - a_ref[:, r]||^2`.
fn column_costs(a_hat: &DMatrix<f64>, a_ref: &DMatrix<f64>) -> DMatrix<f64> {
    let k = a_ref.ncols();
    DMatrix::from_fn(k, k, |r, c| (a_hat.column(c) - a_ref.column(r)).norm_squared())
}

/// The permutation minimizing the summed squared distance; first minimizer
/// in visiting order on ties.
fn best_sum_permutation(cost: &DMatrix<f64>) -> (Vec<f64>, Vec<usize>) {
    let k = cost.nrows();
    let mut best_total = f64::INFINITY;
    let mut best: Vec<usize> = (0..k).collect();
    for_each_permutation(k, |perm| {
        let total: f64 = (0..k).map(|r| cost[(r, perm[r])]).sum();
        if total < best_total {
            best_total = total;
            best.copy_from_slice(perm);
        }
    });
    let per_state = (0..k).map(|r| cost[(r, best[r])]).collect();
    (per_state, best)
}

/// Aligns an estimated model with a reference by exhaustive search over the
/// `K!` relabelings (requires `K <= 8`), minimizing the summed squared
/// coefficient distance, and reports the per-state, total, max, and
/// transition errors under that relabeling.
pub fn align(
    a_hat: &DMatrix<f64>,
    a_ref: &DMatrix<f64>,
    q_hat: &TransitionMatrix,
    q_ref: &TransitionMatrix,
) -> AlignedComparison {
    assert_eq!(a_hat.shape(), a_ref.shape(), "coefficient shapes must match");
    let k = a_ref.ncols();
    assert_eq!(q_hat.k(), k, "transition size must match coefficient columns");
    assert_eq!(q_ref.k(), k, "transition size must match coefficient columns");
    assert!(k <= 8, "exhaustive alignment is limited to 8 states");
    let cost = column_costs(a_hat, a_ref);
    let (sq, perm) = best_sum_permutation(&cost);
    let total = sq.iter().sum();
    let max_state = sq.iter().cloned().fold(0.0, f64::max);
    let q_error = (q_ref.matrix() - q_hat.permuted(&perm).matrix()).norm();
    AlignedComparison {
        permutation: perm,
        per_state_l2: sq.iter().map(|v| v.sqrt()).collect(),
        total,
        max_state,
        q_error,
    }
}

/// Projects each density onto the basis; column `k` holds the coefficients
/// of `f[k]`.
pub fn project_densities(basis: &BasisFamily, densities: &[Density]) -> DMatrix<f64> {
    let mut a = DMatrix::zeros(basis.size(), densities.len());
    for (k, f) in densities.iter().enumerate() {
        a.set_column(k, &basis.project(f));
    }
    a
}

/// The variance metric of an estimate at basis size `M`: the smallest over
/// relabelings of the largest squared coefficient distance to the projected
/// truths, `min over perm of max over k`.
pub fn variance_term(a_hat: &DMatrix<f64>, f_true: &[Density], basis: &BasisFamily) -> f64 {
    let a_ref = project_densities(basis, f_true);
    assert_eq!(a_hat.shape(), a_ref.shape(), "coefficient shapes must match");
    let k = a_ref.ncols();
    assert!(k <= 8, "exhaustive alignment is limited to 8 states");
    let cost = column_costs(a_hat, &a_ref);
    let mut best = f64::INFINITY;
    for_each_permutation(k, |perm| {
        let worst = (0..k).map(|r| cost[(r, perm[r])]).fold(0.0, f64::max);
        if worst < best {
            best = worst;
        }
    });
    best
}

/// Quadrature whose panels align with the discontinuities of the basis, so
/// that piecewise smooth integrands are integrated to near machine accuracy.
fn metric_quadrature(basis: &BasisFamily) -> Quadrature {
    match basis.kind() {
        BasisKind::Histogram => {
            let m = basis.size();
            Quadrature::composite(0.0, 1.0, 64, m * 256_usize.div_ceil(m))
        }
        BasisKind::Trig => Quadrature::composite(0.0, 1.0, 64, 256),
    }
}

/// Per-state squared `L2` risk of an estimate against the true densities:
/// squared approximation bias of the basis plus the squared coefficient
/// distance inside the span, under the alignment that minimizes the latter.
pub fn risk_l2(a_hat: &DMatrix<f64>, f_true: &[Density], basis: &BasisFamily) -> Vec<f64> {
    let a_ref = project_densities(basis, f_true);
    assert_eq!(a_hat.shape(), a_ref.shape(), "coefficient shapes must match");
    let quad = metric_quadrature(basis);
    let cost = column_costs(a_hat, &a_ref);
    let (sq, _) = best_sum_permutation(&cost);
    let mut buf = vec![0.0; basis.size()];
    (0..a_ref.ncols())
        .map(|r| {
            let proj = a_ref.column(r);
            let bias_sq = quad.integrate(|y| {
                basis.eval_all(y, &mut buf);
                let fm: f64 = proj.iter().zip(&buf).map(|(c, p)| c * p).sum();
                (f_true[r].eval(y) - fm).powi(2)
            });
            bias_sq + sq[r]
        })
        .collect()
}

/// The basis sizes a pipeline sweep visits: every usable size of the family
/// up to `m_max`, starting at the smallest size that can carry `k` states
/// (odd sizes only for the trigonometric family).
pub fn basis_size_grid(kind: BasisKind, k: usize, m_max: usize) -> Result<Vec<usize>> {
    let (start, step) = match kind {
        BasisKind::Histogram => (k.max(1), 1),
        BasisKind::Trig => (k.max(1) | 1, 2),
    };
    let grid: Vec<usize> = (start..=m_max).step_by(step).collect();
    if grid.is_empty() {
        return Err(Error::DomainViolation {
            what: format!("m_max = {m_max} is below the smallest usable basis size {start}"),
        });
    }
    Ok(grid)
}

fn default_budget() -> usize {
    2000
}

fn default_calibration() -> CalibrationMethod {
    CalibrationMethod::DimensionJump
}

/// Everything the pipeline needs besides the model itself.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PipelineConfig {
    /// Number of observation triples to sample.
    pub n: usize,
    /// How triples are extracted from the chain.
    pub scenario: Scenario,
    /// Basis family swept over.
    pub basis: BasisKind,
    /// Largest basis size visited.
    pub m_max: usize,
    /// Master seed; sampling, rotations, and optimizer streams derive from it.
    pub seed: u64,
    /// Penalty calibration method when no override is given.
    #[serde(default = "default_calibration")]
    pub calibration: CalibrationMethod,
    /// Fixed penalty constant; when set, calibration is skipped entirely.
    #[serde(default)]
    pub rho_override: Option<f64>,
    /// Objective evaluation budget of the refinement at each basis size.
    #[serde(default = "default_budget")]
    pub optimizer_budget: usize,
    /// Optional population size override for the optimizer.
    #[serde(default)]
    pub population: Option<usize>,
}

impl PipelineConfig {
    pub fn new(n: usize, scenario: Scenario, basis: BasisKind, m_max: usize, seed: u64) -> Self {
        PipelineConfig {
            n,
            scenario,
            basis,
            m_max,
            seed,
            calibration: default_calibration(),
            rho_override: None,
            optimizer_budget: default_budget(),
            population: None,
        }
    }
}

/// One row of the per-size curves: the contrast, the penalty at the selected
/// constant, both variance metrics, and the total refined risk.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CurveRow {
    pub m: usize,
    pub gamma: f64,
    pub pen: f64,
    pub variance_spectral: f64,
    pub variance_ls: f64,
    pub risk_total: f64,
}

/// Full record of one pipeline run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PipelineReport {
    pub k: usize,
    pub n: usize,
    pub seed: u64,
    pub basis: BasisKind,
    pub scenario: Scenario,
    /// Per-size diagnostics in sweep order.
    pub records: Vec<CurveRow>,
    /// The (M, contrast) trace that selection ran on.
    pub trace: SelectionTrace,
    /// Calibration output; absent when a penalty override was supplied.
    pub calibration: Option<CalibrationResult>,
    /// Penalty constant that produced `m_hat`.
    pub rho_used: f64,
    /// Selected basis size.
    pub m_hat: usize,
    /// Errors of the spectral initializer at `m_hat`.
    pub spectral_comparison: AlignedComparison,
    /// Errors of the refined estimate at `m_hat`.
    pub refined_comparison: AlignedComparison,
    /// Objective evaluations spent across the whole sweep.
    pub total_evals: usize,
}

struct FittedSize {
    m: usize,
    basis: BasisFamily,
    spectral: SpectralEstimate,
    fit: FitResult,
}

/// Runs the full estimation pipeline on one synthetic model: sample, sweep
/// the basis sizes (moments, spectral initializer, refinement), select the
/// size by the penalized contrast, and score both estimators against the
/// truth at the selected size. Deterministic given the config.
pub fn run_pipeline(spec: &HmmSpec, cfg: &PipelineConfig) -> Result<PipelineReport> {
    spec.validate().map_err(|e| e.in_stage("model"))?;
    let k = spec.k();
    let samples =
        sample_chain(spec, cfg.n, cfg.scenario, cfg.seed).map_err(|e| e.in_stage("sample"))?;
    let grid = basis_size_grid(cfg.basis, k, cfg.m_max).map_err(|e| e.in_stage("selection"))?;

    let mut fitted = Vec::with_capacity(grid.len());
    for &m in &grid {
        let basis = BasisFamily::new(cfg.basis, m).map_err(|e| e.in_stage("moments"))?;
        let mom = empirical_moments(&samples, &basis).map_err(|e| e.in_stage("moments"))?;
        let spectral = spectral_estimate(&mom, k, cfg.seed).map_err(|e| e.in_stage("spectral"))?;
        let mut ocfg = OptimizerConfig::new(0, cfg.optimizer_budget, cfg.seed);
        ocfg.population = cfg.population;
        // Separate optimizer stream per basis size under the same seed.
        ocfg.stream_tag = m as u64;
        let ctx = ContrastContext::new(mom, spectral.q_hat.clone(), basis)
            .map_err(|e| e.in_stage("refine"))?;
        let fit =
            minimize_gamma(&ctx, &spectral.o_hat, &ocfg).map_err(|e| e.in_stage("refine"))?;
        fitted.push(FittedSize { m, basis, spectral, fit });
    }

    let trace = SelectionTrace::new(
        cfg.n as u64,
        fitted.iter().map(|f| (f.m, f.fit.gamma_value)).collect(),
    )
    .map_err(|e| e.in_stage("selection"))?;
    let (calibration, rho_used) = match cfg.rho_override {
        Some(rho) => (None, rho),
        None => {
            let cal = match cfg.calibration {
                CalibrationMethod::DimensionJump => {
                    calibrate_dimension_jump(&trace, &default_rho_grid())
                }
                CalibrationMethod::SlopeFit => {
                    calibrate_slope_fit(&trace, default_slope_window(&trace))
                }
            }
            .map_err(|e| e.in_stage("selection"))?;
            let rho = cal.rho_hat;
            (Some(cal), rho)
        }
    };
    let m_hat = select_m(&trace, rho_used);

    let records = fitted
        .iter()
        .map(|f| CurveRow {
            m: f.m,
            gamma: f.fit.gamma_value,
            pen: penalty(cfg.n as f64, f.m, rho_used),
            variance_spectral: variance_term(&f.spectral.o_hat, &spec.emissions, &f.basis),
            variance_ls: variance_term(&f.fit.a_hat, &spec.emissions, &f.basis),
            risk_total: risk_l2(&f.fit.a_hat, &spec.emissions, &f.basis).iter().sum(),
        })
        .collect();

    let chosen = fitted
        .iter()
        .find(|f| f.m == m_hat)
        .expect("selected size comes from the trace");
    let a_ref = project_densities(&chosen.basis, &spec.emissions);
    let spectral_comparison = align(&chosen.spectral.o_hat, &a_ref, &chosen.spectral.q_hat, &spec.q);
    let refined_comparison = align(&chosen.fit.a_hat, &a_ref, &chosen.spectral.q_hat, &spec.q);

    Ok(PipelineReport {
        k,
        n: cfg.n,
        seed: cfg.seed,
        basis: cfg.basis,
        scenario: cfg.scenario,
        records,
        trace,
        calibration,
        rho_used,
        m_hat,
        spectral_comparison,
        refined_comparison,
        total_evals: fitted.iter().map(|f| f.fit.evals_used).sum(),
    })
}

/// Runs independent replicates of the same configuration in parallel, with
/// replicate `i` seeded at `seed + i`. Results come back in replicate order.
pub fn run_replicates(
    spec: &HmmSpec,
    cfg: &PipelineConfig,
    replicates: usize,
) -> Result<Vec<PipelineReport>> {
    (0..replicates)
        .into_par_iter()
        .map(|i| {
            let mut c = cfg.clone();
            c.seed = cfg.seed + i as u64;
            run_pipeline(spec, &c)
        })
        .collect()
}

/// Median with midpoint interpolation on even counts.
pub fn median_of(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "median of empty slice");
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// (lower quartile, median, upper quartile) with linear interpolation.
pub fn quartiles(values: &[f64]) -> (f64, f64, f64) {
    assert!(!values.is_empty(), "quartiles of empty slice");
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let at = |q: f64| -> f64 {
        let pos = q * (v.len() - 1) as f64;
        let lo = pos.floor() as usize;
        let hi = pos.ceil() as usize;
        v[lo] + (pos - lo as f64) * (v[hi] - v[lo])
    };
    (at(0.25), at(0.5), at(0.75))
}
