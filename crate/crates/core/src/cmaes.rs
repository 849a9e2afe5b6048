//! Derivative-free minimization by covariance matrix adaptation (CMA-ES).
//!
//! Standard (μ/μ_w, λ) strategy: rank-μ weighted recombination, cumulative
//! step-size control, and a rank-one plus rank-μ covariance update, following
//! the canonical published update equations. No restarts or variants.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::{stream_rng, streams};

fn default_tol_fun() -> f64 {
    1e-12
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OptimizerConfig {
    /// Number of free parameters.
    pub dim: usize,
    /// Initial step size; default 0.3 times the root-mean-square of the
    /// start point, floored at 0.1.
    #[serde(default)]
    pub sigma0: Option<f64>,
    /// Total objective-evaluation budget, the start point included.
    pub max_evals: usize,
    pub seed: u64,
    /// Candidates per generation; default 4 + ⌊3 ln dim⌋.
    #[serde(default)]
    pub population: Option<usize>,
    /// Stop once the best value has not improved by this much over 50
    /// generations.
    #[serde(default = "default_tol_fun")]
    pub tol_fun: f64,
    /// Distinguishes the random streams of concurrent runs sharing one seed.
    #[serde(default)]
    pub stream_tag: u64,
}

impl OptimizerConfig {
    pub fn new(dim: usize, max_evals: usize, seed: u64) -> Self {
        OptimizerConfig {
            dim,
            sigma0: None,
            max_evals,
            seed,
            population: None,
            tol_fun: default_tol_fun(),
            stream_tag: 0,
        }
    }

    pub fn resolved_population(&self) -> usize {
        self.population
            .unwrap_or(4 + (3.0 * (self.dim as f64).ln()).floor() as usize)
    }
}

#[derive(Clone, Debug)]
pub struct CmaesOutcome {
    pub x_best: DVector<f64>,
    pub f_best: f64,
    /// Objective evaluations consumed, the start point included.
    pub evals: usize,
    /// True when the run stopped on stagnation rather than budget exhaustion.
    pub stopped_early: bool,
}

const STALL_GENERATIONS: usize = 50;

/// Minimizes `objective` from `x0`. Returns the best point ever evaluated,
/// so the result is never worse than the start.
pub fn cmaes_minimize<F>(objective: F, x0: &DVector<f64>, cfg: &OptimizerConfig) -> Result<CmaesOutcome>
where
    F: Fn(&DVector<f64>) -> f64 + Sync,
{
    let n = cfg.dim;
    if n == 0 {
        return Err(Error::DomainViolation {
            what: "optimizer dimension must be at least 1".into(),
        });
    }
    if x0.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: x0.len(),
        });
    }
    let lambda = cfg.resolved_population();
    if lambda < 2 {
        return Err(Error::DomainViolation {
            what: "population must be at least 2".into(),
        });
    }
    if cfg.max_evals < lambda {
        return Err(Error::DomainViolation {
            what: format!("budget {} below one generation ({lambda})", cfg.max_evals),
        });
    }
    let sigma0 = match cfg.sigma0 {
        Some(s) if s > 0.0 => s,
        Some(s) => {
            return Err(Error::DomainViolation {
                what: format!("sigma0 must be positive, got {s}"),
            })
        }
        None => 0.3 * (x0.norm() / (n as f64).sqrt()).max(0.1),
    };

    // Recombination weights and the usual learning-rate constants.
    let mu = lambda / 2;
    let nf = n as f64;
    let mut weights = DVector::from_fn(mu, |i, _| (mu as f64 + 0.5).ln() - ((i + 1) as f64).ln());
    weights /= weights.sum();
    let mu_eff = 1.0 / weights.iter().map(|w| w * w).sum::<f64>();
    let c_sigma = (mu_eff + 2.0) / (nf + mu_eff + 5.0);
    let d_sigma = 1.0 + 2.0 * (((mu_eff - 1.0) / (nf + 1.0)).sqrt() - 1.0).max(0.0) + c_sigma;
    let c_c = (4.0 + mu_eff / nf) / (nf + 4.0 + 2.0 * mu_eff / nf);
    let c_1 = 2.0 / ((nf + 1.3).powi(2) + mu_eff);
    let c_mu = (1.0 - c_1).min(2.0 * (mu_eff - 2.0 + 1.0 / mu_eff) / ((nf + 2.0).powi(2) + mu_eff));
    let chi_n = nf.sqrt() * (1.0 - 1.0 / (4.0 * nf) + 1.0 / (21.0 * nf * nf));

    let mut rng = stream_rng(cfg.seed, streams::OPTIMIZER + cfg.stream_tag);
    let mut mean = x0.clone();
    let mut sigma = sigma0;
    let mut cov = DMatrix::<f64>::identity(n, n);
    let mut p_sigma = DVector::<f64>::zeros(n);
    let mut p_c = DVector::<f64>::zeros(n);

    let f0 = objective(x0);
    let mut evals = 1usize;
    if !f0.is_finite() {
        return Err(Error::NonFiniteObjective { generations: 0 });
    }
    let mut x_best = x0.clone();
    let mut f_best = f0;

    let mut generation = 0usize;
    let mut last_improvement = 0usize;
    let mut tainted_run = 0usize;
    let mut stopped_early = false;

    while evals + lambda <= cfg.max_evals {
        // Re-symmetrize and refresh the eigendecomposition every generation;
        // dimensions here are small enough that this is not the bottleneck.
        cov = (&cov + cov.transpose()) * 0.5;
        let eig = SymmetricEigen::new(cov.clone());
        let trace = eig.eigenvalues.sum().max(f64::MIN_POSITIVE);
        let floor = 1e-14 * trace;
        let d_sqrt = eig.eigenvalues.map(|d| d.max(floor).sqrt());
        let b = &eig.eigenvectors;

        // Candidates are drawn sequentially so the stream is independent of
        // how the evaluations below are scheduled.
        let mut zs = Vec::with_capacity(lambda);
        let mut xs = Vec::with_capacity(lambda);
        for _ in 0..lambda {
            let z = DVector::from_fn(n, |_, _| rng.sample::<f64, _>(StandardNormal));
            let x = &mean + b * z.component_mul(&d_sqrt) * sigma;
            zs.push(z);
            xs.push(x);
        }
        let fs: Vec<f64> = xs.par_iter().map(|x| objective(x)).collect();
        evals += lambda;

        if fs.iter().any(|f| !f.is_finite()) {
            tainted_run += 1;
            if tainted_run >= lambda {
                return Err(Error::NonFiniteObjective {
                    generations: tainted_run,
                });
            }
        } else {
            tainted_run = 0;
        }

        let mut order: Vec<usize> = (0..lambda).collect();
        order.sort_by(|&i, &j| {
            let fi = if fs[i].is_finite() { fs[i] } else { f64::INFINITY };
            let fj = if fs[j].is_finite() { fs[j] } else { f64::INFINITY };
            fi.total_cmp(&fj).then(i.cmp(&j))
        });
        let leader = order[0];
        if fs[leader].is_finite() && fs[leader] < f_best {
            if f_best - fs[leader] >= cfg.tol_fun {
                last_improvement = generation;
            }
            f_best = fs[leader];
            x_best = xs[leader].clone();
        }

        let old_mean = mean.clone();
        mean = DVector::zeros(n);
        for (rank, &i) in order.iter().take(mu).enumerate() {
            mean.axpy(weights[rank], &xs[i], 1.0);
        }
        let y_w = (&mean - &old_mean) / sigma;

        // Whitened evolution path for step-size control.
        let mut white = b.transpose() * &y_w;
        for i in 0..n {
            white[i] /= d_sqrt[i];
        }
        let white = b * white;
        p_sigma = &p_sigma * (1.0 - c_sigma)
            + white * (c_sigma * (2.0 - c_sigma) * mu_eff).sqrt();
        let decay = 1.0 - (1.0 - c_sigma).powi(2 * (generation as i32 + 1));
        let h_sigma = if p_sigma.norm() / decay.sqrt() < (1.4 + 2.0 / (nf + 1.0)) * chi_n {
            1.0
        } else {
            0.0
        };
        p_c = &p_c * (1.0 - c_c) + &y_w * (h_sigma * (c_c * (2.0 - c_c) * mu_eff).sqrt());

        let mut rank_mu = DMatrix::<f64>::zeros(n, n);
        for (rank, &i) in order.iter().take(mu).enumerate() {
            let y = (&xs[i] - &old_mean) / sigma;
            rank_mu.ger(weights[rank], &y, &y, 1.0);
        }
        let stall_term = (1.0 - h_sigma) * c_c * (2.0 - c_c);
        cov = &cov * (1.0 - c_1 - c_mu)
            + (DMatrix::from_fn(n, n, |i, j| p_c[i] * p_c[j]) + &cov * stall_term) * c_1
            + rank_mu * c_mu;

        let step = (c_sigma / d_sigma) * (p_sigma.norm() / chi_n - 1.0);
        sigma *= step.min(1.0).exp();

        generation += 1;
        if generation - last_improvement >= STALL_GENERATIONS {
            stopped_early = true;
            break;
        }
    }

    Ok(CmaesOutcome {
        x_best,
        f_best,
        evals,
        stopped_early,
    })
}
