//! The empirical least-squares contrast γ_N and its minimization over
//! coefficient models with the transition matrix held fixed.
//!
//! For t = g^{Q,f} with f in the span of the basis, γ_N(t) = ‖t‖₂² −
//! (2/N)Σ_s t(Z_s). Both terms are exact polynomials in the coefficients:
//! the norm comes from the transfer-matrix factorization and the sample
//! average is a contraction of the empirical third-order moment tensor, so
//! no new pass over the data is ever needed.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::basis::BasisFamily;
use crate::cmaes::{cmaes_minimize, OptimizerConfig};
use crate::error::{Error, Result};
use crate::model::{joint_norm_sq_from, StationaryDistribution, TransitionMatrix};
use crate::moments::MomentSet;

/// Everything γ needs: the data through its moments, and the frozen chain.
#[derive(Clone, Debug)]
pub struct ContrastContext {
    pub mom: MomentSet,
    pub q_fixed: TransitionMatrix,
    pub pi_fixed: StationaryDistribution,
    pub basis: BasisFamily,
    /// c with c_m = ∫φ_m; a density's coefficients a must satisfy cᵀa = 1.
    pub integral_coeffs: DVector<f64>,
}

impl ContrastContext {
    pub fn new(mom: MomentSet, q_fixed: TransitionMatrix, basis: BasisFamily) -> Result<Self> {
        if mom.m != basis.size() {
            return Err(Error::DimensionMismatch {
                expected: basis.size(),
                got: mom.m,
            });
        }
        // Boundary transition estimates are still usable as fixed weights.
        let pi_fixed = q_fixed.stationary_or_limit();
        let integral_coeffs = basis.integral_coeffs();
        Ok(ContrastContext {
            mom,
            q_fixed,
            pi_fixed,
            basis,
            integral_coeffs,
        })
    }
}

/// Outcome of one penalized-least-squares fit at a fixed dimension.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FitResult {
    /// M×K coefficients; every column satisfies the integral constraint.
    #[serde(with = "crate::serde_util::serde_mat")]
    pub a_hat: DMatrix<f64>,
    /// γ_N at `a_hat`.
    pub gamma_value: f64,
    pub evals_used: usize,
    /// False only when the budget ran out without improving on the start.
    pub converged: bool,
}

/// Affine chart of the constraint set {a : cᵀa = 1}: a = a₀ + Bz with
/// a₀ = c/‖c‖² and B an orthonormal basis of the null space of cᵀ, so the
/// constraint holds exactly for every z and the chart is an isometry.
#[derive(Clone, Debug)]
pub struct Reparam {
    a0: DVector<f64>,
    b: DMatrix<f64>,
}

impl Reparam {
    pub fn new(basis: &BasisFamily) -> Self {
        let c = basis.integral_coeffs();
        let m = c.len();
        let a0 = &c / c.norm_squared();
        // Householder reflector H = I − 2vvᵀ/‖v‖² sends c to ∓‖c‖e₁; its
        // remaining columns are an orthonormal basis of the complement of c.
        let mut v = c.clone();
        v[0] += c.norm() * if c[0] >= 0.0 { 1.0 } else { -1.0 };
        let scale = 2.0 / v.norm_squared();
        let mut b = DMatrix::zeros(m, m.saturating_sub(1));
        for j in 1..m {
            for i in 0..m {
                let id = if i == j { 1.0 } else { 0.0 };
                b[(i, j - 1)] = id - scale * v[i] * v[j];
            }
        }
        Reparam { a0, b }
    }

    pub fn dim_per_state(&self) -> usize {
        self.b.ncols()
    }

    /// Rebuilds M×K coefficients from the flattened chart coordinates
    /// (state k occupies z[k(M−1) .. (k+1)(M−1)]).
    pub fn to_coeffs(&self, z: &[f64], k: usize) -> DMatrix<f64> {
        let m = self.a0.len();
        let per = self.dim_per_state();
        assert_eq!(z.len(), k * per, "chart coordinate length");
        let mut a = DMatrix::zeros(m, k);
        for kk in 0..k {
            let zk = DVector::from_column_slice(&z[kk * per..(kk + 1) * per]);
            let col = &self.a0 + &self.b * zk;
            a.set_column(kk, &col);
        }
        a
    }

    /// Chart coordinates of the orthogonal projection of each column onto
    /// the constraint set.
    pub fn from_coeffs(&self, a: &DMatrix<f64>) -> Vec<f64> {
        let k = a.ncols();
        let per = self.dim_per_state();
        let mut z = Vec::with_capacity(k * per);
        for kk in 0..k {
            let diff = a.column(kk) - &self.a0;
            let zk = self.b.transpose() * diff;
            z.extend(zk.iter());
        }
        z
    }
}

/// γ_N at the coefficient matrix `a`, in closed form.
pub fn gamma(ctx: &ContrastContext, a: &DMatrix<f64>) -> Result<f64> {
    if a.nrows() != ctx.mom.m {
        return Err(Error::DimensionMismatch {
            expected: ctx.mom.m,
            got: a.nrows(),
        });
    }
    if a.ncols() != ctx.q_fixed.k() {
        return Err(Error::DimensionMismatch {
            expected: ctx.q_fixed.k(),
            got: a.ncols(),
        });
    }
    Ok(gamma_value(ctx, a))
}

fn gamma_value(ctx: &ContrastContext, a: &DMatrix<f64>) -> f64 {
    let gram = a.transpose() * a;
    let pi = ctx.pi_fixed.vector();
    let q = ctx.q_fixed.matrix();
    let norm_sq = joint_norm_sq_from(&ctx.pi_fixed, &ctx.q_fixed, &gram);
    let t = ctx.mom.mtens.contract_all_modes(a);
    let k = a.ncols();
    let mut empirical = 0.0;
    for k1 in 0..k {
        for k2 in 0..k {
            let w12 = pi[k1] * q[(k1, k2)];
            if w12 == 0.0 {
                continue;
            }
            for k3 in 0..k {
                empirical += w12 * q[(k2, k3)] * t.get(k1, k2, k3);
            }
        }
    }
    norm_sq - 2.0 * empirical
}

/// Minimizes γ_N over the constraint set from the warm start `a_init`,
/// which is first projected onto the constraint. The chain (Q, π) stays
/// frozen throughout.
pub fn minimize_gamma(
    ctx: &ContrastContext,
    a_init: &DMatrix<f64>,
    opt_cfg: &OptimizerConfig,
) -> Result<FitResult> {
    let m = ctx.mom.m;
    let k = ctx.q_fixed.k();
    if a_init.nrows() != m || a_init.ncols() != k {
        return Err(Error::DimensionMismatch {
            expected: m * k,
            got: a_init.nrows() * a_init.ncols(),
        });
    }
    let rep = Reparam::new(&ctx.basis);
    let z0 = rep.from_coeffs(a_init);
    let a_start = rep.to_coeffs(&z0, k);
    let f_start = gamma_value(ctx, &a_start);

    let dim = k * rep.dim_per_state();
    if dim == 0 {
        // M = 1: the constraint pins the single coefficient per state.
        return Ok(FitResult {
            a_hat: a_start,
            gamma_value: f_start,
            evals_used: 0,
            converged: true,
        });
    }

    let mut cfg = opt_cfg.clone();
    cfg.dim = dim;
    let objective = |z: &DVector<f64>| gamma_value(ctx, &rep.to_coeffs(z.as_slice(), k));
    let out = cmaes_minimize(objective, &DVector::from_vec(z0), &cfg)?;

    let improved = out.f_best < f_start;
    let (a_hat, gamma_val) = if improved {
        (rep.to_coeffs(out.x_best.as_slice(), k), out.f_best)
    } else {
        (a_start, f_start)
    };
    Ok(FitResult {
        a_hat,
        gamma_value: gamma_val,
        evals_used: out.evals,
        converged: improved || out.stopped_early,
    })
}
