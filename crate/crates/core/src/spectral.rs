//! Spectral method-of-moments estimation of the emission coefficients, the
//! stationary law, and the transition matrix from third-order moments.
//!
//! The procedure whitens the middle-index slices of the moment tensor by the
//! top-K singular subspace of the two-step covariance, diagonalizes a random
//! rotation of the slice family, and reads the model parameters off the
//! resulting joint eigenstructure. A final Euclidean projection returns a
//! genuine transition matrix.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{StationaryDistribution, TransitionMatrix};
use crate::moments::MomentSet;
use crate::rng::{stream_rng, streams};

/// Numerical byproducts of one estimation run, kept for post-mortems.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectralDiagnostics {
    /// All singular values of the two-step covariance, descending.
    pub p_singular_values: Vec<f64>,
    /// Condition numbers of every matrix inverted along the way.
    pub condition_numbers: Vec<(String, f64)>,
    /// Rotations discarded before one produced a real, well-separated spectrum.
    pub theta_redraws: u32,
}

/// Output of the moment-based estimation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectralEstimate {
    /// M×K matrix whose columns are the estimated emission coefficients.
    #[serde(with = "crate::serde_util::serde_mat")]
    pub o_hat: DMatrix<f64>,
    /// Raw stationary-law estimate, before the transition-matrix projection.
    #[serde(with = "crate::serde_util::serde_vec")]
    pub pi_tilde: DVector<f64>,
    pub q_hat: TransitionMatrix,
    /// Stationary law of `q_hat`.
    pub pi_hat: StationaryDistribution,
    pub diagnostics: SpectralDiagnostics,
}

const COND_LIMIT: f64 = 1e12;
const MAX_ROTATIONS: u32 = 10;
/// Relative tolerance deciding whether an eigenvalue counts as real, and
/// whether two eigenvalues count as distinct.
const EIG_TOL: f64 = 1e-8;

/// Ratio of extreme singular values; infinite for a singular matrix.
fn cond2(m: &DMatrix<f64>) -> f64 {
    let sv = m.clone().singular_values();
    let max = sv.max();
    let min = sv.min();
    if min <= 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// Haar-distributed K×K orthogonal matrix: QR of a Gaussian matrix with the
/// R diagonal forced positive.
pub fn haar_orthogonal(k: usize, seed: u64) -> DMatrix<f64> {
    let mut rng = stream_rng(seed, streams::ROTATION);
    haar_from_rng(k, &mut rng)
}

fn haar_from_rng<R: Rng>(k: usize, rng: &mut R) -> DMatrix<f64> {
    let g = DMatrix::from_fn(k, k, |_, _| rng.sample::<f64, _>(StandardNormal));
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..k {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

/// Euclidean projection of a vector onto the probability simplex.
pub(crate) fn project_simplex(u: &[f64]) -> Vec<f64> {
    let mut s = u.to_vec();
    s.sort_unstable_by(|a, b| b.total_cmp(a));
    let mut cumsum = 0.0;
    let mut tau = 0.0;
    for (j, &v) in s.iter().enumerate() {
        cumsum += v;
        let t = (1.0 - cumsum) / (j + 1) as f64;
        if v + t > 0.0 {
            tau = t;
        }
    }
    u.iter().map(|&v| (v + tau).max(0.0)).collect()
}

/// Frobenius-nearest transition matrix: each row is projected independently
/// onto the probability simplex.
pub fn project_transition(x: &DMatrix<f64>) -> TransitionMatrix {
    assert_eq!(x.nrows(), x.ncols(), "transition estimate must be square");
    let k = x.nrows();
    let mut out = DMatrix::zeros(k, k);
    for i in 0..k {
        let row: Vec<f64> = x.row(i).iter().copied().collect();
        let proj = project_simplex(&row);
        for j in 0..k {
            out[(i, j)] = proj[j];
        }
    }
    TransitionMatrix::new(out).expect("row-wise simplex projection is stochastic")
}

/// Estimates (emission coefficients, stationary law, transition matrix) for a
/// K-state model from the moments of consecutive observation triples.
///
/// On exact population moments of a model satisfying the rank conditions the
/// output equals the truth up to one permutation of the states.
pub fn spectral_estimate(mom: &MomentSet, k: usize, seed: u64) -> Result<SpectralEstimate> {
    let m = mom.m;
    if k == 0 {
        return Err(Error::DomainViolation {
            what: "state count must be at least 1".into(),
        });
    }
    if m < k {
        return Err(Error::DimensionMismatch { expected: k, got: m });
    }

    // Top-K right singular subspace of the two-step covariance.
    let svd = mom.p.clone().svd(false, true);
    let sv = &svd.singular_values;
    let sigma1 = sv[0];
    let rank = sv.iter().filter(|&&s| s > 1e-12 * sigma1).count();
    if rank < k {
        return Err(Error::KTooLarge { k, rank });
    }
    let vt = svd.v_t.as_ref().expect("right singular vectors requested");
    let u_hat = DMatrix::from_fn(m, k, |i, j| vt[(j, i)]);

    // Whitened slices B(b) = (ÛᵀPÛ)⁻¹ Ûᵀ Mtens(·,b,·) Û.
    let w = u_hat.transpose() * &mom.p * &u_hat;
    let cond_w = cond2(&w);
    if !(cond_w <= COND_LIMIT) {
        return Err(Error::SingularWhitening { cond: cond_w });
    }
    let w_qr = w.col_piv_qr();
    let mut b_slices = Vec::with_capacity(m);
    for b in 0..m {
        let projected = u_hat.transpose() * mom.mtens.mid_slice(b) * &u_hat;
        let solved = w_qr
            .solve(&projected)
            .ok_or(Error::SingularWhitening { cond: cond_w })?;
        b_slices.push(solved);
    }

    let mut redraws = 0u32;
    for attempt in 0..MAX_ROTATIONS {
        let mut rng = stream_rng(seed, streams::ROTATION + attempt as u64);
        let theta = haar_from_rng(k, &mut rng);
        let u_theta = &u_hat * &theta;

        // C(j) = Σ_b (ÛΘ)(b,j) B(b): random mixtures sharing one eigenbasis.
        let c_slices: Vec<DMatrix<f64>> = (0..k)
            .map(|j| {
                let mut c = DMatrix::zeros(k, k);
                for (b, slice) in b_slices.iter().enumerate() {
                    let wgt = u_theta[(b, j)];
                    if wgt != 0.0 {
                        c += slice * wgt;
                    }
                }
                c
            })
            .collect();

        let eig = c_slices[0].clone().complex_eigenvalues();
        if eig.iter().any(|z| z.im.abs() > EIG_TOL * z.re.abs()) {
            redraws += 1;
            continue;
        }
        let mut lambdas: Vec<f64> = eig.iter().map(|z| z.re).collect();
        lambdas.sort_unstable_by(|a, b| b.total_cmp(a));
        let lam_scale = lambdas
            .iter()
            .fold(f64::MIN_POSITIVE, |acc, &l| acc.max(l.abs()));
        if lambdas
            .windows(2)
            .any(|w| (w[0] - w[1]).abs() <= EIG_TOL * lam_scale)
        {
            redraws += 1;
            continue;
        }

        // One eigenvector per eigenvalue, as the null direction of C(1)−λI.
        let mut r_hat = DMatrix::zeros(k, k);
        for (j, &lam) in lambdas.iter().enumerate() {
            let shifted = &c_slices[0] - DMatrix::<f64>::identity(k, k) * lam;
            let sub_svd = shifted.svd(false, true);
            let sub_vt = sub_svd.v_t.expect("right singular vectors requested");
            let mut v = sub_vt.row(k - 1).transpose();
            let mut imax = 0;
            for i in 0..k {
                if v[i].abs() > v[imax].abs() {
                    imax = i;
                }
            }
            if v[imax] < 0.0 {
                v.neg_mut();
            }
            r_hat.set_column(j, &v);
        }
        let cond_r = cond2(&r_hat);
        if !(cond_r <= COND_LIMIT) {
            redraws += 1;
            continue;
        }

        // Λ(j,·) = diagonal of R⁻¹ C(j) R; row 1 must reproduce the spectrum.
        let r_qr = r_hat.clone().col_piv_qr();
        let mut lambda_mat = DMatrix::zeros(k, k);
        for (j, c) in c_slices.iter().enumerate() {
            let conj = r_qr
                .solve(&(c * &r_hat))
                .ok_or(Error::SingularWhitening { cond: cond_r })?;
            for i in 0..k {
                lambda_mat[(j, i)] = conj[(i, i)];
            }
        }
        if cond_r < 1e6 {
            for (j, &lam) in lambdas.iter().enumerate() {
                debug_assert!(
                    (lambda_mat[(0, j)] - lam).abs() <= EIG_TOL * lam_scale.max(1.0),
                    "diagonalized first slice disagrees with its eigenvalues"
                );
            }
        }

        let o_hat = &u_theta * &lambda_mat;

        // Stationary law from the first moment, in whitened coordinates.
        let uo = u_hat.transpose() * &o_hat;
        let cond_uo = cond2(&uo);
        let uo_qr = uo.clone().col_piv_qr();
        let pi_tilde = uo_qr
            .solve(&(u_hat.transpose() * &mom.l))
            .ok_or(Error::SingularWhitening { cond: cond_uo })?;

        // Transition estimate: (ÛᵀÔ·Diag(π̃))⁻¹ ÛᵀN̂Û (ÔᵀÛ)⁻¹, where the
        // right factor is applied by solving against (ÛᵀÔ)ᵀ from the left.
        let weighted = &uo * DMatrix::from_diagonal(&pi_tilde);
        let cond_weighted = cond2(&weighted);
        let mid = u_hat.transpose() * &mom.nmat * &u_hat;
        let z = weighted
            .col_piv_qr()
            .solve(&mid)
            .ok_or(Error::SingularWhitening { cond: cond_weighted })?;
        let q_raw = uo_qr
            .solve(&z.transpose())
            .ok_or(Error::SingularWhitening { cond: cond_uo })?
            .transpose();
        // Inversions are condition-guarded, so a non-finite entry means the
        // guards were too generous for this input; report the blowup.
        if !q_raw.iter().all(|v| v.is_finite()) {
            return Err(Error::SingularWhitening { cond: cond_weighted });
        }

        let q_hat = project_transition(&q_raw);
        // The projected estimate can land on the boundary of the simplex at
        // finite sample size, so take the generalized stationary law.
        let pi_hat = q_hat.stationary_or_limit();
        let diagnostics = SpectralDiagnostics {
            p_singular_values: sv.iter().copied().collect(),
            condition_numbers: vec![
                ("whitening".into(), cond_w),
                ("diagonalizer".into(), cond_r),
                ("observation_map".into(), cond_uo),
                ("weighted_observation_map".into(), cond_weighted),
            ],
            theta_redraws: redraws,
        };
        return Ok(SpectralEstimate {
            o_hat,
            pi_tilde,
            q_hat,
            pi_hat,
            diagnostics,
        });
    }
    Err(Error::NonRealDiagonalization {
        attempts: MAX_ROTATIONS,
    })
}
