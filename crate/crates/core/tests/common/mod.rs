//! Shared random-instance generators for the integration suites.
//!
//! Models are drawn so that the standing assumptions hold by construction:
//! strictly positive transition rows (ergodic), emission coefficient columns
//! that integrate to one and stay well separated (smallest singular value
//! bounded away from zero), and strictly positive stationary weights.
#![allow(dead_code)]

use nalgebra::DMatrix;
use nphmm_core::contrast::Reparam;
use nphmm_core::quad::Quadrature;
use nphmm_core::rng::stream_rng;
use nphmm_core::{BasisFamily, BasisKind, JointModel, TransitionMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// One RNG per test, keyed off an arbitrary fixed stream.
pub fn test_rng(seed: u64) -> ChaCha8Rng {
    stream_rng(seed, 0xABCD)
}

/// A strictly positive transition matrix: half identity, half a random
/// stochastic matrix, then rejected unless its smallest singular value is
/// at least `min_sv` (the spectral steps invert it).
pub fn random_ergodic_q(k: usize, min_sv: f64, rng: &mut ChaCha8Rng) -> TransitionMatrix {
    loop {
        let mut rows = Vec::with_capacity(k);
        for _ in 0..k {
            let raw: Vec<f64> = (0..k).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
            let total: f64 = raw.iter().sum();
            rows.push(
                raw.iter()
                    .enumerate()
                    .map(|(j, v)| {
                        let base = if j == rows.len() { 0.5 } else { 0.0 };
                        base + 0.5 * v / total
                    })
                    .collect::<Vec<f64>>(),
            );
        }
        let q = TransitionMatrix::from_rows(&rows).expect("constructed rows are stochastic");
        let sv = q.matrix().clone().svd(false, false).singular_values;
        if sv[k - 1] >= min_sv {
            return q;
        }
    }
}

/// Random emission coefficients on the integral-one chart, redrawn until the
/// columns are well separated. Scale 0.5 keeps the densities bounded.
pub fn random_coefficients(basis: &BasisFamily, k: usize, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    let rep = Reparam::new(basis);
    let dim = rep.dim_per_state();
    loop {
        let z: Vec<f64> = (0..dim * k)
            .map(|_| 0.5 * (2.0 * rng.random::<f64>() - 1.0))
            .collect();
        let a = rep.to_coeffs(&z, k);
        if k == 1 {
            return a;
        }
        let sv = a.clone().svd(false, false).singular_values;
        if sv[k - 1] >= 0.2 {
            return a;
        }
    }
}

/// A complete random model satisfying the standing assumptions.
pub fn random_model(k: usize, m: usize, kind: BasisKind, rng: &mut ChaCha8Rng) -> JointModel {
    let basis = BasisFamily::new(kind, m).expect("valid size");
    let q = random_ergodic_q(k, 0.05, rng);
    let a = random_coefficients(&basis, k, rng);
    JointModel::new(q, a, basis).expect("generated model is valid")
}

/// Tensor-product quadrature of `f` over the unit cube. Panel counts must be
/// chosen by the caller to align with any basis discontinuities.
pub fn integrate3(nodes: usize, panels: usize, mut f: impl FnMut([f64; 3]) -> f64) -> f64 {
    let rule = Quadrature::composite(0.0, 1.0, nodes, panels);
    let pts = rule.points();
    let mut total = 0.0;
    for &(x, wx) in pts {
        for &(y, wy) in pts {
            let mut inner = 0.0;
            for &(z, wz) in pts {
                inner += wz * f([x, y, z]);
            }
            total += wx * wy * inner;
        }
    }
    total
}

/// Max-abs deviation between reference coefficients and the estimate after
/// applying the alignment permutation (`perm[r]` = estimate column for
/// reference state `r`).
pub fn max_abs_after(perm: &[usize], a_hat: &DMatrix<f64>, a_ref: &DMatrix<f64>) -> f64 {
    let mut worst: f64 = 0.0;
    for r in 0..a_ref.ncols() {
        for i in 0..a_ref.nrows() {
            worst = worst.max((a_ref[(i, r)] - a_hat[(i, perm[r])]).abs());
        }
    }
    worst
}
