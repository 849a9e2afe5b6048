//! The determinant criterion at scale: positivity sweeps, the explicit
//! two-state cross-check, and the second-order expansion of the joint
//! distance.

mod common;

use nalgebra::DMatrix;
use nphmm_core::hd::{
    chain_check_k2, determinant_h, evaluate_p5, explicit_k2_d, quadratic_form_d,
};
use nphmm_core::model::joint_norm_sq_from;
use nphmm_core::{BasisKind, GramMatrix, TransitionMatrix, ZeroRowSumMatrix};
use rand::Rng;

/// A random positive-definite 2x2 Gram from two unit-ish densities.
fn random_gram2(rng: &mut rand_chacha::ChaCha8Rng) -> GramMatrix {
    let n1 = 1.0 + 2.0 * rng.random::<f64>();
    let n2 = n1 * (0.2 + 0.8 * rng.random::<f64>());
    let a = 0.95 * rng.random::<f64>();
    GramMatrix::from_norms(n1, n2, a).unwrap()
}

fn random_2x2_q(rng: &mut rand_chacha::ChaCha8Rng) -> (f64, f64, TransitionMatrix) {
    loop {
        let p = 0.02 + 0.96 * rng.random::<f64>();
        let q = 0.02 + 0.96 * rng.random::<f64>();
        // Stay away from the rank-one line where the determinant vanishes.
        if (q - (1.0 - p)).abs() < 0.02 {
            continue;
        }
        let t =
            TransitionMatrix::from_rows(&[vec![1.0 - p, p], vec![q, 1.0 - q]]).unwrap();
        return (p, q, t);
    }
}

#[test]
fn explicit_coefficients_match_the_general_form_at_scale() {
    let mut rng = common::test_rng(61);
    for _ in 0..500 {
        let (p, q, trans) = random_2x2_q(&mut rng);
        let gram = random_gram2(&mut rng);
        let alpha = 2.0 * rng.random::<f64>() - 1.0;
        let beta = 2.0 * rng.random::<f64>() - 1.0;
        let u = ZeroRowSumMatrix::from_free(
            &DMatrix::from_row_slice(2, 1, &[alpha, beta]),
        )
        .unwrap();
        let general = quadratic_form_d(&trans, &gram, &u).unwrap();
        let explicit = explicit_k2_d(p, q, &gram, alpha, beta).unwrap();
        assert!(
            (general - explicit).abs() <= 1e-9 * general.abs().max(1.0),
            "p={p} q={q}: {general} vs {explicit}"
        );
    }
}

#[test]
fn form_is_nonnegative_on_many_random_instances() {
    let mut rng = common::test_rng(62);
    for _ in 0..10_000 {
        let k = 2 + rng.random_range(0..3usize);
        let q = common::random_ergodic_q(k, 0.0, &mut rng);
        let mut g = DMatrix::zeros(k, k);
        // Random Gram as B^T B from a random tall factor.
        let b = DMatrix::from_fn(k + 2, k, |_, _| rng.random::<f64>() * 2.0 - 1.0);
        g.copy_from(&(b.transpose() * &b));
        let gram = GramMatrix::new(g).unwrap();
        let free = DMatrix::from_fn(k, k - 1, |_, _| rng.random::<f64>() * 2.0 - 1.0);
        let u = ZeroRowSumMatrix::from_free(&free).unwrap();
        let d = quadratic_form_d(&q, &gram, &u).unwrap();
        let scale = d.abs().max(1.0);
        assert!(d >= -1e-10 * scale, "negative form value {d}");
    }
}

#[test]
fn determinant_is_positive_across_valid_two_state_instances() {
    let mut rng = common::test_rng(63);
    let mut min_h = f64::INFINITY;
    for _ in 0..1000 {
        let (_, _, trans) = random_2x2_q(&mut rng);
        let gram = random_gram2(&mut rng);
        let h = determinant_h(&trans, &gram).unwrap();
        min_h = min_h.min(h.raw);
        assert!(h.raw > 0.0, "nonpositive determinant {}", h.raw);
    }
    assert!(min_h.is_finite());
}

#[test]
fn swap_symmetry_of_the_diagonal_coefficients() {
    // Relabeling the states maps (p, q, n1, n2) to (q, p, n2, n1) and swaps
    // the two diagonal coefficients of the form.
    let mut rng = common::test_rng(64);
    for _ in 0..100 {
        let (p, q, _) = random_2x2_q(&mut rng);
        let n1 = 1.0 + rng.random::<f64>();
        let n2 = 1.0 + rng.random::<f64>();
        let a = 0.9 * rng.random::<f64>();
        let g_fwd = GramMatrix::from_norms(n1, n2, a).unwrap();
        let g_swp = GramMatrix::from_norms(n2, n1, a).unwrap();
        let d_fwd = explicit_k2_d(p, q, &g_fwd, 1.0, 0.0).unwrap();
        let d_swp = explicit_k2_d(q, p, &g_swp, 0.0, 1.0).unwrap();
        assert!((d_fwd - d_swp).abs() <= 1e-10 * d_fwd.abs().max(1.0));
    }
}

#[test]
fn joint_distance_is_quadratic_in_small_perturbations() {
    // ||g^{Q, A + eps A U^T} - g^{Q, A}||^2 / eps^2 converges to the
    // quadratic form with the emission Gram; finite differences through the
    // closed-form norms at eps = 1e-4.
    let mut rng = common::test_rng(65);
    let eps = 1e-4;
    for i in 0..100usize {
        let k = 2 + (i % 2);
        let model = common::random_model(k, 7, BasisKind::Trig, &mut rng);
        let gram_m = model.a.transpose() * &model.a;
        let gram = GramMatrix::new(gram_m.clone()).unwrap();
        let mut free = DMatrix::zeros(k, k - 1);
        for v in free.iter_mut() {
            *v = rng.random::<f64>() * 2.0 - 1.0;
        }
        let u = ZeroRowSumMatrix::from_free(&free).unwrap();
        let d = quadratic_form_d(&model.q, &gram, &u).unwrap();

        let a2 = &model.a + eps * &model.a * u.matrix().transpose();
        let g11 = model.joint_norm_sq();
        let g22 = joint_norm_sq_from(&model.pi, &model.q, &(a2.transpose() * &a2));
        let g12 = joint_norm_sq_from(&model.pi, &model.q, &(model.a.transpose() * &a2));
        let dist_sq = g11 + g22 - 2.0 * g12;
        let ratio = dist_sq / (eps * eps);
        assert!(
            (ratio - d).abs() <= 1e-2 * d.max(1e-12),
            "instance {i}: {ratio} vs {d}"
        );
    }
}

#[test]
fn polynomial_is_positive_on_a_wide_random_sweep() {
    let mut rng = common::test_rng(66);
    for _ in 0..1_000_000 {
        let x = 20.0 * rng.random::<f64>() - 10.0;
        let y = 20.0 * rng.random::<f64>() - 10.0;
        let z = 20.0 * rng.random::<f64>() - 10.0;
        let t = 20.0 * rng.random::<f64>() - 10.0;
        let v = evaluate_p5(x, y, z, t);
        assert!(v > 0.0, "P5({x},{y},{z},{t}) = {v}");
    }
}

#[test]
fn chain_identity_with_a_constancy_check_of_the_ratio() {
    // Beyond pointwise agreement, the lhs/rhs ratio must be the constant 1:
    // its variance across draws detects any residual normalization factor.
    let mut rng = common::test_rng(67);
    let mut ratios = Vec::new();
    for _ in 0..200 {
        let n1 = 1.0 + 1.5 * rng.random::<f64>();
        let n2 = n1 * (0.25 + 0.7 * rng.random::<f64>());
        let a = 0.9 * rng.random::<f64>();
        let p = 0.1 + 0.8 * rng.random::<f64>();
        let lo = p - 0.95;
        let hi = p - 0.05;
        let mut d = lo + (hi - lo) * rng.random::<f64>();
        if d.abs() < 0.05 {
            d = if d >= 0.0 { 0.05 } else { -0.05 };
        }
        if d <= lo || d >= hi {
            continue;
        }
        let (lhs, rhs) = chain_check_k2(n1, n2, a, p, d).unwrap();
        assert!((lhs - rhs).abs() <= 1e-6 * lhs.abs().max(1e-12));
        ratios.push(lhs / rhs);
    }
    let mean: f64 = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let var: f64 =
        ratios.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / ratios.len() as f64;
    assert!((mean - 1.0).abs() <= 1e-8);
    assert!(var <= 1e-10);
}
