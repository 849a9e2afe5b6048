//! The least-squares contrast against direct pointwise evaluation and the
//! algebraic identity that links it to the joint-density distance.

mod common;

use nalgebra::DMatrix;
use nphmm_core::contrast::{gamma, minimize_gamma, Reparam};
use nphmm_core::moments::empirical_moments;
use nphmm_core::sample::sample_chain;
use nphmm_core::{
    BasisFamily, BasisKind, ContrastContext, Density, HmmSpec, JointModel, OptimizerConfig,
    Scenario, TransitionMatrix,
};

fn two_state_spec() -> HmmSpec {
    HmmSpec::new(
        TransitionMatrix::from_rows(&[vec![0.7, 0.3], vec![0.4, 0.6]]).unwrap(),
        vec![
            Density::Beta { alpha: 2.0, beta: 5.0 },
            Density::Beta { alpha: 4.0, beta: 2.0 },
        ],
    )
    .unwrap()
}

/// The exact joint density of a two-state spec with beta emissions.
fn spec_joint_density(spec: &HmmSpec, y: [f64; 3]) -> f64 {
    let pi = spec.q.stationary().unwrap();
    let q = spec.q.matrix();
    let k = spec.k();
    let mut total = 0.0;
    for k1 in 0..k {
        for k2 in 0..k {
            for k3 in 0..k {
                total += pi.get(k1)
                    * q[(k1, k2)]
                    * q[(k2, k3)]
                    * spec.emissions[k1].eval(y[0])
                    * spec.emissions[k2].eval(y[1])
                    * spec.emissions[k3].eval(y[2]);
            }
        }
    }
    total
}

#[test]
fn contracted_gamma_equals_direct_evaluation() {
    let spec = two_state_spec();
    let mut rng = common::test_rng(51);
    for (kind, m, n) in [
        (BasisKind::Trig, 5usize, 3usize),
        (BasisKind::Trig, 7, 100),
        (BasisKind::Histogram, 8, 64),
    ] {
        let basis = BasisFamily::new(kind, m).unwrap();
        let data = sample_chain(&spec, n, Scenario::B, 60 + n as u64).unwrap();
        let mom = empirical_moments(&data, &basis).unwrap();
        let q_fixed = common::random_ergodic_q(2, 0.05, &mut rng);
        let ctx = ContrastContext::new(mom, q_fixed.clone(), basis.clone()).unwrap();
        let a = common::random_coefficients(&basis, 2, &mut rng);
        let closed = gamma(&ctx, &a).unwrap();

        let model = JointModel::new(q_fixed, a, basis).unwrap();
        let mean: f64 =
            data.iter().map(|&z| model.joint_density(z)).sum::<f64>() / data.len() as f64;
        let direct = model.joint_norm_sq() - 2.0 * mean;
        assert!(
            (closed - direct).abs() <= 1e-10 * direct.abs().max(1.0),
            "{kind:?} M={m} N={n}: {closed} vs {direct}"
        );
    }
}

#[test]
fn gamma_differences_decompose_against_the_true_density() {
    // gamma(t1) - gamma(t2) = ||t1-g||^2 - ||t2-g||^2 - 2 nu(t1-t2), with
    // nu(u) the centered empirical average of u. Norms and inner products
    // against g come from cube quadrature, gamma from the closed form.
    let spec = two_state_spec();
    let basis = BasisFamily::trig(5).unwrap();
    let data = sample_chain(&spec, 50, Scenario::B, 77).unwrap();
    let mom = empirical_moments(&data, &basis).unwrap();
    let mut rng = common::test_rng(52);
    let q_fixed = common::random_ergodic_q(2, 0.05, &mut rng);
    let ctx = ContrastContext::new(mom, q_fixed.clone(), basis.clone()).unwrap();

    let a1 = common::random_coefficients(&basis, 2, &mut rng);
    let a2 = common::random_coefficients(&basis, 2, &mut rng);
    let t1 = JointModel::new(q_fixed.clone(), a1.clone(), basis.clone()).unwrap();
    let t2 = JointModel::new(q_fixed, a2.clone(), basis).unwrap();

    let lhs = gamma(&ctx, &a1).unwrap() - gamma(&ctx, &a2).unwrap();

    // One pass over the cube accumulates all three integrals.
    let mut dist1 = 0.0;
    let mut dist2 = 0.0;
    let mut cross = 0.0;
    let rule = nphmm_core::quad::Quadrature::composite(0.0, 1.0, 8, 12);
    let pts = rule.points();
    for &(x, wx) in pts {
        for &(y, wy) in pts {
            for &(z, wz) in pts {
                let pt = [x, y, z];
                let w = wx * wy * wz;
                let g = spec_joint_density(&spec, pt);
                let v1 = t1.joint_density(pt);
                let v2 = t2.joint_density(pt);
                dist1 += w * (v1 - g).powi(2);
                dist2 += w * (v2 - g).powi(2);
                cross += w * (v1 - v2) * g;
            }
        }
    }
    let sample_mean: f64 = data
        .iter()
        .map(|&z| t1.joint_density(z) - t2.joint_density(z))
        .sum::<f64>()
        / data.len() as f64;
    let nu = sample_mean - cross;
    let rhs = dist1 - dist2 - 2.0 * nu;
    assert!(
        (lhs - rhs).abs() <= 1e-8 * lhs.abs().max(1.0),
        "{lhs} vs {rhs}"
    );
}

#[test]
fn gamma_is_invariant_under_simultaneous_relabeling() {
    let spec = two_state_spec();
    let basis = BasisFamily::trig(7).unwrap();
    let data = sample_chain(&spec, 200, Scenario::B, 78).unwrap();
    let mom = empirical_moments(&data, &basis).unwrap();
    let mut rng = common::test_rng(53);
    let q_fixed = common::random_ergodic_q(2, 0.05, &mut rng);
    let a = common::random_coefficients(&basis, 2, &mut rng);
    let perm = [1usize, 0];
    let a_perm = DMatrix::from_fn(basis.size(), 2, |i, j| a[(i, perm[j])]);

    let ctx = ContrastContext::new(mom.clone(), q_fixed.clone(), basis.clone()).unwrap();
    let ctx_perm = ContrastContext::new(mom, q_fixed.permuted(&perm), basis).unwrap();
    let g1 = gamma(&ctx, &a).unwrap();
    let g2 = gamma(&ctx_perm, &a_perm).unwrap();
    assert!((g1 - g2).abs() <= 1e-12 * g1.abs().max(1.0));
}

#[test]
fn single_state_fit_matches_a_grid_refined_optimum() {
    // With one state the contrast depends on the two free chart coordinates
    // only; nested grid refinement gives an independent optimum.
    let spec = HmmSpec::new(
        TransitionMatrix::from_rows(&[vec![1.0]]).unwrap(),
        vec![Density::Beta { alpha: 2.0, beta: 5.0 }],
    )
    .unwrap();
    let basis = BasisFamily::trig(3).unwrap();
    let data = sample_chain(&spec, 2000, Scenario::B, 79).unwrap();
    let mom = empirical_moments(&data, &basis).unwrap();
    let q1 = TransitionMatrix::from_rows(&[vec![1.0]]).unwrap();
    let ctx = ContrastContext::new(mom, q1, basis.clone()).unwrap();
    let rep = Reparam::new(&basis);

    let eval = |z: &[f64]| {
        let a = rep.to_coeffs(z, 1);
        gamma(&ctx, &a).unwrap()
    };
    let mut center = [0.0f64, 0.0];
    let mut half = 2.0f64;
    let mut best = (f64::INFINITY, center);
    for _ in 0..12 {
        for i in -8i32..=8 {
            for j in -8i32..=8 {
                let z = [
                    center[0] + half * i as f64 / 8.0,
                    center[1] + half * j as f64 / 8.0,
                ];
                let v = eval(&z);
                if v < best.0 {
                    best = (v, z);
                }
            }
        }
        center = best.1;
        half /= 4.0;
    }

    let a0 = rep.to_coeffs(&[0.0, 0.0], 1);
    let cfg = OptimizerConfig {
        dim: 2,
        sigma0: Some(0.5),
        max_evals: 4000,
        seed: 9,
        population: None,
        tol_fun: 1e-14,
        stream_tag: 0,
    };
    let fit = minimize_gamma(&ctx, &a0, &cfg).unwrap();
    assert!(
        (fit.gamma_value - best.0).abs() <= 1e-4,
        "optimizer {} vs grid {}",
        fit.gamma_value,
        best.0
    );
}

#[test]
fn gamma_at_the_truth_approaches_minus_the_squared_norm() {
    let spec = two_state_spec();
    let basis = BasisFamily::trig(21).unwrap();
    // ||g*||^2 by cube quadrature of the exact beta joint density.
    let rule = nphmm_core::quad::Quadrature::composite(0.0, 1.0, 8, 12);
    let pts = rule.points();
    let mut norm_sq = 0.0;
    for &(x, wx) in pts {
        for &(y, wy) in pts {
            for &(z, wz) in pts {
                norm_sq += wx * wy * wz * spec_joint_density(&spec, [x, y, z]).powi(2);
            }
        }
    }
    let a_true = nphmm_core::evaluate::project_densities(&basis, &spec.emissions);
    let mut gaps: Vec<f64> = (0..10u64)
        .map(|s| {
            let data = sample_chain(&spec, 100_000, Scenario::B, 80 + s).unwrap();
            let mom = empirical_moments(&data, &basis).unwrap();
            let ctx = ContrastContext::new(mom, spec.q.clone(), basis.clone()).unwrap();
            (gamma(&ctx, &a_true).unwrap() + norm_sq).abs()
        })
        .collect();
    gaps.sort_by(f64::total_cmp);
    let median = gaps[5];
    assert!(median <= 0.05 * norm_sq, "median gap {median} vs {norm_sq}");
}

#[test]
fn refinement_from_the_truth_never_worsens_it() {
    let spec = two_state_spec();
    let basis = BasisFamily::trig(9).unwrap();
    let data = sample_chain(&spec, 100_000, Scenario::B, 81).unwrap();
    let mom = empirical_moments(&data, &basis).unwrap();
    let ctx = ContrastContext::new(mom, spec.q.clone(), basis.clone()).unwrap();
    let a_true = nphmm_core::evaluate::project_densities(&basis, &spec.emissions);
    let start = gamma(&ctx, &a_true).unwrap();
    let cfg = OptimizerConfig {
        dim: 16,
        sigma0: Some(0.05),
        max_evals: 2000,
        seed: 13,
        population: None,
        tol_fun: 1e-12,
        stream_tag: 0,
    };
    let fit = minimize_gamma(&ctx, &a_true, &cfg).unwrap();
    assert!(fit.gamma_value <= start + 1e-15);
    assert!((fit.gamma_value - start).abs() <= 1e-3);
}
