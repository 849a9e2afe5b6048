//! Optimizer benchmarks on standard objectives.

use nalgebra::DVector;
use nphmm_core::cmaes::cmaes_minimize;
use nphmm_core::OptimizerConfig;

#[test]
fn sphere_reaches_deep_accuracy() {
    let cfg = OptimizerConfig::new(10, 5000, 1);
    let out = cmaes_minimize(
        |x| x.iter().map(|v| v * v).sum(),
        &DVector::from_element(10, 1.0),
        &cfg,
    )
    .unwrap();
    assert!(out.f_best <= 1e-8, "sphere stalled at {}", out.f_best);
}

#[test]
fn rosenbrock_succeeds_on_most_seeds() {
    // The banana valley from the origin; the optimum sits at the all-ones
    // point with value zero.
    let rosenbrock = |x: &DVector<f64>| -> f64 {
        (0..x.len() - 1)
            .map(|i| 100.0 * (x[i + 1] - x[i] * x[i]).powi(2) + (1.0 - x[i]).powi(2))
            .sum()
    };
    let mut successes = 0;
    for seed in 0..10 {
        let mut cfg = OptimizerConfig::new(5, 20_000, seed);
        cfg.sigma0 = Some(0.3);
        let out = cmaes_minimize(rosenbrock, &DVector::zeros(5), &cfg).unwrap();
        if out.f_best <= 1e-6 {
            successes += 1;
        }
    }
    assert!(successes >= 8, "only {successes}/10 seeds converged");
}
