//! Chain simulation: triples of consecutive observations under the two
//! observation designs.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma};
use serde::{Deserialize, Serialize};

use crate::density::Density;
use crate::error::{Error, Result};
use crate::model::HmmSpec;
use crate::rng::{stream_rng, streams};

/// How triples are collected.
///
/// `A`: independent triples, each from a fresh stationary start.
/// `B`: one stationary chain of length N+2, observed through its N
/// overlapping triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scenario {
    A,
    B,
}

/// Draws N observation triples; deterministic given the seed.
pub fn sample_chain(
    spec: &HmmSpec,
    n: usize,
    scenario: Scenario,
    seed: u64,
) -> Result<Vec<[f64; 3]>> {
    Ok(sample_chain_with_states(spec, n, scenario, seed)?.0)
}

/// Like [`sample_chain`], but also returns the hidden state triples. The
/// states are unobservable in the statistical model; they are exposed only
/// so tests can check occupancy laws against the stationary distribution.
pub fn sample_chain_with_states(
    spec: &HmmSpec,
    n: usize,
    scenario: Scenario,
    seed: u64,
) -> Result<(Vec<[f64; 3]>, Vec<[usize; 3]>)> {
    if n == 0 {
        return Err(Error::DomainViolation {
            what: "sample count must be at least 1".into(),
        });
    }
    spec.validate()?;
    let pi = spec.q.stationary()?;
    let pi_weights: Vec<f64> = pi.vector().iter().copied().collect();
    let q = spec.q.matrix();
    let rows: Vec<Vec<f64>> = (0..spec.k())
        .map(|i| (0..spec.k()).map(|j| q[(i, j)]).collect())
        .collect();
    let mut rng = stream_rng(seed, streams::SAMPLING);

    let mut ys = Vec::with_capacity(n);
    let mut xs = Vec::with_capacity(n);
    match scenario {
        Scenario::A => {
            for _ in 0..n {
                let x1 = categorical(&mut rng, &pi_weights);
                let x2 = categorical(&mut rng, &rows[x1]);
                let x3 = categorical(&mut rng, &rows[x2]);
                let y = [
                    draw_emission(&mut rng, &spec.emissions[x1])?,
                    draw_emission(&mut rng, &spec.emissions[x2])?,
                    draw_emission(&mut rng, &spec.emissions[x3])?,
                ];
                ys.push(y);
                xs.push([x1, x2, x3]);
            }
        }
        Scenario::B => {
            let len = n + 2;
            let mut states = Vec::with_capacity(len);
            let mut obs = Vec::with_capacity(len);
            let mut x = categorical(&mut rng, &pi_weights);
            for t in 0..len {
                if t > 0 {
                    x = categorical(&mut rng, &rows[x]);
                }
                states.push(x);
                obs.push(draw_emission(&mut rng, &spec.emissions[x])?);
            }
            for s in 0..n {
                ys.push([obs[s], obs[s + 1], obs[s + 2]]);
                xs.push([states[s], states[s + 1], states[s + 2]]);
            }
        }
    }
    Ok((ys, xs))
}

fn categorical(rng: &mut ChaCha8Rng, weights: &[f64]) -> usize {
    let u: f64 = rng.random();
    let mut cum = 0.0;
    for (i, &w) in weights.iter().enumerate() {
        cum += w;
        if u < cum {
            return i;
        }
    }
    weights.len() - 1
}

fn draw_emission(rng: &mut ChaCha8Rng, f: &Density) -> Result<f64> {
    match f {
        Density::Beta { alpha, beta } => {
            // Ratio of gammas: X ~ Γ(α), Y ~ Γ(β) gives X/(X+Y) ~ Beta(α,β).
            let ga = Gamma::new(*alpha, 1.0).map_err(|e| Error::DomainViolation {
                what: format!("bad beta parameter: {e}"),
            })?;
            let gb = Gamma::new(*beta, 1.0).map_err(|e| Error::DomainViolation {
                what: format!("bad beta parameter: {e}"),
            })?;
            let x: f64 = ga.sample(rng);
            let y: f64 = gb.sample(rng);
            Ok(x / (x + y))
        }
        other => rejection_sample(rng, other),
    }
}

/// Rejection sampling for non-beta densities, with an envelope from a grid
/// sup. Valid only for genuinely nonnegative densities.
fn rejection_sample(rng: &mut ChaCha8Rng, f: &Density) -> Result<f64> {
    const GRID: usize = 4096;
    let mut sup: f64 = 0.0;
    for i in 0..=GRID {
        let y = i as f64 / GRID as f64;
        let v = f.eval(y);
        if v < -1e-9 {
            return Err(Error::DomainViolation {
                what: format!("density negative at {y} ({v}); cannot sample"),
            });
        }
        sup = sup.max(v);
    }
    if sup <= 0.0 {
        return Err(Error::DomainViolation {
            what: "density vanishes identically; cannot sample".into(),
        });
    }
    let bound = sup * 1.125;
    loop {
        let y: f64 = rng.random();
        let u: f64 = rng.random();
        if u * bound < f.eval(y).max(0.0) {
            return Ok(y);
        }
    }
}
