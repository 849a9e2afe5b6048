//! Composite Gauss-Legendre quadrature on bounded intervals.
//!
//! The default scheme (64 nodes per panel, 256 uniform panels on [0,1]) is
//! deterministic and accurate far beyond 1e-10 for the bounded, piecewise
//! smooth integrands used throughout: beta densities, basis functions and
//! their products.

use std::f64::consts::PI;
use std::sync::OnceLock;

/// A fixed list of nodes and weights on some interval.
#[derive(Clone, Debug)]
pub struct Quadrature {
    points: Vec<(f64, f64)>,
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on [-1,1],
/// found by Newton iteration on the Legendre recurrence.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(n);
    // Roots come in +/- pairs; solve the upper half and mirror.
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // p0, p1 walk the recurrence up to degree n.
            let mut p0 = 1.0;
            let mut p1 = x;
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push((-x, w));
        if x.abs() > 1e-12 {
            out.push((x, w));
        }
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

impl Quadrature {
    /// Composite rule with `nodes` Gauss-Legendre points on each of `panels`
    /// uniform subintervals of [lo, hi].
    pub fn composite(lo: f64, hi: f64, nodes: usize, panels: usize) -> Self {
        assert!(hi > lo && panels >= 1);
        let base = gauss_legendre(nodes);
        let h = (hi - lo) / panels as f64;
        let mut points = Vec::with_capacity(nodes * panels);
        for p in 0..panels {
            let a = lo + p as f64 * h;
            for &(x, w) in &base {
                points.push((a + (x + 1.0) * 0.5 * h, w * 0.5 * h));
            }
        }
        Quadrature { points }
    }

    /// The default scheme on [0,1]: 64 nodes per panel, 256 panels.
    pub fn unit() -> &'static Quadrature {
        static UNIT: OnceLock<Quadrature> = OnceLock::new();
        UNIT.get_or_init(|| Quadrature::composite(0.0, 1.0, 64, 256))
    }

    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.points.iter().map(|&(x, w)| w * f(x)).sum()
    }

    /// Nodes and weights, in increasing node order within each panel.
    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }
}
