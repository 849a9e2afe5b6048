//! Orthonormal bases of L²([0,1]) used as projection spaces.
//!
//! Two families are provided:
//!
//! * `Histogram`: φ_m = √M · 1_{[(m-1)/M, m/M)} for m = 1..M (the last bin is
//!   closed at 1);
//! * `Trig`: φ_1 = 1, φ_2j = √2 cos(2πjy), φ_{2j+1} = √2 sin(2πjy), so M is
//!   odd.
//!
//! Coefficient vectors are always expressed in the basis order above; all
//! L² geometry then reduces to Euclidean geometry on coefficients.

use nalgebra::DVector;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize};
use std::f64::consts::{SQRT_2, TAU};

use crate::density::Density;
use crate::error::{Error, Result};
use crate::quad::Quadrature;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Histogram,
    Trig,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BasisFamily {
    #[serde(rename = "basis")]
    kind: BasisKind,
    #[serde(rename = "M")]
    m: usize,
}

impl BasisFamily {
    pub fn new(kind: BasisKind, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::DomainViolation {
                what: "basis size must be at least 1".into(),
            });
        }
        if kind == BasisKind::Trig && m % 2 == 0 {
            return Err(Error::DomainViolation {
                what: format!("trigonometric basis size must be odd, got {m}"),
            });
        }
        Ok(BasisFamily { kind, m })
    }

    pub fn histogram(m: usize) -> Result<Self> {
        Self::new(BasisKind::Histogram, m)
    }

    pub fn trig(m: usize) -> Result<Self> {
        Self::new(BasisKind::Trig, m)
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    /// The number of basis functions M.
    pub fn size(&self) -> usize {
        self.m
    }

    /// φ_m(y) for the 1-based index `m`.
    pub fn evaluate(&self, m: usize, y: f64) -> Result<f64> {
        if m == 0 || m > self.m {
            return Err(Error::DomainViolation {
                what: format!("basis index {m} out of range 1..={}", self.m),
            });
        }
        if !(0.0..=1.0).contains(&y) {
            return Err(Error::DomainViolation {
                what: format!("evaluation point {y} outside [0,1]"),
            });
        }
        Ok(self.phi(m - 1, y))
    }

    /// φ at 0-based index, unchecked; hot path for the moment accumulators.
    pub(crate) fn phi(&self, m0: usize, y: f64) -> f64 {
        match self.kind {
            BasisKind::Histogram => {
                if self.bin(y) == m0 {
                    (self.m as f64).sqrt()
                } else {
                    0.0
                }
            }
            BasisKind::Trig => {
                if m0 == 0 {
                    1.0
                } else {
                    let arg = TAU * m0.div_ceil(2) as f64 * y;
                    if m0 % 2 == 1 {
                        SQRT_2 * arg.cos()
                    } else {
                        SQRT_2 * arg.sin()
                    }
                }
            }
        }
    }

    /// Fills `out` with (φ_1(y), ..., φ_M(y)).
    pub fn eval_all(&self, y: f64, out: &mut [f64]) {
        assert_eq!(out.len(), self.m);
        match self.kind {
            BasisKind::Histogram => {
                out.fill(0.0);
                out[self.bin(y)] = (self.m as f64).sqrt();
            }
            BasisKind::Trig => {
                out[0] = 1.0;
                for j in 1..=(self.m - 1) / 2 {
                    let (s, c) = (TAU * j as f64 * y).sin_cos();
                    out[2 * j - 1] = SQRT_2 * c;
                    out[2 * j] = SQRT_2 * s;
                }
            }
        }
    }

    /// 0-based histogram bin of `y`; y = 1 falls in the last bin.
    pub(crate) fn bin(&self, y: f64) -> usize {
        ((y * self.m as f64) as usize).min(self.m - 1)
    }

    /// The vector c with c_m = ∫φ_m: all M^{-1/2} for histograms, e_1 for
    /// the trigonometric family.
    pub fn integral_coeffs(&self) -> DVector<f64> {
        match self.kind {
            BasisKind::Histogram => DVector::from_element(self.m, 1.0 / (self.m as f64).sqrt()),
            BasisKind::Trig => {
                let mut c = DVector::zeros(self.m);
                c[0] = 1.0;
                c
            }
        }
    }

    /// Projection coefficients (⟨f, φ_m⟩)_m.
    ///
    /// Histogram coefficients are per-bin integrals on a quadrature aligned
    /// with the bin; trigonometric ones use the default global scheme. An
    /// expansion over the same basis is returned exactly.
    pub fn project(&self, f: &Density) -> DVector<f64> {
        if let Density::Expansion { basis, coeffs } = f {
            if basis == self {
                return DVector::from_vec(coeffs.clone());
            }
        }
        match self.kind {
            BasisKind::Histogram => {
                let scale = (self.m as f64).sqrt();
                DVector::from_fn(self.m, |m0, _| {
                    let lo = m0 as f64 / self.m as f64;
                    let hi = (m0 + 1) as f64 / self.m as f64;
                    scale * Quadrature::composite(lo, hi, 64, 16).integrate(|y| f.eval(y))
                })
            }
            BasisKind::Trig => {
                let q = Quadrature::unit();
                let mut coeffs = DVector::zeros(self.m);
                let mut phi = vec![0.0; self.m];
                for &(y, w) in q.points() {
                    let fy = w * f.eval(y);
                    self.eval_all(y, &mut phi);
                    for (c, p) in coeffs.iter_mut().zip(&phi) {
                        *c += fy * p;
                    }
                }
                coeffs
            }
        }
    }

    /// The tensor-product norm bound η₃: the sup, over two point triples, of
    /// the Euclidean distance between the associated product-basis evaluation
    /// vectors.
    ///
    /// Exact for histograms; for the trigonometric family the sup is taken
    /// over a 64-point grid per coordinate, reduced by the factorization of
    /// the squared distance into per-coordinate kernel values.
    pub fn eta3(&self) -> f64 {
        match self.kind {
            BasisKind::Histogram => {
                if self.m == 1 {
                    0.0
                } else {
                    // Disjoint bin triples attain the sup.
                    SQRT_2 * (self.m as f64).powf(1.5)
                }
            }
            BasisKind::Trig => {
                const GRID: usize = 64;
                let pts: Vec<f64> = (0..GRID).map(|i| i as f64 / (GRID - 1) as f64).collect();
                let mut phi = vec![vec![0.0; self.m]; GRID];
                for (row, &y) in phi.iter_mut().zip(&pts) {
                    self.eval_all(y, row);
                }
                // The squared distance is S(y₁)S(y₂)S(y₃) + S(y'₁)S(y'₂)S(y'₃)
                // − 2 T(y₁,y'₁)T(y₂,y'₂)T(y₃,y'₃), with S(u) = Σφ_a(u)² and
                // T(u,v) = Σφ_a(u)φ_a(v). S is identically M here, so the sup
                // needs only the extremes of T over the grid.
                let s = self.m as f64;
                let mut tmin = f64::INFINITY;
                let mut tmax = f64::NEG_INFINITY;
                for a in &phi {
                    for b in &phi {
                        let t: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
                        tmin = tmin.min(t);
                        tmax = tmax.max(t);
                    }
                }
                let mut min_prod = f64::INFINITY;
                for t1 in [tmin, tmax] {
                    for t2 in [tmin, tmax] {
                        for t3 in [tmin, tmax] {
                            min_prod = min_prod.min(t1 * t2 * t3);
                        }
                    }
                }
                (2.0 * s * s * s - 2.0 * min_prod).max(0.0).sqrt()
            }
        }
    }
}

impl<'de> Deserialize<'de> for BasisFamily {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            basis: BasisKind,
            #[serde(rename = "M")]
            m: usize,
        }
        let r = Repr::deserialize(d)?;
        BasisFamily::new(r.basis, r.m).map_err(D::Error::custom)
    }
}

/// ⟨Σ a1_m φ_m, Σ a2_m φ_m⟩ = Σ a1_m a2_m, by orthonormality.
pub fn inner_product(a1: &DVector<f64>, a2: &DVector<f64>) -> Result<f64> {
    if a1.len() != a2.len() {
        return Err(Error::DimensionMismatch {
            expected: a1.len(),
            got: a2.len(),
        });
    }
    Ok(a1.dot(a2))
}
