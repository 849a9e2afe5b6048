//! HMM parameter types and the joint law of three consecutive observations.
//!
//! The estimators never see more than triples (Y₁,Y₂,Y₃); under stationarity
//! their joint density is
//!
//! g(y₁,y₂,y₃) = Σ_{k₁,k₂,k₃} π(k₁) Q(k₁,k₂) Q(k₂,k₃) f_{k₁}(y₁) f_{k₂}(y₂) f_{k₃}(y₃),
//!
//! and with emissions expanded over an orthonormal basis, every L² quantity
//! of g reduces to finite linear algebra on the coefficient matrix A.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::basis::BasisFamily;
use crate::density::Density;
use crate::error::{Error, Result};
use crate::serde_util::{mat_to_rows, rows_to_mat};

const ROW_SUM_TOL: f64 = 1e-12;

/// A row-stochastic K×K matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionMatrix {
    q: DMatrix<f64>,
}

impl TransitionMatrix {
    pub fn new(q: DMatrix<f64>) -> Result<Self> {
        if !q.is_square() || q.nrows() == 0 {
            return Err(Error::DomainViolation {
                what: "transition matrix must be square and nonempty".into(),
            });
        }
        for i in 0..q.nrows() {
            let mut sum = 0.0;
            for j in 0..q.ncols() {
                let v = q[(i, j)];
                if !(-ROW_SUM_TOL..=1.0 + ROW_SUM_TOL).contains(&v) {
                    return Err(Error::DomainViolation {
                        what: format!("entry ({i},{j}) = {v} outside [0,1]"),
                    });
                }
                sum += v;
            }
            if (sum - 1.0).abs() > ROW_SUM_TOL {
                return Err(Error::DomainViolation {
                    what: format!("row {i} sums to {sum}, not 1"),
                });
            }
        }
        Ok(TransitionMatrix { q })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let m = rows_to_mat(rows).ok_or_else(|| Error::DomainViolation {
            what: "ragged or empty transition matrix".into(),
        })?;
        Self::new(m)
    }

    pub fn k(&self) -> usize {
        self.q.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.q
    }

    /// Irreducibility and aperiodicity, by strict positivity of (Q+I)^K.
    pub fn is_ergodic(&self) -> bool {
        let k = self.k();
        let mut p = DMatrix::identity(k, k);
        let qi = &self.q + DMatrix::identity(k, k);
        for _ in 0..k {
            p *= &qi;
        }
        p.iter().all(|&v| v > 0.0)
    }

    /// The unique fixed point of πQ = π, by a direct linear solve of
    /// (Qᵀ − I)π = 0 with the last equation replaced by Σπ = 1.
    pub fn stationary(&self) -> Result<StationaryDistribution> {
        if !self.is_ergodic() {
            return Err(Error::NotErgodic);
        }
        let k = self.k();
        let mut sys = self.q.transpose() - DMatrix::identity(k, k);
        let mut rhs = DVector::zeros(k);
        for j in 0..k {
            sys[(k - 1, j)] = 1.0;
        }
        rhs[k - 1] = 1.0;
        let pi = sys
            .col_piv_qr()
            .solve(&rhs)
            .ok_or(Error::NotErgodic)?;
        let residual = (self.q.transpose() * &pi - &pi).amax();
        if residual > 1e-10 || pi.iter().any(|&p| p < 0.0) {
            return Err(Error::NotErgodic);
        }
        Ok(StationaryDistribution { pi })
    }

    /// The stationary distribution when the chain is ergodic, and otherwise
    /// the uniform-start limit of the damped chain (Q + I)/2, which exists
    /// for every stochastic matrix and is deterministic.
    ///
    /// Estimated transition matrices projected onto the boundary of the
    /// simplex can be reducible; downstream stages that only need *a*
    /// stationary weighting (the spectral step, the contrast) use this
    /// instead of failing.
    pub fn stationary_or_limit(&self) -> StationaryDistribution {
        if let Ok(pi) = self.stationary() {
            return pi;
        }
        let k = self.k();
        let mut p = DVector::from_element(k, 1.0 / k as f64);
        for _ in 0..20_000 {
            // π ← π (Q + I)/2, with π as a column vector.
            let next = 0.5 * (self.q.tr_mul(&p) + &p);
            let delta = (&next - &p).amax();
            p = next;
            if delta <= 1e-14 {
                break;
            }
        }
        for v in p.iter_mut() {
            *v = v.max(0.0);
        }
        let total: f64 = p.iter().sum();
        p /= total;
        StationaryDistribution { pi: p }
    }

    /// P Q Pᵀ for the permutation `perm` (state i of the result is state
    /// perm[i] of self).
    pub fn permuted(&self, perm: &[usize]) -> TransitionMatrix {
        let k = self.k();
        assert_eq!(perm.len(), k);
        let q = DMatrix::from_fn(k, k, |i, j| self.q[(perm[i], perm[j])]);
        TransitionMatrix { q }
    }
}

impl Serialize for TransitionMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        mat_to_rows(&self.q).serialize(s)
    }
}

impl<'de> Deserialize<'de> for TransitionMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let rows = Vec::<Vec<f64>>::deserialize(d)?;
        TransitionMatrix::from_rows(&rows).map_err(D::Error::custom)
    }
}

/// A probability vector fixed by its generating transition matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct StationaryDistribution {
    pi: DVector<f64>,
}

impl StationaryDistribution {
    /// Wraps an externally computed probability vector; entries must be
    /// nonnegative and sum to 1.
    pub fn new(pi: DVector<f64>) -> Result<Self> {
        if pi.is_empty() || pi.iter().any(|&p| p < -ROW_SUM_TOL) {
            return Err(Error::DomainViolation {
                what: "probability vector must be nonnegative".into(),
            });
        }
        if (pi.sum() - 1.0).abs() > ROW_SUM_TOL {
            return Err(Error::DomainViolation {
                what: format!("probabilities sum to {}, not 1", pi.sum()),
            });
        }
        Ok(StationaryDistribution { pi })
    }

    pub fn k(&self) -> usize {
        self.pi.len()
    }

    pub fn vector(&self) -> &DVector<f64> {
        &self.pi
    }

    pub fn get(&self, k: usize) -> f64 {
        self.pi[k]
    }
}

impl Serialize for StationaryDistribution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.pi.iter().copied().collect::<Vec<f64>>().serialize(s)
    }
}

impl<'de> Deserialize<'de> for StationaryDistribution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let v = Vec::<f64>::deserialize(d)?;
        StationaryDistribution::new(DVector::from_vec(v)).map_err(D::Error::custom)
    }
}

/// A complete generating model: transition matrix plus one emission density
/// per hidden state.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HmmSpec {
    #[serde(rename = "Q")]
    pub q: TransitionMatrix,
    pub emissions: Vec<Density>,
}

impl HmmSpec {
    pub fn new(q: TransitionMatrix, emissions: Vec<Density>) -> Result<Self> {
        let spec = HmmSpec { q, emissions };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.q.k() != self.emissions.len() {
            return Err(Error::DimensionMismatch {
                expected: self.q.k(),
                got: self.emissions.len(),
            });
        }
        for (k, f) in self.emissions.iter().enumerate() {
            if matches!(f, Density::Custom(_)) {
                continue;
            }
            let mass = f.integral();
            if (mass - 1.0).abs() > 1e-6 {
                return Err(Error::DomainViolation {
                    what: format!("emission {k} integrates to {mass}, not 1"),
                });
            }
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.q.k()
    }

    /// The model with states relabeled by `perm` (state i of the result is
    /// state perm[i] of self).
    pub fn permuted(&self, perm: &[usize]) -> HmmSpec {
        HmmSpec {
            q: self.q.permuted(perm),
            emissions: perm.iter().map(|&p| self.emissions[p].clone()).collect(),
        }
    }
}

/// A model whose emissions live in the span of a fixed basis: the joint
/// density is a polynomial in the coefficient matrix A (M×K, one column per
/// state).
#[derive(Clone, Debug)]
pub struct JointModel {
    pub q: TransitionMatrix,
    pub pi: StationaryDistribution,
    pub a: DMatrix<f64>,
    pub basis: BasisFamily,
}

impl JointModel {
    /// Builds the model, deriving π from Q and checking that every column of
    /// A integrates to 1 (cᵀ A(·,k) = 1 with c the basis integral vector).
    pub fn new(q: TransitionMatrix, a: DMatrix<f64>, basis: BasisFamily) -> Result<Self> {
        if a.nrows() != basis.size() {
            return Err(Error::DimensionMismatch {
                expected: basis.size(),
                got: a.nrows(),
            });
        }
        if a.ncols() != q.k() {
            return Err(Error::DimensionMismatch {
                expected: q.k(),
                got: a.ncols(),
            });
        }
        let c = basis.integral_coeffs();
        for k in 0..a.ncols() {
            let mass = c.dot(&a.column(k));
            if (mass - 1.0).abs() > 1e-6 {
                return Err(Error::DomainViolation {
                    what: format!("coefficient column {k} integrates to {mass}, not 1"),
                });
            }
        }
        let pi = q.stationary()?;
        Ok(JointModel { q, pi, a, basis })
    }

    /// Projects the emissions of `spec` onto `basis`.
    pub fn from_spec(spec: &HmmSpec, basis: BasisFamily) -> Result<Self> {
        let m = basis.size();
        let mut a = DMatrix::zeros(m, spec.k());
        for (k, f) in spec.emissions.iter().enumerate() {
            a.set_column(k, &basis.project(f));
        }
        // The constant function lies in the span of both families, so the
        // coefficient mass cᵀa equals ∫f = 1 up to quadrature rounding;
        // rescale to make the constraint exact.
        let c = basis.integral_coeffs();
        for k in 0..a.ncols() {
            let mass = c.dot(&a.column(k));
            if mass.abs() < 1e-8 {
                return Err(Error::DomainViolation {
                    what: format!("projected emission {k} has vanishing mass"),
                });
            }
            a.column_mut(k).scale_mut(1.0 / mass);
        }
        Self::new(spec.q.clone(), a, basis)
    }

    pub fn k(&self) -> usize {
        self.q.k()
    }

    pub fn m(&self) -> usize {
        self.basis.size()
    }

    /// f_k evaluated at `y`, for all k.
    fn emissions_at(&self, y: f64, phi: &mut [f64]) -> DVector<f64> {
        self.basis.eval_all(y, phi);
        let phi_v = DVector::from_column_slice(phi);
        self.a.transpose() * phi_v
    }

    /// g(y₁,y₂,y₃), evaluated through the chain factorization
    /// Σ_{k₂} [Σ_{k₁} π Q f(y₁)] f_{k₂}(y₂) [Σ_{k₃} Q f(y₃)].
    pub fn joint_density(&self, y: [f64; 3]) -> f64 {
        let mut phi = vec![0.0; self.m()];
        let f1 = self.emissions_at(y[0], &mut phi);
        let f2 = self.emissions_at(y[1], &mut phi);
        let f3 = self.emissions_at(y[2], &mut phi);
        let q = self.q.matrix();
        let k = self.k();
        let mut total = 0.0;
        for k2 in 0..k {
            let mut left = 0.0;
            let mut right = 0.0;
            for k1 in 0..k {
                left += self.pi.get(k1) * q[(k1, k2)] * f1[k1];
            }
            for k3 in 0..k {
                right += q[(k2, k3)] * f3[k3];
            }
            total += left * f2[k2] * right;
        }
        total
    }

    /// ‖g‖²₂ in closed form.
    pub fn joint_norm_sq(&self) -> f64 {
        let gram = self.a.transpose() * &self.a;
        joint_norm_sq_from(&self.pi, &self.q, &gram)
    }
}

/// ‖g‖²₂ = Σ_{k,k'} w(k)w(k') G(k₁,k'₁)G(k₂,k'₂)G(k₃,k'₃) with
/// w(k₁,k₂,k₃) = π(k₁)Q(k₁,k₂)Q(k₂,k₃) and G the Gram matrix of the
/// coefficient columns.
///
/// The six-fold sum telescopes into transfer-matrix products:
/// Σ = 1ᵀ [ππᵀ ∘ G ∘ Q(G ∘ QGQᵀ)Qᵀ] 1.
pub fn joint_norm_sq_from(
    pi: &StationaryDistribution,
    q: &TransitionMatrix,
    gram: &DMatrix<f64>,
) -> f64 {
    let qm = q.matrix();
    let inner = qm * gram * qm.transpose();
    let mid = qm * gram.component_mul(&inner) * qm.transpose();
    let pi_outer = pi.vector() * pi.vector().transpose();
    pi_outer.component_mul(gram).component_mul(&mid).sum()
}
