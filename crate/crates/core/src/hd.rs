//! Numerical verification of the detectability condition behind the risk
//! bounds: a quadratic form that measures how fast the joint density of three
//! consecutive observations moves when the emission densities are perturbed
//! along zero-row-sum directions.
//!
//! The condition holds when the determinant of that form is nonzero. This
//! module evaluates the form for any number of states, assembles its matrix by
//! polarization, and, for two states, checks the closed-form expansion and a
//! positivity certificate: after an explicit factorization and a rational
//! change of variables, the determinant becomes a polynomial with (almost
//! all) nonnegative coefficients, and the few negative monomials are absorbed
//! by sums of squares.

use nalgebra::{DMatrix, DVector};

use crate::density::Density;
use crate::error::{Error, Result};
use crate::model::TransitionMatrix;
use crate::p5_data::P5_TERMS;
use crate::quad::Quadrature;

/// Gram matrix of the emission densities: `G[(i, j)] = <f_i, f_j>` in
/// `L2([0, 1])`. Validated symmetric positive semidefinite.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    g: DMatrix<f64>,
}

impl GramMatrix {
    /// Validates and wraps a Gram matrix. The matrix must be square,
    /// symmetric, and positive semidefinite up to a small tolerance.
    pub fn new(g: DMatrix<f64>) -> Result<Self> {
        if g.nrows() != g.ncols() || g.nrows() == 0 {
            return Err(Error::DomainViolation {
                what: format!("Gram matrix must be square and nonempty, got {}x{}", g.nrows(), g.ncols()),
            });
        }
        let scale = g.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
        for i in 0..g.nrows() {
            for j in 0..i {
                if (g[(i, j)] - g[(j, i)]).abs() > 1e-10 * scale {
                    return Err(Error::DomainViolation {
                        what: format!("Gram matrix not symmetric at ({i}, {j})"),
                    });
                }
            }
        }
        let sym = nalgebra::SymmetricEigen::new(g.clone());
        let min_eig = sym.eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
        if min_eig < -1e-8 * scale {
            return Err(Error::DomainViolation {
                what: format!("Gram matrix not positive semidefinite (min eigenvalue {min_eig:.3e})"),
            });
        }
        Ok(GramMatrix { g })
    }

    /// Gram matrix of a family of densities, computed by quadrature on the
    /// unit interval. Accurate for bounded densities.
    pub fn from_densities(densities: &[Density]) -> Result<Self> {
        let k = densities.len();
        let quad = Quadrature::unit();
        let mut g = DMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..=i {
                let v = quad.integrate(|y| densities[i].eval(y) * densities[j].eval(y));
                g[(i, j)] = v;
                g[(j, i)] = v;
            }
        }
        GramMatrix::new(g)
    }

    /// Gram matrix of densities given by their coefficient columns on an
    /// orthonormal basis: `G = A^T A`.
    pub fn from_coefficients(a: &DMatrix<f64>) -> Result<Self> {
        if a.ncols() == 0 {
            return Err(Error::DomainViolation {
                what: "coefficient matrix has no columns".into(),
            });
        }
        GramMatrix::new(a.transpose() * a)
    }

    /// Two-state Gram matrix from the norms of the two densities and the
    /// cosine of their angle: `[[n1^2, a n1 n2], [a n1 n2, n2^2]]`.
    pub fn from_norms(n1: f64, n2: f64, a: f64) -> Result<Self> {
        if !(n1 > 0.0 && n2 > 0.0 && a.abs() <= 1.0) {
            return Err(Error::DomainViolation {
                what: format!("need n1 > 0, n2 > 0, |a| <= 1, got ({n1}, {n2}, {a})"),
            });
        }
        let c = a * n1 * n2;
        GramMatrix::new(DMatrix::from_row_slice(2, 2, &[n1 * n1, c, c, n2 * n2]))
    }

    pub fn k(&self) -> usize {
        self.g.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.g
    }
}

/// A perturbation direction for the emission densities: a `K x K` matrix
/// whose rows sum to zero. Row `i` holds the coefficients of the perturbation
/// of state `i` on the emission densities, and the zero row sum keeps every
/// perturbed emission a density.
#[derive(Debug, Clone)]
pub struct ZeroRowSumMatrix {
    u: DMatrix<f64>,
}

impl ZeroRowSumMatrix {
    /// Validates that every row sums to zero (up to rounding).
    pub fn new(u: DMatrix<f64>) -> Result<Self> {
        if u.nrows() != u.ncols() || u.nrows() == 0 {
            return Err(Error::DomainViolation {
                what: format!("perturbation must be square and nonempty, got {}x{}", u.nrows(), u.ncols()),
            });
        }
        let scale = u.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
        for i in 0..u.nrows() {
            let s: f64 = u.row(i).iter().sum();
            if s.abs() > 1e-12 * scale * u.ncols() as f64 {
                return Err(Error::DomainViolation {
                    what: format!("row {i} sums to {s:.3e}, not zero"),
                });
            }
        }
        Ok(ZeroRowSumMatrix { u })
    }

    /// Builds a zero-row-sum matrix from its free part: a `K x (K-1)` block
    /// whose last column is completed as minus the row sum.
    pub fn from_free(free: &DMatrix<f64>) -> Result<Self> {
        let k = free.nrows();
        if k == 0 || free.ncols() + 1 != k {
            return Err(Error::DimensionMismatch {
                expected: k.saturating_sub(1),
                got: free.ncols(),
            });
        }
        let mut u = DMatrix::zeros(k, k);
        for i in 0..k {
            let mut s = 0.0;
            for j in 0..k - 1 {
                u[(i, j)] = free[(i, j)];
                s += free[(i, j)];
            }
            u[(i, k - 1)] = -s;
        }
        Ok(ZeroRowSumMatrix { u })
    }

    /// The polarization basis element `E_ij - E_i(K-1)` (zero everywhere
    /// except `+1` at `(i, j)` and `-1` at `(i, K-1)`), for `j < K - 1`.
    pub fn basis_element(k: usize, i: usize, j: usize) -> Result<Self> {
        if k < 2 || i >= k || j + 1 >= k {
            return Err(Error::DomainViolation {
                what: format!("invalid basis element ({i}, {j}) for k = {k}"),
            });
        }
        let mut u = DMatrix::zeros(k, k);
        u[(i, j)] = 1.0;
        u[(i, k - 1)] = -1.0;
        Ok(ZeroRowSumMatrix { u })
    }

    pub fn k(&self) -> usize {
        self.u.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.u
    }
}

/// Determinant of the quadratic form on the `K(K-1)`-dimensional space of
/// zero-row-sum perturbations.
#[derive(Debug, Clone, Copy)]
pub struct HDeterminant {
    /// Determinant of the polarized matrix as computed, including the
    /// stationary-distribution denominators.
    pub raw: f64,
    /// `raw` multiplied by the positive even power of the stationary
    /// normalizer that clears those denominators; same sign as `raw`, scaled
    /// to be polynomial in the transition probabilities.
    pub cleared: f64,
}

/// Core evaluation of the quadratic form. `pi` must be the stationary
/// distribution of `q`; `u` must have zero row sums.
fn d_value(q: &DMatrix<f64>, pi: &DVector<f64>, g: &DMatrix<f64>, u: &DMatrix<f64>) -> f64 {
    let k = q.nrows();
    let a = DMatrix::from_diagonal(pi);
    let qt_a = q.transpose() * &a;
    let a_q = &a * q;
    let ug = u * g;
    let ugut = &ug * u.transpose();
    let qgqt = q * g * q.transpose();
    let qt_aga_q = &qt_a * g * &a_q;
    let qt_a_ugut_a_q = &qt_a * &ugut * &a_q;
    let q_ugut_qt = q * &ugut * q.transpose();
    let qt_a_ug_a_q = &qt_a * &ug * &a_q;
    let q_ug_qt = q * &ug * q.transpose();
    let mut plain = 0.0;
    let mut doubled = 0.0;
    for i in 0..k {
        for j in 0..k {
            plain += qt_a_ugut_a_q[(i, j)] * g[(i, j)] * qgqt[(i, j)]
                + qt_aga_q[(i, j)] * ugut[(i, j)] * qgqt[(i, j)]
                + qt_aga_q[(i, j)] * g[(i, j)] * q_ugut_qt[(i, j)];
            // The middle factors of the mixed terms are transposed: index (j, i).
            doubled += qt_a_ug_a_q[(i, j)] * ug[(j, i)] * qgqt[(i, j)]
                + qt_a_ug_a_q[(i, j)] * q_ug_qt[(j, i)] * g[(i, j)]
                + ug[(i, j)] * q_ug_qt[(j, i)] * qt_aga_q[(i, j)];
        }
    }
    plain + 2.0 * doubled
}

/// Evaluates the quadratic form at one perturbation direction. The value is
/// the second-order coefficient of the squared joint-density distance when
/// the emissions move along `u`; it is homogeneous of degree two in `u`.
pub fn quadratic_form_d(q: &TransitionMatrix, gram: &GramMatrix, u: &ZeroRowSumMatrix) -> Result<f64> {
    let k = q.k();
    if gram.k() != k {
        return Err(Error::DimensionMismatch { expected: k, got: gram.k() });
    }
    if u.k() != k {
        return Err(Error::DimensionMismatch { expected: k, got: u.k() });
    }
    let pi = q.stationary()?;
    Ok(d_value(q.matrix(), pi.vector(), gram.matrix(), u.matrix()))
}

/// Assembles the matrix of the quadratic form on the polarization basis
/// `E_ij - E_i(K-1)` and returns its determinant. The detectability
/// condition asks for this determinant to be nonzero.
pub fn determinant_h(q: &TransitionMatrix, gram: &GramMatrix) -> Result<HDeterminant> {
    let k = q.k();
    if gram.k() != k {
        return Err(Error::DimensionMismatch { expected: k, got: gram.k() });
    }
    let dim = k * (k - 1);
    if dim == 0 {
        // One state admits no perturbation; the empty determinant is 1.
        return Ok(HDeterminant { raw: 1.0, cleared: 1.0 });
    }
    let pi = q.stationary()?;
    let (qm, pv, gm) = (q.matrix(), pi.vector(), gram.matrix());
    let mut elems = Vec::with_capacity(dim);
    for i in 0..k {
        for j in 0..k - 1 {
            elems.push(ZeroRowSumMatrix::basis_element(k, i, j)?.u);
        }
    }
    let singles: Vec<f64> = elems.iter().map(|e| d_value(qm, pv, gm, e)).collect();
    let mut big = DMatrix::zeros(dim, dim);
    for s in 0..dim {
        big[(s, s)] = singles[s];
        for t in 0..s {
            let sum = &elems[s] + &elems[t];
            let v = (d_value(qm, pv, gm, &sum) - singles[s] - singles[t]) / 2.0;
            big[(s, t)] = v;
            big[(t, s)] = v;
        }
    }
    let raw = big.determinant();
    // Each form entry carries two stationary weights, so the determinant has
    // denominator normalizer^(2 dim) where normalizer is the sum of the
    // principal minors of I - Q (the unnormalized stationary mass).
    let eye = DMatrix::identity(k, k);
    let i_minus_q = &eye - qm;
    let mut normalizer = 0.0;
    for i in 0..k {
        let minor = i_minus_q.clone().remove_row(i).remove_column(i);
        normalizer += minor.determinant();
    }
    let cleared = raw * normalizer.powi(2 * dim as i32);
    Ok(HDeterminant { raw, cleared })
}

/// Closed-form value of the quadratic form for two states at the direction
/// `U = [[alpha, -alpha], [beta, -beta]]`, given the off-diagonal transition
/// probabilities `p = Q(0, 1)`, `q = Q(1, 0)` and the emission Gram matrix.
pub fn explicit_k2_d(p: f64, q: f64, gram: &GramMatrix, alpha: f64, beta: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0) {
        return Err(Error::DomainViolation {
            what: format!("transition probabilities must lie in (0, 1), got p = {p}, q = {q}"),
        });
    }
    if gram.k() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: gram.k() });
    }
    let gm = gram.matrix();
    let (g11, g12, g22) = (gm[(0, 0)], gm[(0, 1)], gm[(1, 1)]);
    // Recurring inner products: d = f1 - f2, m = (1-p) f1 + p f2 (the row-0
    // mixture), w = q f1 + (1-q) f2 (the row-1 mixture).
    let dd = g11 - 2.0 * g12 + g22;
    let mm = (1.0 - p) * (1.0 - p) * g11 + 2.0 * p * (1.0 - p) * g12 + p * p * g22;
    let ww = q * q * g11 + 2.0 * q * (1.0 - q) * g12 + (1.0 - q) * (1.0 - q) * g22;
    let mw = (1.0 - p) * q * g11 + (p * q + (1.0 - p) * (1.0 - q)) * g12 + p * (1.0 - q) * g22;
    let d1 = g11 - g12;
    let d2 = g12 - g22;
    let md = (1.0 - p) * d1 + p * d2;
    let wd = q * d1 + (1.0 - q) * d2;

    let b11 = 2.0 * (1.0 - p) * (1.0 - p) * dd * g11 * mm
        + mm * mm * dd
        + 4.0 * p * (1.0 - p) * mw * g12 * dd
        + 2.0 * p * p * dd * g22 * ww
        + 2.0 * (1.0 - p) * (1.0 - p) * md * md * g11
        + 2.0 * p * p * wd * wd * g22
        + 4.0 * p * (1.0 - p) * wd * md * g12
        + 4.0 * (1.0 - p) * md * d1 * mm
        + 4.0 * p * md * d2 * mw;

    let b22 = 2.0 * q * q * dd * g11 * mm
        + ww * ww * dd
        + 4.0 * (1.0 - q) * q * mw * g12 * dd
        + 2.0 * (1.0 - q) * (1.0 - q) * dd * g22 * ww
        + 2.0 * q * q * md * md * g11
        + 2.0 * (1.0 - q) * (1.0 - q) * wd * wd * g22
        + 4.0 * q * (1.0 - q) * wd * md * g12
        + 4.0 * q * wd * d1 * mw
        + 4.0 * (1.0 - q) * wd * d2 * ww;

    // The `md * d1 * mm` coefficient is 2q: pinned by the exact agreement
    // with the general form over random instances (see the cross-check test).
    let b12 = 2.0 * (1.0 - p) * q * dd * g11 * mm
        + 2.0 * (p * q + (1.0 - p) * (1.0 - q)) * mw * g12 * dd
        + mw * mw * dd
        + 2.0 * p * (1.0 - q) * dd * g22 * ww
        + 2.0 * q * (1.0 - p) * md * md * g11
        + 2.0 * p * (1.0 - q) * wd * wd * g22
        + 2.0 * p * q * wd * md * g12
        + 2.0 * (1.0 - p) * (1.0 - q) * wd * md * g12
        + 2.0 * q * md * d1 * mm
        + 2.0 * (1.0 - p) * wd * d1 * mw
        + 2.0 * (1.0 - q) * md * d2 * mw
        + 2.0 * p * wd * d2 * ww;

    let s = (p + q) * (p + q);
    let d11 = q * q * b11 / s;
    let d22 = p * p * b22 / s;
    let d12 = p * q * b12 / s;
    Ok(d11 * alpha * alpha + 2.0 * d12 * alpha * beta + d22 * beta * beta)
}

/// Evaluates the two-state positivity certificate polynomial. It depends on
/// its arguments only through their squares; the coefficient table is pinned
/// by checksum tests.
pub fn evaluate_p5(x: f64, y: f64, z: f64, t: f64) -> f64 {
    fn powers<const N: usize>(v: f64) -> [f64; N] {
        let mut p = [1.0; N];
        for i in 1..N {
            p[i] = p[i - 1] * v;
        }
        p
    }
    let px = powers::<9>(x * x);
    let py = powers::<5>(y * y);
    let pz = powers::<5>(z * z);
    let pt = powers::<5>(t * t);
    let mut acc = 0.0;
    for &(i, j, k, l, c) in P5_TERMS {
        acc += c as f64 * px[i as usize] * py[j as usize] * pz[k as usize] * pt[l as usize];
    }
    acc
}

/// Checks the two-state factorization chain at one parameter point.
///
/// The two-state model is parameterized by the emission norms `n1 >= n2`
/// (with `n1 >= 1`), the cosine `a` of the angle between the emissions, the
/// transition probability `p = Q(0, 1)`, and the detuning `d = q - (1 - p)`
/// so that `q = 1 - p + d`. Returns `(lhs, rhs)` where `lhs` is the raw
/// determinant of the quadratic form and `rhs` is its factorized expression
///
/// `p^2 (1-a^2) d^2 n1^2 n2^2 q^2 / (1+d)^4 * n1^8 * P5(x,y,z,t) / ((1+t^2)^4 (1+y^2)^4 (1+z^2)^4 (1+x^2)^8)`
///
/// under the rational substitutions `b = n2/n1 = 1/(1+x^2)`, `a = y^2/(1+y^2)`,
/// `p = z^2/(1+z^2)`, `d = ((tz)^2 - 1) / ((1+t^2)(1+z^2))`. Both sides agree
/// up to rounding; the right side is manifestly nonnegative once the few
/// negative monomials of the certificate polynomial are absorbed by its
/// sum-of-squares rewrites, which is the detectability proof for two states.
pub fn chain_check_k2(n1: f64, n2: f64, a: f64, p: f64, d: f64) -> Result<(f64, f64)> {
    if !(n1 >= 1.0) {
        return Err(Error::DomainViolation { what: format!("need n1 >= 1, got {n1}") });
    }
    if !(n2 > 0.0 && n2 <= n1) {
        return Err(Error::DomainViolation { what: format!("need 0 < n2 <= n1, got n2 = {n2}") });
    }
    if !(0.0..1.0).contains(&a) {
        return Err(Error::DomainViolation { what: format!("need a in [0, 1), got {a}") });
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::DomainViolation { what: format!("need p in (0, 1), got {p}") });
    }
    if d == 0.0 || d <= p - 1.0 || d >= p {
        return Err(Error::DomainViolation {
            what: format!("need d in (p-1, 0) union (0, p), got d = {d} for p = {p}"),
        });
    }
    let q = 1.0 - p + d;
    let gram = GramMatrix::from_norms(n1, n2, a)?;
    let trans = TransitionMatrix::from_rows(&[vec![1.0 - p, p], vec![q, 1.0 - q]])?;
    let lhs = determinant_h(&trans, &gram)?.raw;

    let b = n2 / n1;
    let x2 = (1.0 - b) / b;
    let y2 = a / (1.0 - a);
    let z2 = p / (1.0 - p);
    let t2_num = 1.0 + d * (1.0 + z2);
    let t2_den = z2 - d * (1.0 + z2);
    if t2_num <= 0.0 || t2_den <= 0.0 {
        return Err(Error::DomainViolation {
            what: format!("substitution for t^2 not solvable at p = {p}, d = {d}"),
        });
    }
    let t2 = t2_num / t2_den;
    let p5 = evaluate_p5(x2.sqrt(), y2.sqrt(), z2.sqrt(), t2.sqrt());
    let denom = (1.0 + t2).powi(4) * (1.0 + y2).powi(4) * (1.0 + z2).powi(4) * (1.0 + x2).powi(8);
    let front = p * p * (1.0 - a * a) * d * d * n1 * n1 * n2 * n2 * q * q / (1.0 + d).powi(4);
    let rhs = front * n1.powi(8) * p5 / denom;
    Ok((lhs, rhs))
}
