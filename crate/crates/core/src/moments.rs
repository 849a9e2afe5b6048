//! Empirical moments of observation triples in a fixed basis, and their
//! exact population counterparts.
//!
//! The estimators consume exactly four statistics of the data:
//!
//! * L(a)       = mean of φ_a(Y₁),
//! * Nmat(a,b)  = mean of φ_a(Y₁)φ_b(Y₂),
//! * P(a,c)     = mean of φ_a(Y₁)φ_c(Y₃),
//! * Mtens(a,b,c) = mean of φ_a(Y₁)φ_b(Y₂)φ_c(Y₃).

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use nalgebra::{DMatrix, DVector};

use crate::basis::{BasisFamily, BasisKind};
use crate::error::{Error, Result};
use crate::model::JointModel;

/// Dense M×M×M tensor, row-major in (a,b,c).
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor3 {
    m: usize,
    data: Vec<f64>,
}

impl Tensor3 {
    pub fn zeros(m: usize) -> Self {
        Tensor3 {
            m,
            data: vec![0.0; m * m * m],
        }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    #[inline]
    fn idx(&self, a: usize, b: usize, c: usize) -> usize {
        (a * self.m + b) * self.m + c
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> f64 {
        self.data[self.idx(a, b, c)]
    }

    #[inline]
    pub fn add(&mut self, a: usize, b: usize, c: usize, v: f64) {
        let i = self.idx(a, b, c);
        self.data[i] += v;
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, v: f64) {
        let i = self.idx(a, b, c);
        self.data[i] = v;
    }

    pub fn scale(&mut self, s: f64) {
        for v in &mut self.data {
            *v *= s;
        }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// The middle-index slice X(i,j) = T(i, b, j), as a matrix.
    pub fn mid_slice(&self, b: usize) -> DMatrix<f64> {
        DMatrix::from_fn(self.m, self.m, |i, j| self.get(i, b, j))
    }

    /// Contracts every mode with the columns of `a` (M×K), producing the
    /// K×K×K tensor T'(k₁,k₂,k₃) = Σ_{abc} T(a,b,c) A(a,k₁) A(b,k₂) A(c,k₃).
    pub fn contract_all_modes(&self, a: &DMatrix<f64>) -> Tensor3 {
        assert_eq!(a.nrows(), self.m);
        let m = self.m;
        let k = a.ncols();
        // Mode 3 first: (a,b,k3), then mode 2, then mode 1.
        let mut t3 = vec![0.0; m * m * k];
        for ia in 0..m {
            for ib in 0..m {
                let base = (ia * m + ib) * m;
                for kc in 0..k {
                    let mut acc = 0.0;
                    for ic in 0..m {
                        acc += self.data[base + ic] * a[(ic, kc)];
                    }
                    t3[(ia * m + ib) * k + kc] = acc;
                }
            }
        }
        let mut t2 = vec![0.0; m * k * k];
        for ia in 0..m {
            for kb in 0..k {
                for kc in 0..k {
                    let mut acc = 0.0;
                    for ib in 0..m {
                        acc += t3[(ia * m + ib) * k + kc] * a[(ib, kb)];
                    }
                    t2[(ia * k + kb) * k + kc] = acc;
                }
            }
        }
        let mut out = Tensor3::zeros(k);
        for ka in 0..k {
            for kb in 0..k {
                for kc in 0..k {
                    let mut acc = 0.0;
                    for ia in 0..m {
                        acc += t2[(ia * k + kb) * k + kc] * a[(ia, ka)];
                    }
                    out.set(ka, kb, kc, acc);
                }
            }
        }
        out
    }
}

/// First three moments of the observation triples in a basis of size M.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentSet {
    pub m: usize,
    pub n_samples: u64,
    pub l: DVector<f64>,
    pub nmat: DMatrix<f64>,
    pub p: DMatrix<f64>,
    pub mtens: Tensor3,
}

/// Raw (unscaled) sums over a subset of the samples.
struct Accumulator {
    count: u64,
    l: DVector<f64>,
    nmat: DMatrix<f64>,
    p: DMatrix<f64>,
    mtens: Tensor3,
}

impl Accumulator {
    fn zeros(m: usize) -> Self {
        Accumulator {
            count: 0,
            l: DVector::zeros(m),
            nmat: DMatrix::zeros(m, m),
            p: DMatrix::zeros(m, m),
            mtens: Tensor3::zeros(m),
        }
    }

    fn add_dense(&mut self, basis: &BasisFamily, y: &[f64; 3], bufs: &mut [Vec<f64>; 3]) {
        let m = basis.size();
        for i in 0..3 {
            basis.eval_all(y[i], &mut bufs[i]);
        }
        let (p1, p2, p3) = (&bufs[0], &bufs[1], &bufs[2]);
        for a in 0..m {
            self.l[a] += p1[a];
        }
        for a in 0..m {
            let v1 = p1[a];
            if v1 == 0.0 {
                continue;
            }
            for b in 0..m {
                self.nmat[(a, b)] += v1 * p2[b];
                self.p[(a, b)] += v1 * p3[b];
            }
            for b in 0..m {
                let v12 = v1 * p2[b];
                if v12 == 0.0 {
                    continue;
                }
                for c in 0..m {
                    self.mtens.add(a, b, c, v12 * p3[c]);
                }
            }
        }
        self.count += 1;
    }

    /// Histogram shortcut: one active basis function per coordinate.
    fn add_sparse(&mut self, basis: &BasisFamily, y: &[f64; 3]) {
        let m = basis.size() as f64;
        let s = m.sqrt();
        let (b1, b2, b3) = (basis.bin(y[0]), basis.bin(y[1]), basis.bin(y[2]));
        self.l[b1] += s;
        self.nmat[(b1, b2)] += m;
        self.p[(b1, b3)] += m;
        self.mtens.add(b1, b2, b3, m * s);
        self.count += 1;
    }

    fn merge(mut self, other: Accumulator) -> Accumulator {
        self.count += other.count;
        self.l += other.l;
        self.nmat += other.nmat;
        self.p += other.p;
        for (a, b) in self.mtens.data.iter_mut().zip(&other.mtens.data) {
            *a += b;
        }
        self
    }
}

const CHUNK: usize = 4096;

/// Accumulates a chunk range serially, or splits it in half and merges; the
/// reduction tree is a function of the chunk count alone, so the result is
/// bit-identical for any thread count.
fn reduce(samples: &[[f64; 3]], basis: &BasisFamily, n_chunks: usize, lo: usize) -> Accumulator {
    if n_chunks <= 1 {
        let mut acc = Accumulator::zeros(basis.size());
        let start = lo * CHUNK;
        let end = (start + CHUNK).min(samples.len());
        match basis.kind() {
            BasisKind::Histogram => {
                for y in &samples[start..end] {
                    acc.add_sparse(basis, y);
                }
            }
            BasisKind::Trig => {
                let m = basis.size();
                let mut bufs = [vec![0.0; m], vec![0.0; m], vec![0.0; m]];
                for y in &samples[start..end] {
                    acc.add_dense(basis, y, &mut bufs);
                }
            }
        }
        acc
    } else {
        let half = n_chunks / 2;
        let (left, right) = rayon::join(
            || reduce(samples, basis, half, lo),
            || reduce(samples, basis, n_chunks - half, lo + half),
        );
        left.merge(right)
    }
}

/// Exact sample averages of the Step-1 statistics.
///
/// Cost O(N·M³) in general; O(N + M³) for histograms, where each sample
/// touches a single basis function per coordinate.
pub fn empirical_moments(samples: &[[f64; 3]], basis: &BasisFamily) -> Result<MomentSet> {
    if samples.is_empty() {
        return Err(Error::DomainViolation {
            what: "empty sample list".into(),
        });
    }
    let n_chunks = samples.len().div_ceil(CHUNK);
    let mut acc = reduce(samples, basis, n_chunks, 0);
    let scale = 1.0 / samples.len() as f64;
    acc.l.scale_mut(scale);
    acc.nmat.scale_mut(scale);
    acc.p.scale_mut(scale);
    acc.mtens.scale(scale);
    Ok(MomentSet {
        m: basis.size(),
        n_samples: acc.count,
        l: acc.l,
        nmat: acc.nmat,
        p: acc.p,
        mtens: acc.mtens,
    })
}

/// The exact moments of the law of `model`: the noiseless limit of
/// [`empirical_moments`]. `n_samples` is 0 by convention.
pub fn population_moments(model: &JointModel) -> MomentSet {
    let a = &model.a;
    let q = model.q.matrix();
    let pi = model.pi.vector();
    let m = model.m();
    let k = model.k();

    let dpi = DMatrix::from_diagonal(pi);
    let l = a * pi;
    let nmat = a * &dpi * q * a.transpose();
    let p = a * &dpi * q * q * a.transpose();

    // Mtens = Σ_{k₂} u_{k₂} ⊗ A(·,k₂) ⊗ v_{k₂} with
    // u_{k₂} = Σ_{k₁} π(k₁)Q(k₁,k₂)A(·,k₁), v_{k₂} = Σ_{k₃} Q(k₂,k₃)A(·,k₃).
    let mut mtens = Tensor3::zeros(m);
    for k2 in 0..k {
        let mut u = DVector::zeros(m);
        let mut v = DVector::zeros(m);
        for k1 in 0..k {
            u.axpy(pi[k1] * q[(k1, k2)], &a.column(k1).clone_owned(), 1.0);
        }
        for k3 in 0..k {
            v.axpy(q[(k2, k3)], &a.column(k3).clone_owned(), 1.0);
        }
        let mid = a.column(k2);
        for ia in 0..m {
            if u[ia] == 0.0 {
                continue;
            }
            for ib in 0..m {
                let uv = u[ia] * mid[ib];
                if uv == 0.0 {
                    continue;
                }
                for ic in 0..m {
                    mtens.add(ia, ib, ic, uv * v[ic]);
                }
            }
        }
    }
    MomentSet {
        m,
        n_samples: 0,
        l,
        nmat,
        p,
        mtens,
    }
}

const CACHE_MAGIC: &[u8; 8] = b"NPHMM-M1";

impl MomentSet {
    /// Binary cache format: magic "NPHMM-M1", then M and the sample count as
    /// little-endian u64, then L, Nmat, P, Mtens as little-endian f64 in
    /// row-major order.
    pub fn write_to(&self, path: &Path) -> Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        w.write_all(CACHE_MAGIC)?;
        w.write_all(&(self.m as u64).to_le_bytes())?;
        w.write_all(&self.n_samples.to_le_bytes())?;
        let mut put = |v: f64| w.write_all(&v.to_le_bytes());
        for a in 0..self.m {
            put(self.l[a])?;
        }
        for a in 0..self.m {
            for b in 0..self.m {
                put(self.nmat[(a, b)])?;
            }
        }
        for a in 0..self.m {
            for b in 0..self.m {
                put(self.p[(a, b)])?;
            }
        }
        w.write_all(
            &self
                .mtens
                .as_slice()
                .iter()
                .flat_map(|v| v.to_le_bytes())
                .collect::<Vec<u8>>(),
        )?;
        w.flush()?;
        Ok(())
    }

    pub fn read_from(path: &Path) -> Result<MomentSet> {
        let mut r = BufReader::new(File::open(path)?);
        let mut magic = [0u8; 8];
        r.read_exact(&mut magic)?;
        if &magic != CACHE_MAGIC {
            return Err(Error::BadFormat {
                what: format!("bad moment cache magic {magic:?}"),
            });
        }
        let mut u = [0u8; 8];
        r.read_exact(&mut u)?;
        let m = u64::from_le_bytes(u) as usize;
        r.read_exact(&mut u)?;
        let n_samples = u64::from_le_bytes(u);
        if m == 0 || m > 4096 {
            return Err(Error::BadFormat {
                what: format!("implausible moment dimension {m}"),
            });
        }
        let mut take = |count: usize| -> Result<Vec<f64>> {
            let mut buf = vec![0u8; count * 8];
            r.read_exact(&mut buf)?;
            Ok(buf
                .chunks_exact(8)
                .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
                .collect())
        };
        let l = DVector::from_vec(take(m)?);
        let nmat = DMatrix::from_row_slice(m, m, &take(m * m)?);
        let p = DMatrix::from_row_slice(m, m, &take(m * m)?);
        let mtens = Tensor3 {
            m,
            data: take(m * m * m)?,
        };
        Ok(MomentSet {
            m,
            n_samples,
            l,
            nmat,
            p,
            mtens,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_histogram_sample() {
        let basis = BasisFamily::histogram(2).unwrap();
        // Coordinates in bins (1,2,1), 0-based (0,1,0).
        let samples = [[0.1, 0.9, 0.4]];
        let mom = empirical_moments(&samples, &basis).unwrap();
        let s = 2f64.sqrt();
        assert_eq!(mom.l[0], s);
        assert_eq!(mom.l[1], 0.0);
        assert_eq!(mom.mtens.get(0, 1, 0), 2.0 * s);
        let total: f64 = mom.mtens.as_slice().iter().map(|v| v.abs()).sum();
        assert_eq!(total, 2.0 * s);
    }

    #[test]
    fn trig_constant_basis() {
        let basis = BasisFamily::trig(1).unwrap();
        let samples = [[0.3, 0.8, 0.1], [0.5, 0.5, 0.5]];
        let mom = empirical_moments(&samples, &basis).unwrap();
        assert_eq!(mom.l[0], 1.0);
        assert_eq!(mom.nmat[(0, 0)], 1.0);
        assert_eq!(mom.p[(0, 0)], 1.0);
        assert_eq!(mom.mtens.get(0, 0, 0), 1.0);
    }

    #[test]
    fn tensor_contraction_matches_brute_force() {
        let m = 4;
        let k = 2;
        let mut t = Tensor3::zeros(m);
        for (i, v) in t.data.iter_mut().enumerate() {
            *v = (i as f64 * 0.37).sin();
        }
        let a = DMatrix::from_fn(m, k, |i, j| ((i * k + j) as f64 * 0.61).cos());
        let got = t.contract_all_modes(&a);
        for ka in 0..k {
            for kb in 0..k {
                for kc in 0..k {
                    let mut want = 0.0;
                    for ia in 0..m {
                        for ib in 0..m {
                            for ic in 0..m {
                                want += t.get(ia, ib, ic) * a[(ia, ka)] * a[(ib, kb)] * a[(ic, kc)];
                            }
                        }
                    }
                    assert!((got.get(ka, kb, kc) - want).abs() < 1e-12);
                }
            }
        }
    }
}
