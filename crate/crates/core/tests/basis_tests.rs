//! Quadrature-backed properties of the two basis families.

mod common;

use nphmm_core::basis::inner_product;
use nphmm_core::quad::Quadrature;
use nphmm_core::{BasisFamily, BasisKind, Density};
use rand::Rng;

/// Bin-aligned rule for a histogram family, plain composite rule otherwise.
fn aligned_quadrature(basis: &BasisFamily) -> Quadrature {
    match basis.kind() {
        BasisKind::Histogram => Quadrature::composite(0.0, 1.0, 32, basis.size() * 8),
        BasisKind::Trig => Quadrature::composite(0.0, 1.0, 32, 64),
    }
}

#[test]
fn families_are_orthonormal_up_to_large_sizes() {
    for basis in [
        BasisFamily::histogram(32).unwrap(),
        BasisFamily::trig(31).unwrap(),
    ] {
        let m = basis.size();
        let quad = aligned_quadrature(&basis);
        let mut buf = vec![0.0; m];
        for a in 0..m {
            for b in a..m {
                let got = quad.integrate(|y| {
                    basis.eval_all(y, &mut buf);
                    buf[a] * buf[b]
                });
                let want = if a == b { 1.0 } else { 0.0 };
                assert!(
                    (got - want).abs() <= 1e-8,
                    "{:?} <phi_{a}, phi_{b}> = {got}",
                    basis.kind()
                );
            }
        }
    }
}

#[test]
fn coefficient_inner_product_matches_quadrature() {
    let mut rng = common::test_rng(11);
    for basis in [
        BasisFamily::histogram(8).unwrap(),
        BasisFamily::trig(9).unwrap(),
    ] {
        let m = basis.size();
        let a1: Vec<f64> = (0..m).map(|_| rng.random::<f64>() - 0.5).collect();
        let a2: Vec<f64> = (0..m).map(|_| rng.random::<f64>() - 0.5).collect();
        let quad = aligned_quadrature(&basis);
        let mut buf = vec![0.0; m];
        let by_quad = quad.integrate(|y| {
            basis.eval_all(y, &mut buf);
            let f1: f64 = a1.iter().zip(&buf).map(|(c, p)| c * p).sum();
            let f2: f64 = a2.iter().zip(&buf).map(|(c, p)| c * p).sum();
            f1 * f2
        });
        let direct = inner_product(
            &nalgebra::DVector::from_vec(a1.clone()),
            &nalgebra::DVector::from_vec(a2.clone()),
        )
        .unwrap();
        assert!((by_quad - direct).abs() <= 1e-8);
    }
}

#[test]
fn projection_never_exceeds_the_true_norm() {
    // Bessel: the truncated expansion has no more energy than the density.
    let densities = [
        Density::Beta { alpha: 2.0, beta: 5.0 },
        Density::Beta { alpha: 4.0, beta: 2.0 },
        Density::Beta { alpha: 6.0, beta: 6.0 },
    ];
    for kind in [BasisKind::Histogram, BasisKind::Trig] {
        for m in [3, 7, 15] {
            let basis = BasisFamily::new(kind, m).unwrap();
            for f in &densities {
                let coeffs = basis.project(f);
                let f_norm_sq = Quadrature::unit().integrate(|y| f.eval(y).powi(2));
                assert!(coeffs.norm_squared() <= f_norm_sq + 1e-8);
            }
        }
    }
}

#[test]
fn trig_projections_are_nested() {
    let f = Density::Beta { alpha: 2.0, beta: 5.0 };
    let small = BasisFamily::trig(5).unwrap().project(&f);
    let large = BasisFamily::trig(9).unwrap().project(&f);
    for m in 0..5 {
        assert!((small[m] - large[m]).abs()
            <= 1e-10, "coefficient {m} changed between sizes");
    }
}

#[test]
fn histogram_projection_is_the_scaled_bin_average() {
    let f = Density::Beta { alpha: 4.0, beta: 2.0 };
    let m = 6;
    let basis = BasisFamily::histogram(m).unwrap();
    let coeffs = basis.project(&f);
    let root_m = (m as f64).sqrt();
    for bin in 0..m {
        let lo = bin as f64 / m as f64;
        let hi = (bin + 1) as f64 / m as f64;
        let mass = Quadrature::composite(lo, hi, 32, 8).integrate(|y| f.eval(y));
        // <f, sqrt(M) 1_bin> = sqrt(M) * bin mass.
        assert!((coeffs[bin] - root_m * mass).abs() <= 1e-9);
    }
}

#[test]
fn histogram_eta3_matches_the_brute_force_supremum() {
    // sup over bin-triple pairs of the squared product differences; attained
    // by disjoint triples, value 2 M^3, so the supremum itself is sqrt(2) M^{3/2}.
    let m = 4;
    let basis = BasisFamily::histogram(m).unwrap();
    let mut sup: f64 = 0.0;
    let centers: Vec<f64> = (0..m).map(|b| (b as f64 + 0.5) / m as f64).collect();
    let mut buf = vec![0.0; m];
    let values: Vec<Vec<f64>> = centers
        .iter()
        .map(|&y| {
            basis.eval_all(y, &mut buf);
            buf.clone()
        })
        .collect();
    let triples: Vec<[usize; 3]> = (0..m * m * m)
        .map(|i| [i % m, (i / m) % m, i / (m * m)])
        .collect();
    for t in &triples {
        for s in &triples {
            let mut total = 0.0;
            for a in 0..m {
                for b in 0..m {
                    for c in 0..m {
                        let p = values[t[0]][a] * values[t[1]][b] * values[t[2]][c];
                        let q = values[s[0]][a] * values[s[1]][b] * values[s[2]][c];
                        total += (p - q).powi(2);
                    }
                }
            }
            sup = sup.max(total);
        }
    }
    assert!((sup.sqrt() - basis.eta3()).abs() <= 1e-10);
    assert!((basis.eta3() - 2.0_f64.sqrt() * 8.0).abs() <= 1e-10);
}

#[test]
fn trig_eta3_grows_no_faster_than_the_three_halves_power() {
    // Each trig function is bounded by sqrt(2), which caps the supremum at
    // sqrt(2) (2M)^{3/2} = 4 M^{3/2}.
    for m in [3usize, 5, 9, 15] {
        let basis = BasisFamily::trig(m).unwrap();
        let eta = basis.eta3();
        assert!(eta > 0.0);
        assert!(eta <= 4.0 * (m as f64).powf(1.5));
    }
}
