//! The subcommand implementations.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use nphmm_core::contrast::minimize_gamma;
use nphmm_core::evaluate::{quartiles, run_pipeline, run_replicates};
use nphmm_core::hd::{chain_check_k2, determinant_h, quadratic_form_d};
use nphmm_core::moments::empirical_moments;
use nphmm_core::rng::{stream_rng, streams};
use nphmm_core::sample::sample_chain;
use nphmm_core::selection::{
    calibrate_dimension_jump, calibrate_slope_fit, default_rho_grid, default_slope_window,
    select_m,
};
use nphmm_core::spectral::spectral_estimate;
use nphmm_core::{
    BasisFamily, CalibrationMethod, ContrastContext, Density, GramMatrix, HmmSpec, MomentSet,
    OptimizerConfig, PipelineConfig, PipelineReport, TransitionMatrix, ZeroRowSumMatrix,
};

use crate::artifacts;
use crate::config::{self, Resolved, RunArgs};
use crate::CliError;

fn core(e: nphmm_core::Error) -> CliError {
    CliError::Core(e)
}

pub fn simulate(args: &RunArgs) -> Result<(), CliError> {
    let cfg = config::resolve(args)?;
    let samples = sample_chain(&cfg.model, cfg.n, cfg.scenario, cfg.seed).map_err(core)?;
    let path = cfg.out_dir.join("samples.csv");
    artifacts::write_atomic(&path, artifacts::samples_csv(&samples).as_bytes())?;
    println!("wrote {} ({} rows)", path.display(), samples.len());
    Ok(())
}

/// Samples, then loads the moment statistics from the cache keyed by
/// (data hash, basis, size), or accumulates and stores them.
fn obtain_moments(cfg: &Resolved) -> Result<(MomentSet, PathBuf, bool), CliError> {
    let samples = sample_chain(&cfg.model, cfg.n, cfg.scenario, cfg.seed).map_err(core)?;
    let basis = BasisFamily::new(cfg.basis, cfg.m).map_err(core)?;
    let key = artifacts::moment_cache_key(&samples, cfg.basis, cfg.m);
    let path = cfg.out_dir.join(format!("moments-{key:016x}.bin"));
    if path.exists() {
        if let Ok(mom) = MomentSet::read_from(&path) {
            if mom.m == cfg.m && mom.n_samples == samples.len() as u64 {
                return Ok((mom, path, true));
            }
        }
        // A key collision or a corrupt file; fall through and rebuild.
    }
    let mom = empirical_moments(&samples, &basis).map_err(core)?;
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| core(e.into()))?;
    }
    let tmp = path.with_extension("bin.tmp");
    mom.write_to(&tmp).map_err(core)?;
    fs::rename(&tmp, &path).map_err(|e| core(e.into()))?;
    Ok((mom, path, false))
}

pub fn moments(args: &RunArgs) -> Result<(), CliError> {
    let cfg = config::resolve(args)?;
    let (mom, path, hit) = obtain_moments(&cfg)?;
    println!(
        "{} {} (M = {}, N = {})",
        if hit { "cache hit" } else { "wrote" },
        path.display(),
        mom.m,
        mom.n_samples
    );
    Ok(())
}

#[derive(Serialize)]
struct SpectralArtifact<'a> {
    config: &'a Resolved,
    estimate: &'a nphmm_core::SpectralEstimate,
}

pub fn spectral(args: &RunArgs) -> Result<(), CliError> {
    let cfg = config::resolve(args)?;
    let (mom, _, _) = obtain_moments(&cfg)?;
    let est = spectral_estimate(&mom, cfg.model.k(), cfg.seed).map_err(core)?;
    let body = serde_json::to_string_pretty(&SpectralArtifact {
        config: &cfg,
        estimate: &est,
    })
    .map_err(|e| core(e.into()))?;
    let path = cfg.out_dir.join("spectral.json");
    artifacts::write_atomic(&path, body.as_bytes())?;
    println!(
        "wrote {} (rotation redraws: {})",
        path.display(),
        est.diagnostics.theta_redraws
    );
    Ok(())
}

#[derive(Serialize)]
struct FitArtifact<'a> {
    config: &'a Resolved,
    report: &'a PipelineReport,
}

fn write_fit_artifacts(
    cfg: &Resolved,
    report: &PipelineReport,
    json_name: &str,
    csv_name: &str,
) -> Result<(PathBuf, PathBuf), CliError> {
    let body = serde_json::to_string_pretty(&FitArtifact {
        config: cfg,
        report,
    })
    .map_err(|e| core(e.into()))?;
    let json_path = cfg.out_dir.join(json_name);
    artifacts::write_atomic(&json_path, body.as_bytes())?;
    let csv_path = cfg.out_dir.join(csv_name);
    artifacts::write_atomic(&csv_path, artifacts::curves_csv(report).as_bytes())?;
    Ok((json_path, csv_path))
}

pub fn fit(args: &RunArgs, replicates: usize) -> Result<(), CliError> {
    if replicates == 0 {
        return Err(CliError::Usage("need at least one replicate".into()));
    }
    let cfg = config::resolve(args)?;
    let mut pcfg = PipelineConfig::new(cfg.n, cfg.scenario, cfg.basis, cfg.m_max, cfg.seed);
    pcfg.calibration = cfg.calibration;
    pcfg.rho_override = cfg.rho_override;
    pcfg.optimizer_budget = cfg.optimizer_budget;

    if replicates == 1 {
        let report = run_pipeline(&cfg.model, &pcfg).map_err(core)?;
        let (json_path, csv_path) = write_fit_artifacts(&cfg, &report, "report.json", "curves.csv")?;
        println!(
            "selected M = {} (rho = {:.4}); wrote {} and {}",
            report.m_hat,
            report.rho_used,
            json_path.display(),
            csv_path.display()
        );
        return Ok(());
    }

    let reports = run_replicates(&cfg.model, &pcfg, replicates).map_err(core)?;
    for (i, report) in reports.iter().enumerate() {
        write_fit_artifacts(&cfg, report, &format!("report-{i}.json"), &format!("curves-{i}.csv"))?;
    }
    let table_path = cfg.out_dir.join("replicates.csv");
    artifacts::write_atomic(&table_path, artifacts::replicates_csv(&reports).as_bytes())?;
    let risks: Vec<f64> = reports
        .iter()
        .map(|r| {
            r.records
                .iter()
                .find(|row| row.m == r.m_hat)
                .map(|row| row.risk_total)
                .unwrap_or(f64::NAN)
        })
        .collect();
    let (q1, med, q3) = quartiles(&risks);
    println!(
        "{} replicates; risk quartiles {:.4} / {:.4} / {:.4}; wrote {}",
        replicates,
        q1,
        med,
        q3,
        table_path.display()
    );
    Ok(())
}

#[derive(Deserialize)]
struct ReportOnly {
    report: PipelineReport,
}

pub fn select(
    report_path: &Path,
    rho: Option<f64>,
    calibration: Option<String>,
) -> Result<(), CliError> {
    if rho.is_some() && calibration.is_some() {
        return Err(CliError::Usage(
            "give either a fixed penalty (--rho) or a calibration method, not both".into(),
        ));
    }
    let text = fs::read_to_string(report_path).map_err(|e| {
        CliError::Usage(format!("cannot read report '{}': {e}", report_path.display()))
    })?;
    let file: ReportOnly = serde_json::from_str(&text).map_err(|e| {
        CliError::Usage(format!("malformed report '{}': {e}", report_path.display()))
    })?;
    let trace = &file.report.trace;
    match rho {
        Some(r) => {
            let m = select_m(trace, r);
            println!("selected M = {m} (rho = {r:.4}, fixed)");
        }
        None => {
            let method = match &calibration {
                Some(s) => config::parse_calibration(s)?,
                None => CalibrationMethod::DimensionJump,
            };
            let result = match method {
                CalibrationMethod::DimensionJump => {
                    calibrate_dimension_jump(trace, &default_rho_grid())
                }
                CalibrationMethod::SlopeFit => {
                    calibrate_slope_fit(trace, default_slope_window(trace))
                }
            }
            .map_err(core)?;
            println!(
                "selected M = {} (rho = {:.4}, {:?})",
                result.m_hat, result.rho_hat, result.method
            );
        }
    }
    Ok(())
}

/// Product of the quadratic form over the polarization basis directions: the
/// Hadamard bound of the determinant, used as its natural magnitude.
fn determinant_scale(q: &TransitionMatrix, gram: &GramMatrix) -> Result<f64, CliError> {
    let k = q.k();
    let mut prod: f64 = 1.0;
    for i in 0..k {
        for j in 0..k.saturating_sub(1) {
            let e = ZeroRowSumMatrix::basis_element(k, i, j).map_err(core)?;
            prod *= quadratic_form_d(q, gram, &e).map_err(core)?.abs();
        }
    }
    Ok(prod.max(1e-12))
}

fn check_instance(q: &TransitionMatrix, gram: &GramMatrix) -> Result<(f64, bool), CliError> {
    let h = determinant_h(q, gram).map_err(core)?;
    let scale = determinant_scale(q, gram)?;
    let degenerate = !h.raw.is_finite() || h.raw.abs() <= 1e-10 * scale;
    Ok((h.raw, degenerate))
}

pub fn hd_check(
    model: Option<&Path>,
    random: Option<&[usize]>,
    chain_check: Option<usize>,
    seed: u64,
) -> Result<(), CliError> {
    let modes = usize::from(model.is_some())
        + usize::from(random.is_some())
        + usize::from(chain_check.is_some());
    if modes != 1 {
        return Err(CliError::Usage(
            "give exactly one of --model, --random, --chain-check".into(),
        ));
    }

    if let Some(path) = model {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read model '{}': {e}", path.display())))?;
        let spec: HmmSpec = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("malformed model '{}': {e}", path.display())))?;
        spec.validate()
            .map_err(|e| CliError::Usage(format!("invalid model: {e}")))?;
        let gram = GramMatrix::from_densities(&spec.emissions).map_err(core)?;
        let (h, degenerate) = check_instance(&spec.q, &gram)?;
        println!("H = {h:.6e} (K = {})", spec.k());
        if degenerate {
            return Err(CliError::Violation(
                "detectability determinant vanishes; the model is not identifiable \
                 through the joint-density distance"
                    .into(),
            ));
        }
        if spec.k() == 2 && h <= 0.0 {
            return Err(CliError::Violation(format!(
                "two-state determinant must be positive, got {h:.6e}"
            )));
        }
        if h < 0.0 {
            // Positivity is only proved for two states; larger K is reported.
            println!("note: negative determinant at K = {} is reported, not asserted", spec.k());
        }
        return Ok(());
    }

    if let Some(spec) = random {
        let (k, count) = (spec[0], spec[1]);
        if !(2..=4).contains(&k) || count == 0 {
            return Err(CliError::Usage(
                "--random takes K in 2..=4 and a positive draw count".into(),
            ));
        }
        let mut rng = stream_rng(seed, streams::SAMPLING);
        let mut min_h = f64::INFINITY;
        let mut violations = 0usize;
        for i in 0..count {
            // Rows mixed with the uniform distribution stay safely ergodic.
            let rows: Vec<Vec<f64>> = (0..k)
                .map(|_| {
                    let raw: Vec<f64> = (0..k).map(|_| rng.random::<f64>() + 0.05).collect();
                    let s: f64 = raw.iter().sum();
                    raw.iter().map(|v| 0.5 * v / s + 0.5 / k as f64).collect()
                })
                .collect();
            let q = TransitionMatrix::from_rows(&rows).map_err(core)?;
            let emissions: Vec<Density> = (0..k)
                .map(|_| Density::Beta {
                    alpha: 1.2 + 6.0 * rng.random::<f64>(),
                    beta: 1.2 + 6.0 * rng.random::<f64>(),
                })
                .collect();
            let gram = GramMatrix::from_densities(&emissions).map_err(core)?;
            let (h, degenerate) = check_instance(&q, &gram)?;
            println!("H[{i}] = {h:.6e}");
            min_h = min_h.min(h);
            if degenerate || (k == 2 && h <= 0.0) {
                violations += 1;
            }
        }
        println!("min H over {count} draws at K = {k}: {min_h:.6e}");
        if violations > 0 {
            return Err(CliError::Violation(format!(
                "{violations} of {count} draws violated positivity"
            )));
        }
        return Ok(());
    }

    let count = chain_check.unwrap();
    if count == 0 {
        return Err(CliError::Usage("--chain-check needs a positive count".into()));
    }
    let mut rng = stream_rng(seed, streams::SAMPLING);
    let mut worst_rel: f64 = 0.0;
    let mut checked = 0usize;
    while checked < count {
        let n1 = 1.0 + 1.5 * rng.random::<f64>();
        let n2 = n1 * (0.25 + 0.7 * rng.random::<f64>());
        let a = 0.9 * rng.random::<f64>();
        let p = 0.1 + 0.8 * rng.random::<f64>();
        let lo = p - 0.95;
        let hi = p - 0.05;
        let d = lo + (hi - lo) * rng.random::<f64>();
        if d.abs() < 0.05 || d <= lo || d >= hi {
            continue;
        }
        let (lhs, rhs) = chain_check_k2(n1, n2, a, p, d).map_err(core)?;
        worst_rel = worst_rel.max((lhs - rhs).abs() / lhs.abs().max(1e-12));
        checked += 1;
    }
    println!("max relative mismatch over {count} points: {worst_rel:.3e}");
    if worst_rel > 1e-6 {
        return Err(CliError::Violation(format!(
            "determinant and its factorized form disagree by {worst_rel:.3e}"
        )));
    }
    Ok(())
}

pub fn bench(args: &RunArgs) -> Result<(), CliError> {
    let cfg = config::resolve(args)?;
    let total = Instant::now();

    let t = Instant::now();
    let samples = sample_chain(&cfg.model, cfg.n, cfg.scenario, cfg.seed).map_err(core)?;
    let t_sample = t.elapsed();

    let t = Instant::now();
    let basis = BasisFamily::new(cfg.basis, cfg.m).map_err(core)?;
    let mom = empirical_moments(&samples, &basis).map_err(core)?;
    let t_moments = t.elapsed();

    let t = Instant::now();
    let est = spectral_estimate(&mom, cfg.model.k(), cfg.seed).map_err(core)?;
    let t_spectral = t.elapsed();

    let t = Instant::now();
    let ctx = ContrastContext::new(mom, est.q_hat.clone(), basis).map_err(core)?;
    let mut ocfg = OptimizerConfig::new(0, cfg.optimizer_budget, cfg.seed);
    ocfg.stream_tag = cfg.m as u64;
    let fit = minimize_gamma(&ctx, &est.o_hat, &ocfg).map_err(core)?;
    let t_refine = t.elapsed();

    println!("N = {}, M = {}, K = {}", cfg.n, cfg.m, cfg.model.k());
    println!("sample    {:9.3} s", t_sample.as_secs_f64());
    println!("moments   {:9.3} s", t_moments.as_secs_f64());
    println!("spectral  {:9.3} s", t_spectral.as_secs_f64());
    println!(
        "refine    {:9.3} s  ({} evaluations, contrast {:.6})",
        t_refine.as_secs_f64(),
        fit.evals_used,
        fit.gamma_value
    );
    println!("total     {:9.3} s", total.elapsed().as_secs_f64());
    Ok(())
}
