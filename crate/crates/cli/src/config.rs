//! Run configuration: a JSON file merged with command-line overrides into a
//! fully resolved set of parameters that is embedded in every artifact.

use std::fs;
use std::path::{Path, PathBuf};

use nphmm_core::selection::default_m_max;
use nphmm_core::{BasisKind, CalibrationMethod, HmmSpec, Scenario};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// On-disk configuration; every field is optional so that flags can fill the
/// gaps. The model may be inline or referenced by path, not both.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub model: Option<HmmSpec>,
    pub model_path: Option<PathBuf>,
    pub n: Option<usize>,
    pub scenario: Option<String>,
    pub basis: Option<String>,
    pub m_max: Option<usize>,
    pub m: Option<usize>,
    pub calibration: Option<String>,
    pub rho_override: Option<f64>,
    pub optimizer_budget: Option<usize>,
    pub seed: Option<u64>,
    pub out_dir: Option<PathBuf>,
}

/// Command-line overrides shared by the run-style subcommands.
#[derive(Clone, Debug, clap::Args)]
pub struct RunArgs {
    /// JSON run configuration file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// JSON model file (overrides the config's model).
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// Number of observation triples.
    #[arg(long)]
    pub n: Option<usize>,
    /// Triple extraction: "a" (overlapping) or "b" (disjoint).
    #[arg(long)]
    pub scenario: Option<String>,
    /// Basis family: "histogram" or "trig".
    #[arg(long)]
    pub basis: Option<String>,
    /// Largest basis size of the selection sweep.
    #[arg(long)]
    pub m_max: Option<usize>,
    /// Basis size for single-size commands (default: the sweep maximum).
    #[arg(long)]
    pub m: Option<usize>,
    /// Penalty calibration: "jump" or "slope".
    #[arg(long)]
    pub calibration: Option<String>,
    /// Fixed penalty constant; replaces calibration entirely.
    #[arg(long)]
    pub rho: Option<f64>,
    /// Objective evaluation budget of each refinement.
    #[arg(long)]
    pub budget: Option<usize>,
    /// Master seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory for artifacts.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// The merged, validated parameters of one run. Serialized into every
/// artifact so that outputs carry their provenance.
#[derive(Clone, Debug, Serialize)]
pub struct Resolved {
    pub model: HmmSpec,
    pub n: usize,
    pub scenario: Scenario,
    pub basis: BasisKind,
    pub m_max: usize,
    /// Basis size used by the single-size commands.
    pub m: usize,
    pub calibration: CalibrationMethod,
    pub rho_override: Option<f64>,
    pub optimizer_budget: usize,
    pub seed: u64,
    pub out_dir: PathBuf,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn parse_scenario(s: &str) -> Result<Scenario, CliError> {
    match s.to_ascii_lowercase().as_str() {
        "a" => Ok(Scenario::A),
        "b" => Ok(Scenario::B),
        other => Err(usage(format!("unknown scenario '{other}' (expected 'a' or 'b')"))),
    }
}

pub fn parse_basis(s: &str) -> Result<BasisKind, CliError> {
    match s.to_ascii_lowercase().as_str() {
        "histogram" | "hist" => Ok(BasisKind::Histogram),
        "trig" | "trigonometric" => Ok(BasisKind::Trig),
        other => Err(usage(format!(
            "unknown basis '{other}' (expected 'histogram' or 'trig')"
        ))),
    }
}

pub fn parse_calibration(s: &str) -> Result<CalibrationMethod, CliError> {
    match s.to_ascii_lowercase().as_str() {
        "jump" | "dimension-jump" => Ok(CalibrationMethod::DimensionJump),
        "slope" | "slope-fit" => Ok(CalibrationMethod::SlopeFit),
        other => Err(usage(format!(
            "unknown calibration '{other}' (expected 'jump' or 'slope')"
        ))),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path, what: &str) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {what} '{}': {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| usage(format!("malformed {what} '{}': {e}", path.display())))
}

/// Loads the config file (if any), applies the flag overrides, fills the
/// defaults, and validates the result.
pub fn resolve(args: &RunArgs) -> Result<Resolved, CliError> {
    let cfg: RunConfig = match &args.config {
        Some(path) => read_json(path, "config")?,
        None => RunConfig::default(),
    };

    if cfg.model.is_some() && cfg.model_path.is_some() {
        return Err(usage("config holds both an inline model and a model path"));
    }
    let model: HmmSpec = if let Some(path) = &args.model {
        read_json(path, "model")?
    } else if let Some(spec) = cfg.model {
        spec
    } else if let Some(path) = &cfg.model_path {
        // Relative model paths resolve against the config file's directory.
        let base = args.config.as_deref().and_then(Path::parent);
        let full = match base {
            Some(dir) if path.is_relative() => dir.join(path),
            _ => path.clone(),
        };
        read_json(&full, "model")?
    } else {
        return Err(usage("no model: provide --model, or 'model'/'model_path' in the config"));
    };
    model
        .validate()
        .map_err(|e| usage(format!("invalid model: {e}")))?;

    let rho_flag = args.rho.or(cfg.rho_override);
    let cal_text = args.calibration.clone().or(cfg.calibration);
    // Exactly one of (penalty constant, calibration method) governs selection.
    if rho_flag.is_some() && cal_text.is_some() {
        return Err(usage("give either a fixed penalty (--rho) or a calibration method, not both"));
    }
    let calibration = match &cal_text {
        Some(s) => parse_calibration(s)?,
        None => CalibrationMethod::DimensionJump,
    };

    let n = args.n.or(cfg.n).unwrap_or(10_000);
    if n == 0 {
        return Err(usage("sample size must be positive"));
    }
    let scenario = match args.scenario.as_deref().or(cfg.scenario.as_deref()) {
        Some(s) => parse_scenario(s)?,
        None => Scenario::B,
    };
    let basis = match args.basis.as_deref().or(cfg.basis.as_deref()) {
        Some(s) => parse_basis(s)?,
        None => BasisKind::Histogram,
    };
    let m_max = args.m_max.or(cfg.m_max).unwrap_or_else(|| {
        let cap = default_m_max(n as u64);
        match basis {
            BasisKind::Trig => cap | 1,
            BasisKind::Histogram => cap,
        }
    });
    let m = args.m.or(cfg.m).unwrap_or(m_max);
    if m > m_max {
        return Err(usage(format!("basis size {m} exceeds the sweep maximum {m_max}")));
    }

    Ok(Resolved {
        model,
        n,
        scenario,
        basis,
        m_max,
        m,
        calibration,
        rho_override: rho_flag,
        optimizer_budget: args.budget.or(cfg.optimizer_budget).unwrap_or(2000),
        seed: args.seed.or(cfg.seed).unwrap_or(0),
        out_dir: args.out.clone().or(cfg.out_dir).unwrap_or_else(|| PathBuf::from(".")),
    })
}
