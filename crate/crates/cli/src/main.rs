//! Command-line front end for the estimation pipeline: simulation, moment
//! accumulation, the spectral initializer, the full penalized fit with
//! dimension selection, re-selection on existing reports, the detectability
//! check, and a stage benchmark.
//!
//! Exit codes: 0 success, 1 assumption or acceptance violation, 2 usage
//! error, 3 numerical failure.

mod artifacts;
mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Errors carrying their process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, malformed or missing input. Exit 2.
    Usage(String),
    /// An assumption or acceptance check failed. Exit 1.
    Violation(String),
    /// A library error, classified by its innermost variant. Exit 2 or 3.
    Core(nphmm_core::Error),
}

/// Input problems exit 2; failures of the computation itself exit 3.
fn classify(e: &nphmm_core::Error) -> u8 {
    use nphmm_core::Error as E;
    match e {
        E::Stage { source, .. } => classify(source),
        E::Io(_)
        | E::Json(_)
        | E::BadFormat { .. }
        | E::DomainViolation { .. }
        | E::DimensionMismatch { .. } => 2,
        E::NotErgodic
        | E::SingularWhitening { .. }
        | E::NonRealDiagonalization { .. }
        | E::KTooLarge { .. }
        | E::NoJump
        | E::CalibrationFailed { .. }
        | E::NonFiniteObjective { .. } => 3,
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Violation(_) => 1,
            CliError::Core(e) => classify(e),
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Violation(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(name = "nphmm", version, about = "Nonparametric hidden Markov model estimation")]
struct Cli {
    /// Worker threads (fallback: NPHMM_THREADS, then all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw observation triples and write samples.csv.
    Simulate(config::RunArgs),
    /// Accumulate the moment statistics for one basis size, with caching.
    Moments(config::RunArgs),
    /// Run the moment-based initializer at one basis size.
    Spectral(config::RunArgs),
    /// Run the full pipeline: sweep, refine, calibrate, select, score.
    Fit {
        #[command(flatten)]
        run: config::RunArgs,
        /// Independent replicate runs with seeds seed, seed+1, ...
        #[arg(long, default_value_t = 1)]
        replicates: usize,
    },
    /// Re-run dimension selection on an existing fit report.
    Select {
        /// Fit report JSON produced by `fit`.
        #[arg(long)]
        report: PathBuf,
        /// Fixed penalty constant.
        #[arg(long)]
        rho: Option<f64>,
        /// Calibration method: "jump" or "slope".
        #[arg(long)]
        calibration: Option<String>,
    },
    /// Verify the detectability determinant on a model or on random draws.
    HdCheck {
        /// JSON model to check.
        #[arg(long)]
        model: Option<PathBuf>,
        /// Check COUNT random K-state instances: --random K COUNT.
        #[arg(long, num_args = 2, value_names = ["K", "COUNT"])]
        random: Option<Vec<usize>>,
        /// Compare the determinant with its factorized form at COUNT points.
        #[arg(long, value_name = "COUNT")]
        chain_check: Option<usize>,
        /// Seed for the random draws.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time every pipeline stage once at one basis size.
    Bench(config::RunArgs),
}

fn init_threads(flag: Option<usize>) {
    let n = flag.or_else(|| {
        std::env::var("NPHMM_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    if let Some(n) = n.filter(|&n| n > 0) {
        // Ignore failure: the pool can only be set once per process.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads(cli.threads);
    let result = match &cli.command {
        Command::Simulate(args) => commands::simulate(args),
        Command::Moments(args) => commands::moments(args),
        Command::Spectral(args) => commands::spectral(args),
        Command::Fit { run, replicates } => commands::fit(run, *replicates),
        Command::Select {
            report,
            rho,
            calibration,
        } => commands::select(report, *rho, calibration.clone()),
        Command::HdCheck {
            model,
            random,
            chain_check,
            seed,
        } => commands::hd_check(model.as_deref(), random.as_deref(), *chain_check, *seed),
        Command::Bench(args) => commands::bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
