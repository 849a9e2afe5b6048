//! Artifact I/O: atomic file writes, CSV rendering, and the moment cache key.
//!
//! CSV files use '.' as the decimal separator, ',' as the field delimiter,
//! UTF-8, and Unix newlines. Floats are rendered with the shortest
//! representation that round-trips, so file bytes are deterministic.

use std::fs;
use std::path::Path;

use nphmm_core::evaluate::PipelineReport;
use nphmm_core::BasisKind;

use crate::CliError;

/// Writes to a sibling temp file and renames into place, so a crash or a
/// concurrent reader never observes a partial artifact.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Core(e.into());
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(io)?;
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = Path::new(&tmp);
    fs::write(tmp, bytes).map_err(io)?;
    fs::rename(tmp, path).map_err(io)
}

pub fn samples_csv(samples: &[[f64; 3]]) -> String {
    let mut out = String::with_capacity(24 * samples.len() + 16);
    out.push_str("y1,y2,y3\n");
    for [a, b, c] in samples {
        out.push_str(&format!("{a},{b},{c}\n"));
    }
    out
}

pub fn curves_csv(report: &PipelineReport) -> String {
    let mut out = String::from("m,gamma,pen,variance_spectral,variance_ls,risk_total\n");
    for r in &report.records {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.m, r.gamma, r.pen, r.variance_spectral, r.variance_ls, r.risk_total
        ));
    }
    out
}

/// One row per replicate, every scored quantity raw, so figures can be
/// rebuilt without re-running the pipeline.
pub fn replicates_csv(reports: &[PipelineReport]) -> String {
    let mut out = String::from(
        "seed,m_hat,rho_used,q_error_spectral,q_error_refined,\
         total_spectral,total_refined,max_state_spectral,max_state_refined,risk_total\n",
    );
    for r in reports {
        let risk = r
            .records
            .iter()
            .find(|row| row.m == r.m_hat)
            .map(|row| row.risk_total)
            .unwrap_or(f64::NAN);
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.seed,
            r.m_hat,
            r.rho_used,
            r.spectral_comparison.q_error,
            r.refined_comparison.q_error,
            r.spectral_comparison.total,
            r.refined_comparison.total,
            r.spectral_comparison.max_state,
            r.refined_comparison.max_state,
            risk
        ));
    }
    out
}

fn fnv1a(mut h: u64, bytes: &[u8]) -> u64 {
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// FNV-1a over (sample bytes, basis kind, size): moment statistics are a pure
/// function of these three, so the key alone identifies the cache entry.
pub fn moment_cache_key(samples: &[[f64; 3]], kind: BasisKind, m: usize) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325;
    for triple in samples {
        for v in triple {
            h = fnv1a(h, &v.to_le_bytes());
        }
    }
    h = fnv1a(h, &[kind as u8]);
    fnv1a(h, &(m as u64).to_le_bytes())
}
