//! Penalized dimension selection and slope-heuristic calibration.
//!
//! The fitted contrast M ↦ γ_N(ĝ_M) decreases roughly linearly in the
//! over-dimensioned regime; the penalty ρ·M·log N/N prices that slope. ρ is
//! calibrated either from the largest drop of the piecewise-constant map
//! ρ ↦ M̂(ρ) (dimension jump) or from a least-squares line through the tail
//! of the contrast curve (slope fit); both implement the usual slope
//! heuristic and are exposed side by side.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The fitted contrast values, one per candidate dimension.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SelectionTrace {
    /// Sample count behind every γ value.
    pub n: u64,
    /// (M, γ_N(ĝ_M)) pairs, M strictly increasing.
    pub records: Vec<(usize, f64)>,
}

impl SelectionTrace {
    pub fn new(n: u64, records: Vec<(usize, f64)>) -> Result<Self> {
        if records.is_empty() {
            return Err(Error::DomainViolation {
                what: "selection trace must contain at least one dimension".into(),
            });
        }
        for pair in records.windows(2) {
            if pair[1].0 <= pair[0].0 {
                return Err(Error::DomainViolation {
                    what: "trace dimensions must be strictly increasing".into(),
                });
            }
        }
        if let Some((m, g)) = records.iter().find(|(_, g)| !g.is_finite()) {
            return Err(Error::DomainViolation {
                what: format!("non-finite contrast {g} at M={m}"),
            });
        }
        Ok(SelectionTrace { n, records })
    }

    pub fn m_max(&self) -> usize {
        self.records.last().map(|(m, _)| *m).unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CalibrationMethod {
    SlopeFit,
    DimensionJump,
}

/// How the calibrated ρ was located.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum CalibrationDiagnostics {
    Jump {
        /// Grid point where the largest drop of ρ ↦ M̂(ρ) lands.
        rho_jump: f64,
        /// Height of that drop in dimensions.
        jump_size: usize,
    },
    Slope {
        m_lo: usize,
        m_hi: usize,
        slope: f64,
        r_squared: f64,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CalibrationResult {
    pub rho_hat: f64,
    pub m_hat: usize,
    pub method: CalibrationMethod,
    pub diagnostics: CalibrationDiagnostics,
}

/// Inclusive dimension window for the slope fit.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SlopeWindow {
    pub m_lo: usize,
    pub m_hi: usize,
}

/// pen(N, M) = ρ·M·log N/N.
pub fn penalty(n: f64, m: usize, rho: f64) -> f64 {
    rho * m as f64 * n.ln() / n
}

/// argmin over the trace of γ_M + pen(N, M, ρ); ties go to the smaller M.
pub fn select_m(trace: &SelectionTrace, rho: f64) -> usize {
    let n = trace.n as f64;
    let mut best_m = trace.records[0].0;
    let mut best_val = f64::INFINITY;
    for &(m, g) in &trace.records {
        let val = g + penalty(n, m, rho);
        if val < best_val {
            best_val = val;
            best_m = m;
        }
    }
    best_m
}

/// 200 log-spaced ρ values spanning [1e−3, 10].
pub fn default_rho_grid() -> Vec<f64> {
    let (lo, hi, count) = (1e-3f64, 10.0f64, 200usize);
    let (la, lb) = (lo.log10(), hi.log10());
    (0..count)
        .map(|i| 10f64.powf(la + (lb - la) * i as f64 / (count - 1) as f64))
        .collect()
}

/// Candidate-dimension ceiling: min(50, ⌊√(N/log N)⌋).
pub fn default_m_max(n: u64) -> usize {
    let nf = n as f64;
    let cap = (nf / nf.ln()).sqrt().floor() as usize;
    cap.min(50).max(1)
}

/// Calibrates ρ from the largest drop of ρ ↦ M̂(ρ) over the grid and
/// returns ρ̂ = 2·ρ_jump together with the resulting selection.
pub fn calibrate_dimension_jump(
    trace: &SelectionTrace,
    rho_grid: &[f64],
) -> Result<CalibrationResult> {
    if rho_grid.len() < 3 {
        return Err(Error::DomainViolation {
            what: "rho grid needs at least 3 points".into(),
        });
    }
    if rho_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::DomainViolation {
            what: "rho grid must be strictly increasing".into(),
        });
    }
    let m_vals: Vec<usize> = rho_grid.iter().map(|&r| select_m(trace, r)).collect();
    let mut best_drop = 0usize;
    let mut best_idx = 0usize;
    for i in 1..m_vals.len() {
        let drop = m_vals[i - 1].saturating_sub(m_vals[i]);
        if drop > best_drop {
            best_drop = drop;
            best_idx = i;
        }
    }
    if best_drop == 0 {
        return Err(Error::NoJump);
    }
    let rho_jump = rho_grid[best_idx];
    let rho_hat = 2.0 * rho_jump;
    Ok(CalibrationResult {
        rho_hat,
        m_hat: select_m(trace, rho_hat),
        method: CalibrationMethod::DimensionJump,
        diagnostics: CalibrationDiagnostics::Jump {
            rho_jump,
            jump_size: best_drop,
        },
    })
}

fn fit_line(points: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_tot: f64 = points.iter().map(|p| (p.1 - my).powi(2)).sum();
    let ss_res: f64 = points
        .iter()
        .map(|p| (p.1 - (intercept + slope * p.0)).powi(2))
        .sum();
    let r_squared = if ss_tot > 0.0 { 1.0 - ss_res / ss_tot } else { 1.0 };
    (slope, intercept, r_squared)
}

/// Ordinary least squares through (M, γ_M) on the window; the fitted slope
/// is read as −ρ̂/2·log N/N, so ρ̂ = 2|slope|·N/log N.
pub fn calibrate_slope_fit(
    trace: &SelectionTrace,
    window: SlopeWindow,
) -> Result<CalibrationResult> {
    let points: Vec<(f64, f64)> = trace
        .records
        .iter()
        .filter(|(m, _)| (window.m_lo..=window.m_hi).contains(m))
        .map(|&(m, g)| (m as f64, g))
        .collect();
    if points.len() < 4 {
        return Err(Error::DomainViolation {
            what: format!(
                "slope window [{}, {}] holds {} points, need 4",
                window.m_lo,
                window.m_hi,
                points.len()
            ),
        });
    }
    let (slope, _, r_squared) = fit_line(&points);
    if slope >= 0.0 {
        return Err(Error::CalibrationFailed {
            reason: format!("fitted contrast slope {slope:.3e} is not negative"),
        });
    }
    let n = trace.n as f64;
    let rho_hat = 2.0 * slope.abs() * n / n.ln();
    Ok(CalibrationResult {
        rho_hat,
        m_hat: select_m(trace, rho_hat),
        method: CalibrationMethod::SlopeFit,
        diagnostics: CalibrationDiagnostics::Slope {
            m_lo: window.m_lo,
            m_hi: window.m_hi,
            slope,
            r_squared,
        },
    })
}

/// Default fit window: the top half of the trace, shrunk from the left
/// until the line fits with R² ≥ 0.99 or only 4 points remain.
pub fn default_slope_window(trace: &SelectionTrace) -> SlopeWindow {
    let len = trace.records.len();
    let mut start = len / 2;
    if len - start < 4 {
        start = len.saturating_sub(4);
    }
    loop {
        let points: Vec<(f64, f64)> = trace.records[start..]
            .iter()
            .map(|&(m, g)| (m as f64, g))
            .collect();
        if points.len() <= 4 {
            break;
        }
        let (_, _, r2) = fit_line(&points);
        if r2 >= 0.99 {
            break;
        }
        start += 1;
    }
    SlopeWindow {
        m_lo: trace.records[start].0,
        m_hi: trace.records[len - 1].0,
    }
}
