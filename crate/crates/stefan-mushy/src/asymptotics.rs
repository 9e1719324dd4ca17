//! Large-h0 behavior of the convective problem: per-h0 solves against the
//! limit problem, the gap table, and the fitted convergence rate (the gap
//! xi_inf - xi(h0) is positive and decays like 1/h0).

use crate::model::{Material, MushyZone};
use crate::{parallel, solver, Error, Result};

/// Gaps below this floor carry no rate information (they sit at the root
/// tolerance) and are excluded from the slope fit.
pub const GAP_FIT_FLOOR: f64 = 1e3 * solver::XI_TOLERANCE;

/// One solve of the convective problem inside a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub h0: f64,
    pub xi: f64,
    /// xi_inf - xi(h0); strictly positive.
    pub gap: f64,
    pub mu: f64,
    /// mu_inf - mu(h0).
    pub mu_gap: f64,
}

/// Table of per-h0 gaps toward the limit problem, with the least-squares
/// slope of log(gap) against log(h0).
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTable {
    /// Rows ordered by increasing h0.
    pub rows: Vec<ConvergenceRow>,
    pub xi_infinity: f64,
    pub fitted_slope: f64,
}

/// Default sweep: 11 log-spaced transfer coefficients over 10^1 .. 10^6.
pub fn default_h0_sweep() -> Vec<f64> {
    (0..11).map(|i| 10f64.powf(1.0 + 0.5 * i as f64)).collect()
}

/// Solves the convective problem for every h0 in the list (each must be
/// supercritical), solves the limit problem once, and fits the log-log decay
/// rate of the gaps. The list needs at least 3 values spanning at least two
/// decades.
pub fn convergence_study(
    m: &Material,
    z: &MushyZone,
    d_inf: f64,
    h0_values: &[f64],
) -> Result<ConvergenceTable> {
    if h0_values.len() < 3 {
        return Err(Error::InvalidSweep {
            reason: format!("need at least 3 h0 values, got {}", h0_values.len()),
        });
    }
    if h0_values.iter().any(|&v| !v.is_finite() || v <= 0.0) {
        return Err(Error::InvalidSweep {
            reason: "h0 values must be positive and finite".into(),
        });
    }
    let mut sorted = h0_values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite values"));
    if sorted[sorted.len() - 1] / sorted[0] < 100.0 {
        return Err(Error::InvalidSweep {
            reason: "h0 values must span at least two decades".into(),
        });
    }

    let limit = solver::solve_p1_limit(m, z, d_inf)?;
    let solves = parallel::map_collect(&sorted, |&h0| solver::solve_p1(m, z, h0, d_inf));
    let mut rows = Vec::with_capacity(sorted.len());
    for (h0, outcome) in sorted.iter().zip(solves) {
        let sol = outcome?;
        let gap = limit.xi() - sol.xi();
        if gap <= 0.0 {
            return Err(Error::InvalidSweep {
                reason: format!(
                    "gap to the limit front is not resolvable at h0 = {h0} (gap = {gap:e})"
                ),
            });
        }
        rows.push(ConvergenceRow {
            h0: *h0,
            xi: sol.xi(),
            gap,
            mu: sol.mu(),
            mu_gap: limit.mu() - sol.mu(),
        });
    }

    let fitted_slope = fit_log_log_slope(
        rows.iter()
            .filter(|r| r.gap > GAP_FIT_FLOOR)
            .map(|r| (r.h0, r.gap)),
    )?;

    Ok(ConvergenceTable {
        rows,
        xi_infinity: limit.xi(),
        fitted_slope,
    })
}

/// Ordinary least squares on (ln x, ln y).
fn fit_log_log_slope(points: impl Iterator<Item = (f64, f64)>) -> Result<f64> {
    let logs: Vec<(f64, f64)> = points.map(|(x, y)| (x.ln(), y.ln())).collect();
    if logs.len() < 2 {
        return Err(Error::InvalidSweep {
            reason: "fewer than 2 gaps above the fit floor".into(),
        });
    }
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs
        .iter()
        .map(|p| (p.0 - mean_x) * (p.1 - mean_y))
        .sum();
    Ok(sxy / sxx)
}
