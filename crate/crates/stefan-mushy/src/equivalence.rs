//! Boundary-condition equivalence: the induced fixed-face temperature datum
//! that reproduces a convective or flux solution exactly, round-trip checks
//! against the temperature-data solver, and the closed-form bound on erf(xi).

use std::f64::consts::PI;

use crate::model::{BoundaryCondition, Material, MushySolution, MushyZone, ProblemKind};
use crate::numerics;
use crate::{parallel, solver, Error, Result};

/// Outcome of a round-trip through the induced temperature datum.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport {
    /// Induced face-temperature magnitude d0, °C.
    pub d0_induced: f64,
    /// Solid-front coefficient of the source solution.
    pub xi_source: f64,
    /// Solid-front coefficient of the re-solved temperature-data problem.
    pub xi_target: f64,
    /// Max |T_source - T_target| over the comparison grid, °C.
    pub max_temp_gap: f64,
    /// Max front-position gap over the comparison grid, m.
    pub fronts_gap: f64,
}

impl EquivalenceReport {
    pub fn xi_gap(&self) -> f64 {
        (self.xi_source - self.xi_target).abs()
    }
}

/// Face-temperature magnitude induced by a convective solution:
/// d0 = d_inf erf(xi) / (k/(h0 sqrt(pi alpha)) + erf(xi)). Always lies
/// strictly between 0 and d_inf and equals -T(0, t).
pub fn d0_from_convective(sol: &MushySolution) -> Result<f64> {
    match (sol.kind(), *sol.bc()) {
        (ProblemKind::P1, BoundaryCondition::Convective { h0, d_inf }) => {
            let m = sol.material();
            let kappa = m.k / (h0 * (PI * m.alpha()).sqrt());
            let erf_xi = numerics::erf(sol.xi());
            Ok(d_inf * erf_xi / (kappa + erf_xi))
        }
        _ => Err(Error::KindMismatch {
            kind: sol.kind().name(),
            bc: "convective",
        }),
    }
}

/// Face-temperature magnitude induced by a flux solution:
/// d0 = q0 sqrt(pi alpha) erf(omega) / k = -T(0, t).
pub fn d0_from_flux(sol: &MushySolution) -> Result<f64> {
    match (sol.kind(), *sol.bc()) {
        (ProblemKind::P3, BoundaryCondition::Flux { q0 }) => {
            let m = sol.material();
            Ok(q0 * (PI * m.alpha()).sqrt() * numerics::erf(sol.xi()) / m.k)
        }
        _ => Err(Error::KindMismatch {
            kind: sol.kind().name(),
            bc: "flux",
        }),
    }
}

/// Face-temperature magnitude for any solution kind; for temperature-data
/// solutions this is the datum itself.
pub fn induced_d0(sol: &MushySolution) -> Result<f64> {
    match sol.kind() {
        ProblemKind::P1 => d0_from_convective(sol),
        ProblemKind::P3 => d0_from_flux(sol),
        ProblemKind::P2 | ProblemKind::P1Limit => match *sol.bc() {
            BoundaryCondition::Temperature { d0 } => Ok(d0),
            _ => unreachable!("kind/bc pairing enforced at construction"),
        },
    }
}

/// Number of points per axis of the comparison grid: geometric in t over
/// [1e-2, 1e2] (the similarity structure makes x/s(t) the natural spatial
/// coordinate, sampled uniformly on [0, 1]).
const GRID_POINTS: usize = 50;

fn comparison_times() -> Vec<f64> {
    (0..GRID_POINTS)
        .map(|i| 10f64.powf(-2.0 + 4.0 * i as f64 / (GRID_POINTS - 1) as f64))
        .collect()
}

/// Solves the temperature-data problem with the induced d0 and reports the
/// gaps to the source solution. The source must be convective or flux.
pub fn check_equivalence(source: &MushySolution) -> Result<EquivalenceReport> {
    if !matches!(source.kind(), ProblemKind::P1 | ProblemKind::P3) {
        return Err(Error::KindMismatch {
            kind: source.kind().name(),
            bc: "temperature (equivalence target)",
        });
    }
    let d0 = induced_d0(source)?;
    let target = solver::solve_p2(source.material(), source.mushy(), d0)?;

    let times = comparison_times();
    let max_temp_gap = parallel::max_map(&times, |&t| {
        let s = source.front_s(t).min(target.front_s(t));
        let mut worst = 0.0_f64;
        for j in 0..GRID_POINTS {
            let x = s * j as f64 / (GRID_POINTS - 1) as f64;
            let gap = (source.profile_value(x, t) - target.profile_value(x, t)).abs();
            worst = worst.max(gap);
        }
        worst
    });
    let fronts_gap = parallel::max_map(&times, |&t| {
        let ds = (source.front_s(t) - target.front_s(t)).abs();
        let dr = (source.front_r(t) - target.front_r(t)).abs();
        ds.max(dr)
    });

    Ok(EquivalenceReport {
        d0_induced: d0,
        xi_source: source.xi(),
        xi_target: target.xi(),
        max_temp_gap,
        fronts_gap,
    })
}

/// Closed-form upper bound for erf(xi) of a temperature-data solution.
///
/// With a bulk temperature (`d_inf = Some(..)`, requires d_inf > d0):
/// (d_inf d0 / (d_inf - d0)) sqrt(2c / (pi gamma (1 - epsilon) latent));
/// without: d0 sqrt(2c / (pi gamma (1 - epsilon) latent)).
///
/// The bound is returned, not asserted; in the classical limit gamma = 0 it
/// is infinite (trivially true). Callers check `erf(xi) < bound`.
pub fn xi_bound(d0: f64, z: &MushyZone, m: &Material, d_inf: Option<f64>) -> Result<f64> {
    let root = (2.0 * m.c / (PI * z.gamma * (1.0 - z.epsilon) * m.latent_heat)).sqrt();
    match d_inf {
        Some(di) => {
            if di <= d0 {
                return Err(Error::DegenerateBound { d_inf: di, d0 });
            }
            Ok(di * d0 / (di - d0) * root)
        }
        None => Ok(d0 * root),
    }
}
