//! Independent numerical verification: every governing condition of the
//! model is re-checked on a sampling grid against the constructed solution,
//! plus a cross-check of the classical (zero-width) limit against the
//! one-phase front equation solved by plain bisection.
//!
//! All residuals are reported scale-free so the thresholds hold under any
//! units:
//!
//! - heat equation: max |T_t - alpha T_xx| * t / |T(0,t)| (finite differences,
//!   interior points only),
//! - front energy balance: normalized by the latent-heat flux scale
//!   rho * latent * sqrt(alpha/t),
//! - mushy width: relative to gamma,
//! - boundary data: relative to the imposed datum.
//!
//! The derivatives entering the front and face residuals are the analytic
//! derivatives of the erf profile, so those checks test algebraic identities
//! of the construction rather than finite-difference accuracy; only the
//! interior heat-equation residual uses finite differences.

use std::f64::consts::PI;

use crate::model::{BoundaryCondition, Material, MushySolution, MushyZone, ProblemKind};
use crate::numerics;
use crate::{parallel, solver, Error, Result};

/// Scaled heat-equation residual admissible for a clean solution with the
/// default step scale (pure second-order truncation error).
pub const PDE_RESIDUAL_LIMIT: f64 = 1e-6;
/// Scaled front energy-balance residual for a clean solution.
pub const STEFAN_RESIDUAL_LIMIT: f64 = 1e-9;
/// Scaled mushy-width residual for a clean solution.
pub const WIDTH_RESIDUAL_LIMIT: f64 = 1e-10;
/// Scaled boundary residual for a clean solution.
pub const BOUNDARY_RESIDUAL_LIMIT: f64 = 1e-10;

/// Sampling grid: times, positions as fractions of s(t), and the
/// finite-difference step scale (h_x = scale * s(t), h_t = scale * t).
///
/// The default step scale 1.25e-3 keeps the centered-difference truncation
/// error well above the f64 cancellation floor of the second difference
/// (which grows like eps/(scale^2 xi^2)), so halving the step quarters the
/// residual as a second-order stencil must, while staying far below the
/// clean-solution threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub t_values: Vec<f64>,
    pub x_fractions: Vec<f64>,
    pub fd_step_scale: f64,
}

impl GridSpec {
    pub fn new(t_values: Vec<f64>, x_fractions: Vec<f64>, fd_step_scale: f64) -> Result<Self> {
        let strictly_sorted = |v: &[f64]| v.windows(2).all(|w| w[0] < w[1]);
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if t_values.is_empty()
            || t_values.iter().any(|&t| !positive(t))
            || !strictly_sorted(&t_values)
        {
            return Err(Error::InvalidSweep {
                reason: "grid times must be positive, sorted, and non-empty".into(),
            });
        }
        if x_fractions.is_empty()
            || x_fractions.iter().any(|f| !(0.0..=1.0).contains(f))
            || !strictly_sorted(&x_fractions)
        {
            return Err(Error::InvalidSweep {
                reason: "grid fractions must lie in [0, 1] and be sorted".into(),
            });
        }
        if !positive(fd_step_scale) || fd_step_scale >= 0.1 {
            return Err(Error::InvalidSweep {
                reason: format!("fd_step_scale out of (0, 0.1): {fd_step_scale}"),
            });
        }
        Ok(Self {
            t_values,
            x_fractions,
            fd_step_scale,
        })
    }

    pub fn describe(&self) -> String {
        format!(
            "t in [{}, {}] ({} values), x/s(t) in [{}, {}] ({} values), fd_step_scale {}",
            self.t_values[0],
            self.t_values[self.t_values.len() - 1],
            self.t_values.len(),
            self.x_fractions[0],
            self.x_fractions[self.x_fractions.len() - 1],
            self.x_fractions.len(),
            self.fd_step_scale
        )
    }

    pub fn with_fd_step_scale(&self, fd_step_scale: f64) -> Result<Self> {
        Self::new(self.t_values.clone(), self.x_fractions.clone(), fd_step_scale)
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        let t_values = vec![0.01, 0.1, 1.0, 10.0, 100.0];
        let x_fractions = (0..=20).map(|i| i as f64 / 20.0).collect();
        Self::new(t_values, x_fractions, 1.25e-3).expect("default grid is valid")
    }
}

/// Scale-free max residuals of each governing condition on a sampling grid.
/// `max_width_residual` is `None` in the classical limit, where the width
/// condition does not apply.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub max_pde_residual: f64,
    pub max_stefan_residual: f64,
    pub max_width_residual: Option<f64>,
    pub max_bc_residual: f64,
    pub grid_spec: String,
}

impl VerificationReport {
    /// True when every residual sits below its clean-solution threshold.
    pub fn passes(&self) -> bool {
        self.max_pde_residual <= PDE_RESIDUAL_LIMIT
            && self.max_stefan_residual <= STEFAN_RESIDUAL_LIMIT
            && self.max_width_residual.unwrap_or(0.0) <= WIDTH_RESIDUAL_LIMIT
            && self.max_bc_residual <= BOUNDARY_RESIDUAL_LIMIT
    }
}

/// Max over the grid of |T_t - alpha T_xx| * t / |T(0,t)| with centered
/// differences (steps h_x = scale * s(t), h_t = scale * t), interior points
/// only. The profile solves the equation exactly, so this measures pure
/// truncation error of the stencil.
pub fn residual_heat_equation(sol: &MushySolution, grid: &GridSpec) -> f64 {
    let alpha = sol.alpha();
    let scale = grid.fd_step_scale;
    let face = sol.coeff_const().abs();

    let mut points = Vec::with_capacity(grid.t_values.len() * grid.x_fractions.len());
    for &t in &grid.t_values {
        for &frac in &grid.x_fractions {
            // keep the whole 5-point stencil strictly inside the solid region:
            // s shrinks to s(t) sqrt(1 - scale) at the earlier time level
            if frac >= 2.0 * scale && frac <= 1.0 - 3.0 * scale {
                points.push((t, frac));
            }
        }
    }

    parallel::max_map(&points, |&(t, frac)| {
        let s = sol.front_s(t);
        let x = frac * s;
        let h_x = scale * s;
        let h_t = scale * t;
        let t_t = (sol.profile_value(x, t + h_t) - sol.profile_value(x, t - h_t)) / (2.0 * h_t);
        let t_xx = (sol.profile_value(x + h_x, t) - 2.0 * sol.profile_value(x, t)
            + sol.profile_value(x - h_x, t))
            / (h_x * h_x);
        (t_t - alpha * t_xx).abs() * t / face
    })
}

/// Max over the times of the front energy-balance residual
/// |k T_x(s(t),t) - rho latent (eps xi + (1-eps) mu) sqrt(alpha/t)|,
/// normalized by rho latent sqrt(alpha/t). T_x is analytic.
pub fn residual_stefan(sol: &MushySolution, t_values: &[f64]) -> f64 {
    let m = sol.material();
    let z = sol.mushy();
    let alpha = m.alpha();
    let front_mix = z.epsilon * sol.xi() + (1.0 - z.epsilon) * sol.mu();
    parallel::max_map(t_values, |&t| {
        let scale = m.rho * m.latent_heat * (alpha / t).sqrt();
        let lhs = m.k * sol.gradient_at_front(t);
        (lhs / scale - front_mix).abs()
    })
}

/// Max over the times of |T_x(s(t),t) (r(t) - s(t)) - gamma| / gamma with the
/// analytic gradient. `None` in the classical limit (gamma = 0), where the
/// width condition does not apply.
pub fn residual_mushy_width(sol: &MushySolution, t_values: &[f64]) -> Option<f64> {
    let gamma = sol.mushy().gamma;
    if gamma == 0.0 {
        return None;
    }
    Some(parallel::max_map(t_values, |&t| {
        let width = sol.front_r(t) - sol.front_s(t);
        (sol.gradient_at_front(t) * width / gamma - 1.0).abs()
    }))
}

/// Max over the times of the face-condition residual for `bc`, normalized by
/// the imposed datum. The face gradient and temperature are analytic. A
/// temperature condition is accepted against any solution kind (that is the
/// equivalence cross-check); otherwise the variant must match the kind.
pub fn residual_boundary(sol: &MushySolution, bc: &BoundaryCondition, t_values: &[f64]) -> Result<f64> {
    let compatible = matches!(
        (sol.kind(), bc),
        (ProblemKind::P1, BoundaryCondition::Convective { .. })
            | (ProblemKind::P3, BoundaryCondition::Flux { .. })
            | (_, BoundaryCondition::Temperature { .. })
    );
    if !compatible {
        return Err(Error::KindMismatch {
            kind: sol.kind().name(),
            bc: bc.variant_name(),
        });
    }
    let m = sol.material();
    let face = sol.face_temperature();
    Ok(match *bc {
        BoundaryCondition::Convective { h0, d_inf } => parallel::max_map(t_values, |&t| {
            let lhs = m.k * sol.gradient_at_face(t);
            let rhs = h0 / t.sqrt() * (face + d_inf);
            (lhs - rhs).abs() * t.sqrt() / (h0 * d_inf)
        }),
        BoundaryCondition::Flux { q0 } => parallel::max_map(t_values, |&t| {
            let lhs = m.k * sol.gradient_at_face(t);
            (lhs - q0 / t.sqrt()).abs() * t.sqrt() / q0
        }),
        BoundaryCondition::Temperature { d0 } => {
            parallel::max_map(t_values, |&_t| (face + d0).abs() / d0)
        }
    })
}

/// Cross-validates the temperature-data solver at gamma = 0 against the
/// classical one-phase front equation sqrt(pi) x e^(x^2) erf(x) = ste,
/// solved independently by 80 plain bisection steps. Returns the classical
/// root and the gap to the solver's root.
pub fn classical_limit_check(m: &Material, ste: f64) -> Result<(f64, f64)> {
    if !ste.is_finite() || ste <= 0.0 {
        return Err(Error::InvalidSweep {
            reason: format!("stefan number must be positive (ste = {ste})"),
        });
    }
    let d0 = ste * m.latent_heat / m.c;
    let zone = MushyZone::new(0.0, 0.5);
    let sol = solver::solve_p2(m, &zone, d0)?;

    let f = |x: f64| PI.sqrt() * x * (x * x).exp() * numerics::erf(x) - ste;
    let mut lo = 1e-12;
    let mut hi = 8.0;
    debug_assert!(f(lo) < 0.0 && f(hi) > 0.0);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let classical = 0.5 * (lo + hi);
    Ok((classical, (sol.xi() - classical).abs()))
}

/// Aggregates the four residual checks against the solution's own boundary
/// condition.
pub fn full_report(sol: &MushySolution, grid: &GridSpec) -> Result<VerificationReport> {
    Ok(VerificationReport {
        max_pde_residual: residual_heat_equation(sol, grid),
        max_stefan_residual: residual_stefan(sol, &grid.t_values),
        max_width_residual: residual_mushy_width(sol, &grid.t_values),
        max_bc_residual: residual_boundary(sol, sol.bc(), &grid.t_values)?,
        grid_spec: grid.describe(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Material;

    const ONES: Material = Material::new(1.0, 1.0, 1.0, 1.0);
    const ZONE: MushyZone = MushyZone::new(0.1, 0.5);

    fn goldens() -> Vec<MushySolution> {
        vec![
            solver::solve_p1(&ONES, &ZONE, 10.0, 1.0).unwrap(),
            solver::solve_p2(&ONES, &ZONE, 1.0).unwrap(),
            solver::solve_p3(&ONES, &ZONE, 2.0).unwrap(),
        ]
    }

    #[test]
    fn heat_equation_residual_is_truncation_noise() {
        let grid = GridSpec::default();
        for sol in goldens() {
            let r = residual_heat_equation(&sol, &grid);
            assert!(r <= PDE_RESIDUAL_LIMIT, "{}: residual {r:e}", sol.kind());
        }
    }

    #[test]
    fn heat_equation_residual_quarters_when_step_halves() {
        let grid = GridSpec::default();
        let halved = grid.with_fd_step_scale(grid.fd_step_scale / 2.0).unwrap();
        for sol in goldens() {
            let coarse = residual_heat_equation(&sol, &grid);
            let fine = residual_heat_equation(&sol, &halved);
            let ratio = coarse / fine;
            assert!(
                (3.5..=4.5).contains(&ratio),
                "{}: ratio {ratio}",
                sol.kind()
            );
        }
    }

    #[test]
    fn heat_equation_residual_detects_corruption() {
        let grid = GridSpec::default();
        for sol in goldens() {
            let clean = residual_heat_equation(&sol, &grid);
            // scaling coeff_erf leaves an erf profile: still an exact solution
            // of the heat equation, so the PDE residual alone must NOT react
            let corrupt = residual_heat_equation(&sol.with_coeff_erf_scaled(1.01), &grid);
            assert!(corrupt <= clean * 2.0);
            // ... but the front balance reacts strongly (sensitivity lives there)
            let stefan_clean = residual_stefan(&sol, &grid.t_values);
            let stefan_corrupt =
                residual_stefan(&sol.with_coeff_erf_scaled(1.01), &grid.t_values);
            assert!(stefan_corrupt >= 10.0 * stefan_clean.max(1e-15));
        }
    }

    #[test]
    fn stefan_residual_is_closed_form_identity() {
        let times = [0.01, 0.1, 1.0, 10.0, 100.0];
        for sol in goldens() {
            let r = residual_stefan(&sol, &times);
            assert!(r <= STEFAN_RESIDUAL_LIMIT, "{}: {r:e}", sol.kind());
        }
    }

    #[test]
    fn stefan_residual_covers_classical_condition() {
        // near-unit latent fraction with zero-width zone: the balance reduces
        // to the classical single-front condition and still closes
        let z = MushyZone::new(0.0, 1.0 - 1e-9);
        let sol = solver::solve_p2(&ONES, &z, 1.0).unwrap();
        assert!(residual_stefan(&sol, &[0.1, 1.0, 10.0]) <= STEFAN_RESIDUAL_LIMIT);
    }

    #[test]
    fn width_residual_is_time_independent_identity() {
        let times = [0.01, 1.0, 100.0];
        for sol in goldens() {
            let r = residual_mushy_width(&sol, &times).unwrap();
            assert!(r <= WIDTH_RESIDUAL_LIMIT, "{}: {r:e}", sol.kind());
            // identical per-time values across three decades
            let per_t: Vec<f64> = times
                .iter()
                .map(|&t| residual_mushy_width(&sol, &[t]).unwrap())
                .collect();
            for w in per_t.windows(2) {
                assert!((w[0] - w[1]).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn width_residual_is_not_applicable_in_classical_limit() {
        let z = MushyZone::new(0.0, 0.5);
        let sol = solver::solve_p2(&ONES, &z, 1.0).unwrap();
        assert_eq!(residual_mushy_width(&sol, &[1.0]), None);
    }

    #[test]
    fn boundary_residuals_close_for_native_conditions() {
        let times = [0.01, 0.1, 1.0, 10.0, 100.0];
        for sol in goldens() {
            let r = residual_boundary(&sol, sol.bc(), &times).unwrap();
            assert!(r <= BOUNDARY_RESIDUAL_LIMIT, "{}: {r:e}", sol.kind());
        }
    }

    #[test]
    fn convective_solution_meets_induced_temperature_condition() {
        let sol = solver::solve_p1(&ONES, &ZONE, 10.0, 1.0).unwrap();
        let d0 = crate::equivalence::d0_from_convective(&sol).unwrap();
        let r = residual_boundary(
            &sol,
            &BoundaryCondition::Temperature { d0 },
            &[0.1, 1.0, 10.0],
        )
        .unwrap();
        assert!(r <= BOUNDARY_RESIDUAL_LIMIT, "{r:e}");
    }

    #[test]
    fn boundary_residual_rejects_mismatched_variants() {
        let sol = solver::solve_p1(&ONES, &ZONE, 10.0, 1.0).unwrap();
        assert!(matches!(
            residual_boundary(&sol, &BoundaryCondition::Flux { q0: 2.0 }, &[1.0]),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn classical_limit_matches_bisected_front() {
        let (xi, gap) = classical_limit_check(&ONES, 1.0).unwrap();
        assert!((xi - 0.620_062_633_313_595_6).abs() <= 1e-12);
        assert!(gap <= 1e-10);
        for ste in [0.1, 10.0] {
            let (_, gap) = classical_limit_check(&ONES, ste).unwrap();
            assert!(gap <= 1e-10, "ste {ste}: gap {gap:e}");
        }
    }

    #[test]
    fn classical_front_obeys_small_stefan_asymptotics() {
        let ste = 1e-6;
        let (xi, _) = classical_limit_check(&ONES, ste).unwrap();
        let leading = (ste / 2.0).sqrt();
        assert!((xi - leading).abs() <= 0.05 * leading);
    }

    #[test]
    fn full_report_aggregates_and_passes_on_goldens() {
        let grid = GridSpec::default();
        for sol in goldens() {
            let report = full_report(&sol, &grid).unwrap();
            assert!(report.passes(), "{}: {report:?}", sol.kind());
        }
    }

    #[test]
    fn full_report_flags_corrupted_solutions() {
        let grid = GridSpec::default();
        for sol in goldens() {
            let report = full_report(&sol.with_coeff_erf_scaled(1.01), &grid).unwrap();
            assert!(!report.passes(), "{}: {report:?}", sol.kind());
        }
    }

    #[test]
    fn full_report_handles_classical_limit() {
        let z = MushyZone::new(0.0, 0.5);
        let sol = solver::solve_p2(&ONES, &z, 1.0).unwrap();
        let report = full_report(&sol, &GridSpec::default()).unwrap();
        assert_eq!(report.max_width_residual, None);
        assert!(report.passes());
    }

    #[test]
    fn grid_spec_rejects_bad_inputs() {
        assert!(GridSpec::new(vec![], vec![0.5], 1e-3).is_err());
        assert!(GridSpec::new(vec![1.0, 0.5], vec![0.5], 1e-3).is_err());
        assert!(GridSpec::new(vec![-1.0], vec![0.5], 1e-3).is_err());
        assert!(GridSpec::new(vec![1.0], vec![0.5, 1.5], 1e-3).is_err());
        assert!(GridSpec::new(vec![1.0], vec![0.5], 0.0).is_err());
        assert!(GridSpec::new(vec![1.0], vec![0.5], 0.5).is_err());
        assert!(GridSpec::new(vec![1.0], vec![0.5], 1e-3).is_ok());
    }
}
