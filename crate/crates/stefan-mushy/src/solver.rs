//! Closed-form solvers for the four problem variants: existence thresholds,
//! the monotone front equations, and the profile coefficients.
//!
//! Each front equation is oriented as a strictly increasing objective (the
//! growing side minus the falling or constant side) whose sign change is
//! found by the bracketing root finder from [`crate::numerics`]. Downstream
//! quantities (mu and the profile coefficients) are computed from the
//! converged root with no further refinement, so the root is the single
//! source of truth.

use std::f64::consts::PI;

use crate::model::{self, BoundaryCondition, Material, MushySolution, MushyZone, ProblemKind};
use crate::numerics::{self, Bracket};
use crate::{Error, Result};

/// Convergence tolerance on the bracket width around the dimensionless front
/// coefficient.
pub const XI_TOLERANCE: f64 = 1e-13;

/// Overflow guard on the front coefficient: the solutions carry e^(xi^2) and
/// erf(25) is already 1 to machine precision, so anything beyond this is
/// physically unreachable and treated as an error.
pub const XI_MAX: f64 = 25.0;

/// Starting bracket for every front equation; physical roots are O(1).
const INITIAL_BRACKET: Bracket = Bracket {
    lo: 1e-12,
    hi: 1.0,
};

fn mushy_threshold_term(m: &Material, z: &MushyZone) -> f64 {
    (z.gamma * (1.0 - z.epsilon) * m.rho * m.latent_heat * m.k / 2.0).sqrt()
}

/// Critical convective coefficient: the transfer coefficient must exceed this
/// for the mushy solution to exist. Vanishes with gamma.
pub fn critical_h0(m: &Material, z: &MushyZone, d_inf: f64) -> f64 {
    mushy_threshold_term(m, z) / d_inf
}

/// Critical flux coefficient; equals `d_inf * critical_h0` for any data.
pub fn critical_q0(m: &Material, z: &MushyZone) -> f64 {
    mushy_threshold_term(m, z)
}

/// Decreasing factor of the convective front equation:
/// F(x) = e^(-x^2) / (k/(h0 sqrt(pi alpha)) + erf(x)).
/// Decays from h0 sqrt(pi alpha)/k at 0+ to 0 at infinity.
pub fn f_conv(x: f64, h0: f64, m: &Material) -> f64 {
    let kappa = m.k / (h0 * (PI * m.alpha()).sqrt());
    (-x * x).exp() / (kappa + numerics::erf(x))
}

/// Increasing factor of the convective front equation:
/// G(x) = x + gamma (1 - epsilon) sqrt(pi) / (2 d_inf F(x)).
/// Grows from (1 - epsilon) gamma k / (2 d_inf h0 sqrt(alpha)) at 0+.
pub fn g_conv(x: f64, h0: f64, d_inf: f64, m: &Material, z: &MushyZone) -> f64 {
    let c = z.gamma * (1.0 - z.epsilon) * PI.sqrt() / (2.0 * d_inf);
    if c == 0.0 {
        // classical limit: avoid 0/0 where F underflows
        return x;
    }
    x + c / f_conv(x, h0, m)
}

/// Large-h0 limit of the decreasing factor: e^(-x^2) / erf(x). Diverges at 0+.
pub fn f_limit(x: f64) -> f64 {
    (-x * x).exp() / numerics::erf(x)
}

/// Reciprocal of `f_limit`, the growing kernel of the temperature-data and
/// limit front equations.
fn erf_exp(x: f64) -> f64 {
    numerics::erf(x) * (x * x).exp()
}

/// Increasing left side of the temperature-data front equation, solved
/// against d0 c / (latent sqrt(pi)). Rises from 0 at 0+ to infinity, so a
/// root exists for every d0 > 0.
pub fn g_temp(x: f64, d0: f64, z: &MushyZone) -> f64 {
    let c = z.gamma * (1.0 - z.epsilon) * PI.sqrt() / (2.0 * d0);
    let ee = erf_exp(x);
    if c == 0.0 {
        x * ee
    } else {
        (x + c * ee) * ee
    }
}

/// Increasing left side of the flux front equation, solved against
/// q0 / (rho latent sqrt(alpha)). Rises from
/// gamma (1 - epsilon) k / (2 q0 sqrt(alpha)) at 0+.
pub fn g_flux(x: f64, q0: f64, m: &Material, z: &MushyZone) -> f64 {
    let c = z.gamma * (1.0 - z.epsilon) * m.k / (2.0 * q0 * m.alpha().sqrt());
    let e2 = (x * x).exp();
    if c == 0.0 {
        x * e2
    } else {
        (x + c * e2) * e2
    }
}

fn guard_xi(xi: f64) -> Result<f64> {
    if xi > XI_MAX {
        Err(Error::FrontCoefficientOverflow { xi, limit: XI_MAX })
    } else {
        Ok(xi)
    }
}

/// Solves the convective-data problem. Fails with [`Error::Subcritical`]
/// (carrying both h0 and the threshold) iff h0 <= critical_h0; otherwise the
/// front equation has exactly one root.
pub fn solve_p1(m: &Material, z: &MushyZone, h0: f64, d_inf: f64) -> Result<MushySolution> {
    let bc = BoundaryCondition::Convective { h0, d_inf };
    model::validate(m, z, &bc)?;
    let threshold = critical_h0(m, z, d_inf);
    if h0 <= threshold {
        return Err(Error::Subcritical {
            coefficient: "h0",
            supplied: h0,
            threshold,
        });
    }
    let scale = d_inf * m.c / (m.latent_heat * PI.sqrt());
    let xi = numerics::find_root_increasing(
        |x| g_conv(x, h0, d_inf, m, z) - scale * f_conv(x, h0, m),
        INITIAL_BRACKET,
        XI_TOLERANCE,
    )?;
    let xi = guard_xi(xi)?;

    let kappa = m.k / (h0 * (PI * m.alpha()).sqrt());
    let erf_xi = numerics::erf(xi);
    let coeff_erf = d_inf / (kappa + erf_xi);
    let coeff_const = -coeff_erf * erf_xi;
    let mu = xi + z.gamma * PI.sqrt() / (2.0 * d_inf) * (xi * xi).exp() * (kappa + erf_xi);
    MushySolution::new(ProblemKind::P1, xi, mu, coeff_const, coeff_erf, *m, *z, bc)
}

fn solve_temperature_like(
    m: &Material,
    z: &MushyZone,
    d0: f64,
    kind: ProblemKind,
) -> Result<MushySolution> {
    let bc = BoundaryCondition::Temperature { d0 };
    model::validate(m, z, &bc)?;
    let scale = d0 * m.c / (m.latent_heat * PI.sqrt());
    let xi = numerics::find_root_increasing(
        |x| g_temp(x, d0, z) - scale,
        INITIAL_BRACKET,
        XI_TOLERANCE,
    )?;
    let xi = guard_xi(xi)?;

    let erf_xi = numerics::erf(xi);
    let coeff_erf = d0 / erf_xi;
    let coeff_const = -coeff_erf * erf_xi;
    let mu = xi + z.gamma * PI.sqrt() / (2.0 * d0) * (xi * xi).exp() * erf_xi;
    MushySolution::new(kind, xi, mu, coeff_const, coeff_erf, *m, *z, bc)
}

/// Solves the temperature-data problem. A root exists for every d0 > 0 (the
/// objective climbs from 0 to infinity); `NoRoot` is kept as a defensive
/// error for a failed bracket expansion.
pub fn solve_p2(m: &Material, z: &MushyZone, d0: f64) -> Result<MushySolution> {
    solve_temperature_like(m, z, d0, ProblemKind::P2)
}

/// Solves the h0 -> infinity limit of the convective problem: identical to
/// the temperature-data problem with d0 = d_inf, tagged with its own kind.
pub fn solve_p1_limit(m: &Material, z: &MushyZone, d_inf: f64) -> Result<MushySolution> {
    solve_temperature_like(m, z, d_inf, ProblemKind::P1Limit)
}

/// Solves the flux-data problem. Fails with [`Error::Subcritical`] iff
/// q0 <= critical_q0.
pub fn solve_p3(m: &Material, z: &MushyZone, q0: f64) -> Result<MushySolution> {
    let bc = BoundaryCondition::Flux { q0 };
    model::validate(m, z, &bc)?;
    let threshold = critical_q0(m, z);
    if q0 <= threshold {
        return Err(Error::Subcritical {
            coefficient: "q0",
            supplied: q0,
            threshold,
        });
    }
    let alpha = m.alpha();
    let scale = q0 / (m.rho * m.latent_heat * alpha.sqrt());
    let omega = numerics::find_root_increasing(
        |x| g_flux(x, q0, m, z) - scale,
        INITIAL_BRACKET,
        XI_TOLERANCE,
    )?;
    let omega = guard_xi(omega)?;

    let coeff_erf = q0 * (PI * alpha).sqrt() / m.k;
    let coeff_const = -coeff_erf * numerics::erf(omega);
    let nu = omega + z.gamma * m.k / (2.0 * q0 * alpha.sqrt()) * (omega * omega).exp();
    MushySolution::new(
        ProblemKind::P3,
        omega,
        nu,
        coeff_const,
        coeff_erf,
        *m,
        *z,
        bc,
    )
}

/// Dispatches on the boundary-condition variant.
pub fn solve(m: &Material, z: &MushyZone, bc: &BoundaryCondition) -> Result<MushySolution> {
    match *bc {
        BoundaryCondition::Convective { h0, d_inf } => solve_p1(m, z, h0, d_inf),
        BoundaryCondition::Flux { q0 } => solve_p3(m, z, q0),
        BoundaryCondition::Temperature { d0 } => solve_p2(m, z, d0),
    }
}
