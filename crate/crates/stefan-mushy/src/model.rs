//! Domain types: material constants, mushy-zone parameters, boundary data,
//! and the closed-form similarity solution object they produce.
//!
//! SI units throughout; temperatures are stored as the positive magnitudes
//! `d0`, `d_inf` of the (negative) face and bulk temperatures, matching the
//! sign convention of the model. Evaluated temperatures are negative.

use std::fmt;

use thiserror::Error;

use crate::numerics;
use crate::{Error, Result};

/// Physical constants of the solid phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Material {
    /// Thermal conductivity, W/(m °C).
    pub k: f64,
    /// Mass density, kg/m^3.
    pub rho: f64,
    /// Specific heat, J/(kg °C).
    pub c: f64,
    /// Latent heat of fusion per unit mass, J/kg.
    pub latent_heat: f64,
}

impl Material {
    pub const fn new(k: f64, rho: f64, c: f64, latent_heat: f64) -> Self {
        Self {
            k,
            rho,
            c,
            latent_heat,
        }
    }

    /// Thermal diffusivity k/(rho c), m^2/s.
    pub fn alpha(&self) -> f64 {
        self.k / (self.rho * self.c)
    }
}

/// The two coefficients characterizing the isothermal mushy region: `gamma`
/// (°C) couples the region width to the solid-side temperature gradient, and
/// `epsilon` in (0, 1) is the latent-heat fraction released at the solid
/// front. `gamma = 0` is accepted only as the classical (zero-width) limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MushyZone {
    pub gamma: f64,
    pub epsilon: f64,
}

impl MushyZone {
    pub const fn new(gamma: f64, epsilon: f64) -> Self {
        Self { gamma, epsilon }
    }

    /// True for the zero-width (classical) limit.
    pub fn is_classical_limit(&self) -> bool {
        self.gamma == 0.0
    }
}

/// Data imposed at the fixed face x = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryCondition {
    /// Robin data: transfer coefficient h0/sqrt(t) toward bulk temperature
    /// -d_inf. h0 in kg/(°C s^(5/2)), d_inf in °C (positive magnitude).
    Convective { h0: f64, d_inf: f64 },
    /// Prescribed flux q0/sqrt(t); q0 in kg/s^(5/2).
    Flux { q0: f64 },
    /// Prescribed face temperature -d0; d0 in °C (positive magnitude).
    Temperature { d0: f64 },
}

impl BoundaryCondition {
    pub(crate) fn variant_name(&self) -> &'static str {
        match self {
            BoundaryCondition::Convective { .. } => "convective",
            BoundaryCondition::Flux { .. } => "flux",
            BoundaryCondition::Temperature { .. } => "temperature",
        }
    }
}

/// Which problem produced a solution. The limit problem (convective data with
/// h0 -> infinity) is its own tag because it stores the bulk temperature as a
/// temperature condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    P1,
    P2,
    P3,
    P1Limit,
}

impl ProblemKind {
    pub(crate) fn name(&self) -> &'static str {
        match self {
            ProblemKind::P1 => "p1",
            ProblemKind::P2 => "p2",
            ProblemKind::P3 => "p3",
            ProblemKind::P1Limit => "p1-limit",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First violated input invariant, by name.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum ValidationError {
    #[error("k must be positive (k = {0})")]
    NonPositiveConductivity(f64),
    #[error("rho must be positive (rho = {0})")]
    NonPositiveDensity(f64),
    #[error("c must be positive (c = {0})")]
    NonPositiveSpecificHeat(f64),
    #[error("latent heat must be positive (latent_heat = {0})")]
    NonPositiveLatentHeat(f64),
    #[error("gamma must be non-negative (gamma = {0})")]
    NegativeGamma(f64),
    #[error("epsilon out of (0,1) (epsilon = {0})")]
    EpsilonOutOfRange(f64),
    #[error("h0 must be positive (h0 = {0})")]
    NonPositiveH0(f64),
    #[error("d_inf must be positive (d_inf = {0})")]
    NonPositiveDInf(f64),
    #[error("q0 must be positive (q0 = {0})")]
    NonPositiveQ0(f64),
    #[error("d0 must be positive (d0 = {0})")]
    NonPositiveD0(f64),
}

/// True for finite, strictly positive values; NaN and infinities fail.
fn positive(v: f64) -> bool {
    v.is_finite() && v > 0.0
}

/// Checks every input invariant and reports the first violation. NaN and
/// infinite values fail every check.
pub fn validate(
    m: &Material,
    z: &MushyZone,
    bc: &BoundaryCondition,
) -> std::result::Result<(), ValidationError> {
    if !positive(m.k) {
        return Err(ValidationError::NonPositiveConductivity(m.k));
    }
    if !positive(m.rho) {
        return Err(ValidationError::NonPositiveDensity(m.rho));
    }
    if !positive(m.c) {
        return Err(ValidationError::NonPositiveSpecificHeat(m.c));
    }
    if !positive(m.latent_heat) {
        return Err(ValidationError::NonPositiveLatentHeat(m.latent_heat));
    }
    if !(z.gamma == 0.0 || positive(z.gamma)) {
        return Err(ValidationError::NegativeGamma(z.gamma));
    }
    if !(positive(z.epsilon) && z.epsilon < 1.0) {
        return Err(ValidationError::EpsilonOutOfRange(z.epsilon));
    }
    match *bc {
        BoundaryCondition::Convective { h0, d_inf } => {
            if !positive(h0) {
                return Err(ValidationError::NonPositiveH0(h0));
            }
            if !positive(d_inf) {
                return Err(ValidationError::NonPositiveDInf(d_inf));
            }
        }
        BoundaryCondition::Flux { q0 } => {
            if !positive(q0) {
                return Err(ValidationError::NonPositiveQ0(q0));
            }
        }
        BoundaryCondition::Temperature { d0 } => {
            if !positive(d0) {
                return Err(ValidationError::NonPositiveD0(d0));
            }
        }
    }
    Ok(())
}

/// Relative tolerance on the front identity coeff_const + coeff_erf erf(xi) = 0
/// at construction; the identity is exact in real arithmetic, so anything
/// beyond a few ulps of rounding indicates a solver defect.
const FRONT_IDENTITY_RTOL: f64 = 1e-9;

/// The closed-form solution of one problem: the temperature profile
/// `T(x,t) = coeff_const + coeff_erf erf(x / (2 sqrt(alpha t)))` on the solid
/// region together with the front coefficients `xi` (solid-mush) and `mu`
/// (liquid-mush), so that s(t) = 2 xi sqrt(alpha t) and
/// r(t) = 2 mu sqrt(alpha t).
///
/// The same record stores all four problem variants; `kind` preserves the
/// provenance and pins which boundary variant is carried.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MushySolution {
    kind: ProblemKind,
    xi: f64,
    mu: f64,
    coeff_const: f64,
    coeff_erf: f64,
    material: Material,
    mushy: MushyZone,
    bc: BoundaryCondition,
}

impl MushySolution {
    /// Construction checks every structural invariant; solvers are the only
    /// callers, so a violation surfaces a solver defect, not bad user data.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        kind: ProblemKind,
        xi: f64,
        mu: f64,
        coeff_const: f64,
        coeff_erf: f64,
        material: Material,
        mushy: MushyZone,
        bc: BoundaryCondition,
    ) -> Result<Self> {
        let fail = |reason: String| Error::InvalidSolution { reason };
        if !positive(xi) {
            return Err(fail(format!("xi must be positive and finite (xi = {xi})")));
        }
        if !mu.is_finite() {
            return Err(fail(format!("mu must be finite (mu = {mu})")));
        }
        if mushy.gamma == 0.0 {
            if mu != xi {
                return Err(fail(format!(
                    "classical limit requires mu = xi (xi = {xi}, mu = {mu})"
                )));
            }
        } else if mu <= xi {
            return Err(fail(format!(
                "mushy width must be positive (xi = {xi}, mu = {mu})"
            )));
        }
        if coeff_const >= 0.0 || coeff_erf < 0.0 || coeff_const.is_nan() || coeff_erf.is_nan() {
            return Err(fail(format!(
                "profile coefficients must satisfy coeff_const < 0 <= coeff_erf \
                 (got {coeff_const}, {coeff_erf})"
            )));
        }
        let front = coeff_const + coeff_erf * numerics::erf(xi);
        if front.abs() > FRONT_IDENTITY_RTOL * coeff_const.abs() {
            return Err(fail(format!(
                "front temperature does not vanish: residual {front:e}"
            )));
        }
        let kind_ok = matches!(
            (kind, &bc),
            (ProblemKind::P1, BoundaryCondition::Convective { .. })
                | (ProblemKind::P2, BoundaryCondition::Temperature { .. })
                | (ProblemKind::P1Limit, BoundaryCondition::Temperature { .. })
                | (ProblemKind::P3, BoundaryCondition::Flux { .. })
        );
        if !kind_ok {
            return Err(fail(format!(
                "kind {kind} cannot carry a {} boundary condition",
                bc.variant_name()
            )));
        }
        Ok(Self {
            kind,
            xi,
            mu,
            coeff_const,
            coeff_erf,
            material,
            mushy,
            bc,
        })
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    /// Dimensionless solid-mush front coefficient (xi, xi_inf, or omega,
    /// depending on `kind`).
    pub fn xi(&self) -> f64 {
        self.xi
    }

    /// Dimensionless liquid-mush front coefficient (mu, mu_inf, or nu).
    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Constant term of the temperature profile, °C. Equals the fixed-face
    /// temperature T(0, t), which is time-independent.
    pub fn coeff_const(&self) -> f64 {
        self.coeff_const
    }

    /// erf-term coefficient of the temperature profile, °C.
    pub fn coeff_erf(&self) -> f64 {
        self.coeff_erf
    }

    pub fn material(&self) -> &Material {
        &self.material
    }

    pub fn mushy(&self) -> &MushyZone {
        &self.mushy
    }

    pub fn bc(&self) -> &BoundaryCondition {
        &self.bc
    }

    pub fn alpha(&self) -> f64 {
        self.material.alpha()
    }

    /// Solid-mush front position s(t) = 2 xi sqrt(alpha t), m.
    pub fn front_s(&self, t: f64) -> f64 {
        assert!(t >= 0.0, "time must be non-negative (t = {t})");
        2.0 * self.xi * (self.alpha() * t).sqrt()
    }

    /// Liquid-mush front position r(t) = 2 mu sqrt(alpha t), m.
    pub fn front_r(&self, t: f64) -> f64 {
        assert!(t >= 0.0, "time must be non-negative (t = {t})");
        2.0 * self.mu * (self.alpha() * t).sqrt()
    }

    /// Solid temperature at (x, t), °C. Defined for t > 0 on 0 <= x <= s(t);
    /// the similarity variable is singular at t = 0.
    pub fn temperature(&self, x: f64, t: f64) -> Result<f64> {
        if !positive(t) || x.is_nan() || x < 0.0 || x > self.front_s(t) {
            return Err(Error::OutOfDomain { x, t });
        }
        Ok(self.profile_value(x, t))
    }

    /// Fixed-face temperature T(0, t), °C; constant in time.
    pub fn face_temperature(&self) -> f64 {
        self.coeff_const
    }

    /// Raw profile evaluation without domain checks; used by the residual
    /// checker whose finite-difference stencils stay inside the domain by
    /// construction.
    pub(crate) fn profile_value(&self, x: f64, t: f64) -> f64 {
        let eta = x / (2.0 * (self.alpha() * t).sqrt());
        self.coeff_const + self.coeff_erf * numerics::erf(eta)
    }

    /// Analytic x-derivative of the profile at the solid-mush front,
    /// coeff_erf e^(-xi^2) / sqrt(pi alpha t).
    pub(crate) fn gradient_at_front(&self, t: f64) -> f64 {
        self.coeff_erf * (-self.xi * self.xi).exp()
            / (std::f64::consts::PI * self.alpha() * t).sqrt()
    }

    /// Analytic x-derivative of the profile at the fixed face,
    /// coeff_erf / sqrt(pi alpha t).
    pub(crate) fn gradient_at_face(&self, t: f64) -> f64 {
        self.coeff_erf / (std::f64::consts::PI * self.alpha() * t).sqrt()
    }

    /// Copy with `coeff_erf` multiplied by `factor`, skipping the
    /// construction checks on purpose: produces a deliberately inconsistent
    /// solution for probing the sensitivity of the verification layer.
    pub fn with_coeff_erf_scaled(&self, factor: f64) -> Self {
        Self {
            coeff_erf: self.coeff_erf * factor,
            ..*self
        }
    }
}
