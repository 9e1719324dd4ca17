use thiserror::Error;

use crate::model::ValidationError;
use crate::numerics::NoSignChange;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type. Every failure carries the values that triggered it
/// so callers (and the CLI diagnostics) can name the violated condition.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Validation(#[from] ValidationError),

    /// Boundary coefficient at or below its existence threshold: the mushy
    /// solution does not exist and no root search is attempted.
    #[error("subcritical {coefficient}: {supplied} <= {threshold} = critical {coefficient}")]
    Subcritical {
        coefficient: &'static str,
        supplied: f64,
        threshold: f64,
    },

    /// Bracket expansion never straddled a root of the front equation.
    #[error("no root: {0}")]
    NoRoot(#[from] NoSignChange),

    /// The front coefficient exceeded the e^(xi^2) overflow guard; physically
    /// unreachable for sane data.
    #[error("front coefficient xi = {xi} exceeds the overflow guard {limit}")]
    FrontCoefficientOverflow { xi: f64, limit: f64 },

    /// Temperature evaluation outside the solid region 0 <= x <= s(t), t > 0.
    #[error("point (x = {x}, t = {t}) lies outside the solid region")]
    OutOfDomain { x: f64, t: f64 },

    /// Boundary condition variant incompatible with the solution kind.
    #[error("boundary condition `{bc}` incompatible with a {kind} solution")]
    KindMismatch {
        kind: &'static str,
        bc: &'static str,
    },

    /// The bound with a bulk temperature requires d_inf > d0.
    #[error("degenerate bound: requires d_inf > d0 (d_inf = {d_inf}, d0 = {d0})")]
    DegenerateBound { d_inf: f64, d0: f64 },

    /// A constructed solution violated one of its structural invariants;
    /// indicates a solver defect rather than bad user data.
    #[error("invalid solution: {reason}")]
    InvalidSolution { reason: String },

    /// A sweep or study was asked for with unusable inputs.
    #[error("invalid sweep: {reason}")]
    InvalidSweep { reason: String },
}
