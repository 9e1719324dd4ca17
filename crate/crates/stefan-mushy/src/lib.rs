//! Explicit solutions of the one-phase Lamé-Clapeyron-Stefan problem with an
//! isothermal mushy zone (Solomon-Wilson-Alexiades model) on a semi-infinite
//! domain.
//!
//! A solidification front driven from the fixed face `x = 0` splits the
//! material into a solid region, a mushy region between two free boundaries
//! `s(t) < r(t)`, and liquid at the melting temperature. Both fronts grow like
//! `sqrt(t)` and the solid temperature is an error-function profile, so the
//! whole solution is characterized by a pair of dimensionless coefficients
//! `(xi, mu)` obtained from one monotone transcendental equation per boundary
//! condition.
//!
//! Supported boundary data at `x = 0`:
//!
//! - convective (Robin) data with transfer coefficient `h0/sqrt(t)` and bulk
//!   temperature `-d_inf` — solvable iff `h0` exceeds a closed-form threshold,
//! - prescribed heat flux `q0/sqrt(t)` — solvable iff `q0` exceeds the
//!   matching threshold,
//! - prescribed temperature `-d0` — always solvable.
//!
//! The crate also provides the maps sending convective or flux data to the
//! temperature datum that reproduces the identical solution
//! ([`equivalence`]), the large-`h0` convergence study ([`asymptotics`]), and
//! an independent residual checker for every governing condition ([`verify`]).
//!
//! Batch-style operations (parameter sweeps, per-`h0` solves, residual grids)
//! run data-parallel on rayon when the default `parallel` feature is enabled
//! and fall back to plain iterators without it.

pub mod asymptotics;
pub mod cli;
pub mod equivalence;
mod error;
pub mod model;
pub mod numerics;
mod parallel;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use model::{BoundaryCondition, Material, MushySolution, MushyZone, ProblemKind};
