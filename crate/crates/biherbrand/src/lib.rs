//! Symmetric bi-Herbrand functions.
//!
//! A totally wild ramification tower of degree `p^r` with Herbrand function
//! `psi`, together with a Swan exponent `m` prime to `p`, determines a
//! convex, symmetric piecewise-linear function on `[0, m/p^r]`: the pointwise
//! maximum of the scaled graph `p^{-r} psi` and its mirror image across the
//! line `x + y = m/p^r`. This crate builds that function exactly, exposes the
//! companion structure and decomposition functions, verifies the symmetry and
//! jump laws, and runs a small search scenario over two-jump towers.

mod bundle;
mod checks;
mod error;
mod scenario;
mod structure;

pub use bundle::{BiBundle, BiSpec};
pub use checks::{carayol_jump_checks, verify_symmetry, CheckReport, NamedCheck, SymmetryReport};
pub use error::BiError;
pub use scenario::{scenario_97, CrossingReading, ReadingReport, ScenarioReport};
pub use structure::{decomposition_function, structure_function};
