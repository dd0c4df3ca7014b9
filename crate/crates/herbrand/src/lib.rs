//! Herbrand functions of totally ramified towers.
//!
//! A tower is described by its ramification jumps in base-field coordinates
//! and the log-degree of each layer. From that data this crate derives the
//! classical invariants used throughout the workspace: the Herbrand function
//! `ψ` and its inverse, the wild exponent `w` (height of the asymptote
//! `ψ(x) = p^r·x − w`), the largest jump, tame base change, norm behaviour
//! of conductor exponents, and the Swan conductor of induced
//! representations. [`elementary_resolution`] inverts the construction,
//! recovering the tower from any Herbrand-shaped piecewise-linear function.

mod error;
mod resolve;
mod swan;
mod tower;

pub use error::{ExtendedRat, TowerError};
pub use resolve::elementary_resolution;
pub use swan::{norm_swan, swan_induced};
pub use tower::{Layer, RamTower};
