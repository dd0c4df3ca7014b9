//! Ramification profiles of wildly ramified data and their layer calculus.
//!
//! A profile packages a prime `p`, a degree exponent `r`, a Swan exponent
//! prime to `p`, and the symmetric convex function the datum induces on
//! `[0, sw/p^r]`. The crate validates profiles check by check, decomposes
//! them at the axis crossing into a tower and a core, tabulates restriction
//! dimensions from the decomposition function, peels ramification layers off
//! (and puts them back, exactly), and evaluates the closed forms available
//! for single-jump profiles.

mod analyze;
mod error;
mod layers;
mod profile;
mod restrict;
mod singular;

pub use analyze::{analyze_profile, DecompositionReport};
pub use error::GaloisError;
pub use layers::{ascend_once, descend_once, Descent, Inner};
pub use profile::GaloisProfile;
pub use restrict::{restriction_table, RestrictionRow, RestrictionTable, RowPosition};
pub use singular::{h_singular_check, HSingularReport};
