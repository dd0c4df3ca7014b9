//! Invariant calculus for wildly ramified data of prime-power degree.
//!
//! A datum pairs a totally wild ramification tower with a Swan exponent
//! prime to `p`. From it the crate derives the wild exponent, the intrinsic
//! level and its halves, the axis crossing, the standard-case classification
//! (`A`, `B`, `C`, or not standard), and the star-exceptional flag; computes
//! the Herbrand function of the datum at any covered twist level; predicts
//! how the level moves under parameter variation; finds the standardizing
//! raises of the wild exponent; and converts between the two ultrametric
//! parameters through the bi-Herbrand change of variables.

mod datum;
mod error;
mod herbrand_fn;
mod level;
mod ultra;

pub use datum::{classify, CarayolDatum, DatumInvariants, StandardCase};
pub use error::CarayolError;
pub use herbrand_fn::herbrand_of_datum;
pub use level::{
    level_range, standardize_target, vary_parameter, LevelOutcome, LevelRange, StandardizeOutcome,
};
pub use ultra::{ultrametric_convert, ConversionReport, EpsilonCondition, UltraDirection};
