//! Exact rational piecewise-linear function algebra.
//!
//! This crate provides the arithmetic substrate for ramification-theoretic
//! computations: continuous, strictly increasing piecewise-linear functions
//! with exact rational breaks and slopes, together with the operations the
//! rest of the workspace composes into Herbrand-function calculus —
//! evaluation, composition, inversion, pointwise maxima, graph reflection
//! across anti-diagonals `x + y = s`, and jump (slope-discontinuity) tables.
//!
//! No floating point is involved anywhere: all comparisons are exact, and
//! fractions stay reduced with positive denominators.

mod error;
mod fun;
mod jump;
mod rat;

pub use error::PlError;
pub use fun::PLFun;
pub use jump::{JumpEntry, JumpTable};
pub use rat::{
    floor_int, int_pow, is_half_integer, is_integer, is_prime, log_p, parse_rat, rat, rat_pow,
    ratio, ParseRatError, Rat,
};
