//! Error type for the piecewise-linear algebra.

use crate::rat::Rat;

/// Errors produced by construction of and operations on piecewise-linear
/// functions.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PlError {
    /// A slope is zero or negative; functions here are strictly increasing.
    #[error("slope must be positive, found {slope}")]
    NonPositiveSlope {
        /// The offending slope.
        slope: Rat,
    },

    /// Break abscissae must be positive, strictly increasing and lie strictly
    /// inside the domain.
    #[error("invalid break placement: {detail}")]
    BadBreaks {
        /// Human-readable description of the violation.
        detail: String,
    },

    /// The declared domain end is not positive or does not dominate the
    /// breaks.
    #[error("invalid domain end: {detail}")]
    BadDomainEnd {
        /// Human-readable description of the violation.
        detail: String,
    },

    /// An evaluation point lies outside the function's domain.
    #[error("point {x} is outside the domain")]
    OutOfDomain {
        /// The offending point.
        x: Rat,
    },

    /// A target value lies outside the function's range, so inverse
    /// evaluation has no solution.
    #[error("value {y} is outside the range")]
    OutOfRange {
        /// The offending value.
        y: Rat,
    },

    /// Two functions that must share a domain do not.
    #[error("domain mismatch: {detail}")]
    DomainMismatch {
        /// Human-readable description of the mismatch.
        detail: String,
    },

    /// Inversion is only representable for functions vanishing at zero: the
    /// inverse of f with f(0) = v has domain starting at v, and domains here
    /// always start at 0.
    #[error("cannot invert a function with value {value_at_zero} at 0")]
    NotInvertible {
        /// The value of the function at 0.
        value_at_zero: Rat,
    },

    /// The reflection axis does not meet the graph as required.
    #[error("cannot reflect across x + y = {axis}: {detail}")]
    BadReflection {
        /// The constant of the reflection axis `x + y = axis`.
        axis: Rat,
        /// Human-readable description of the violation.
        detail: String,
    },
}
