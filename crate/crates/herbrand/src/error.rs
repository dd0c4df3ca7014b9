//! Error type for tower construction and Herbrand-function operations.

use plfun::Rat;

/// Errors produced by tower validation and the operations on towers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TowerError {
    /// The tower data violates a structural invariant (composite `p`,
    /// non-increasing jumps, zero layer exponent, …).
    #[error("invalid tower: {detail}")]
    InvalidTower {
        /// Human-readable description of the violation.
        detail: String,
    },

    /// An operation needs at least one wild layer, but the tower is trivial.
    #[error("the tower has no wild layers")]
    EmptyTower,

    /// A function is not the Herbrand function of any tower over `p`: it
    /// must vanish at 0, start with slope 1 and multiply its slope by a
    /// positive power of `p` at every break.
    #[error("not a Herbrand function over p = {p}: {detail}")]
    NotHerbrandShaped {
        /// The prime the resolution was attempted over.
        p: u32,
        /// Human-readable description of the violation.
        detail: String,
    },

    /// A tame lift degree shares a factor with `p`.
    #[error("lift degree {e} is not prime to p = {p}")]
    TameConflict {
        /// The offending lift degree.
        e: u32,
        /// The residue characteristic.
        p: u32,
    },

    /// The wild exponent is infinite (the tower has an inseparable part),
    /// so the requested quantity is undefined.
    #[error("the wild exponent is infinite")]
    InfiniteWildExponent,

    /// A layer index is out of range.
    #[error("layer index {index} is out of range for a {len}-layer tower")]
    LayerOutOfRange {
        /// The requested index.
        index: usize,
        /// The number of layers available.
        len: usize,
    },

    /// An underlying piecewise-linear operation failed; indicates malformed
    /// input data.
    #[error(transparent)]
    Pl(#[from] plfun::PlError),
}

/// A rational that may be infinite: wild exponents and largest jumps of
/// towers with an inseparable part are infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendedRat {
    /// A finite exact value.
    Finite(Rat),
    /// The value `∞`.
    Infinite,
}

impl ExtendedRat {
    /// The finite value, if there is one.
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtendedRat::Finite(x) => Some(x),
            ExtendedRat::Infinite => None,
        }
    }

    /// Whether the value is infinite.
    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRat::Infinite)
    }
}

impl std::fmt::Display for ExtendedRat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtendedRat::Finite(x) => write!(f, "{x}"),
            ExtendedRat::Infinite => write!(f, "∞"),
        }
    }
}
