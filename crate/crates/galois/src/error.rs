use plfun::Rat;
use thiserror::Error;

/// Errors from profile validation and the layer calculus.
#[derive(Debug, Error)]
pub enum GaloisError {
    /// The function data does not satisfy the profile laws.
    #[error("malformed profile: {detail}")]
    MalformedProfile { detail: String },

    /// Descent needs the first jump at an integer abscissa.
    #[error("first jump {jump} is not an integer; apply a tame lift first")]
    NotIntegralFirstJump { jump: Rat },

    /// Descent needs at least two jumps to peel a layer off.
    #[error("descent needs at least two jumps, found {count}")]
    TooFewJumps { count: usize },

    /// The layer data and the inner datum do not assemble into a profile.
    #[error("inconsistent layer: {detail}")]
    InconsistentLayer { detail: String },

    /// The singular-case check applies only to single-jump profiles.
    #[error("expected exactly one jump, found {count}")]
    NotSingleJump { count: usize },

    /// Tame lifts must have degree prime to p.
    #[error("tame lift degree {e} shares a factor with p = {p}")]
    TameConflict { e: u64, p: u32 },

    /// An error from the piecewise-linear layer.
    #[error(transparent)]
    Pl(#[from] plfun::PlError),

    /// An error from the ramification-tower layer.
    #[error(transparent)]
    Tower(#[from] herbrand::TowerError),
}
