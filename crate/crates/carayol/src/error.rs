use thiserror::Error;

/// Errors from the datum invariant calculus.
#[derive(Debug, Error)]
pub enum CarayolError {
    /// The datum itself is malformed.
    #[error("invalid datum: {detail}")]
    InvalidDatum { detail: String },

    /// The requested level is outside the range the Herbrand-function rule
    /// covers: it exceeds the intrinsic level and is congruent to the
    /// exponent modulo p.
    #[error("level {l} exceeds the intrinsic level and is congruent to m = {m} mod p = {p}")]
    UncoveredCase { l: u64, m: u64, p: u32 },

    /// A precondition of the parameter-variation rule failed.
    #[error("constraint violated: {clause}")]
    ConstraintViolation { clause: String },

    /// An error from the bi-Herbrand layer.
    #[error(transparent)]
    Bi(#[from] biherbrand::BiError),

    /// An error from the piecewise-linear layer.
    #[error(transparent)]
    Pl(#[from] plfun::PlError),
}
