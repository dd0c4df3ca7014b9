use plfun::Rat;
use thiserror::Error;

/// Errors from bi-Herbrand construction and the scenario search.
#[derive(Debug, Error)]
pub enum BiError {
    /// The input data cannot describe a valid bi-Herbrand setting.
    #[error("invalid bi-Herbrand spec: {detail}")]
    InvalidSpec { detail: String },

    /// The scenario search exhausted its window without finding a parameter.
    #[error("no admissible odd parameter below the search bound for jumps ({a}, {b})")]
    NoAdmissibleM { a: u64, b: Rat },

    /// A ramification-tower error surfaced while building the underlying data.
    #[error(transparent)]
    Tower(#[from] herbrand::TowerError),

    /// A piecewise-linear algebra error surfaced during construction.
    #[error(transparent)]
    Pl(#[from] plfun::PlError),
}
