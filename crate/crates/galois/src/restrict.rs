use biherbrand::decomposition_function;
use num_traits::One;
use plfun::{rat_pow, Rat};

use crate::error::GaloisError;
use crate::profile::GaloisProfile;

/// Where a jump sits relative to the axis crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowPosition {
    /// Strictly below the crossing.
    FirstHalf,
    /// Exactly at the crossing.
    Midpoint,
    /// Strictly above the crossing.
    SecondHalf,
}

/// One row of the restriction table: the dimension data read off the
/// decomposition function around one jump.
#[derive(Debug, Clone)]
pub struct RestrictionRow {
    /// The jump abscissa.
    pub x: Rat,
    /// `p^{2r}` times the slope of the decomposition function just below.
    pub d: Rat,
    /// `p^{2r}` times the slope just above.
    pub d_plus: Rat,
    /// The multiplier `d_plus / d` across the jump.
    pub ratio: Rat,
    /// Position of the jump relative to the crossing.
    pub position: RowPosition,
    /// First-half rows restrict without multiplicity.
    pub multiplicity_free: bool,
    /// Second-half rows split into characters.
    pub character_fission: bool,
}

/// The full restriction table of a profile, one row per jump, with the
/// telescoping product of the ratios (always `p^{2r}`).
#[derive(Debug, Clone)]
pub struct RestrictionTable {
    pub rows: Vec<RestrictionRow>,
    pub ratio_product: Rat,
}

/// Reads the restriction dimensions off the decomposition function: at each
/// jump of the profile, `d` and `d_plus` are `p^{2r}` times the one-sided
/// slopes, normalized so the table starts at `d = 1`.
///
/// # Example
///
/// ```
/// use galois::{restriction_table, GaloisProfile, RowPosition};
/// use plfun::{rat, ratio};
///
/// let profile = GaloisProfile::from_jumps(2, 1, 7, &[(ratio(7, 3), rat(4))]).unwrap();
/// let table = restriction_table(&profile).unwrap();
/// assert_eq!(table.rows.len(), 1);
/// assert_eq!(table.rows[0].d, rat(1));
/// assert_eq!(table.rows[0].d_plus, rat(4));
/// assert_eq!(table.rows[0].position, RowPosition::Midpoint);
/// assert_eq!(table.ratio_product, rat(4));
/// ```
pub fn restriction_table(profile: &GaloisProfile) -> Result<RestrictionTable, GaloisError> {
    let p = profile.p();
    let r = profile.r();
    let sig = decomposition_function(profile.psi(), p, r, profile.sw()).map_err(|e| {
        GaloisError::MalformedProfile {
            detail: e.to_string(),
        }
    })?;
    let c = profile.crossing()?;
    let scale = rat_pow(p, 2 * r as i32);
    let mut rows = Vec::new();
    let mut product = Rat::one();
    for entry in profile.jumps().iter() {
        let d = &scale * sig.slope_left(&entry.x);
        let d_plus = &scale * sig.slope_right(&entry.x);
        let ratio = &d_plus / &d;
        let position = if entry.x < c {
            RowPosition::FirstHalf
        } else if entry.x == c {
            RowPosition::Midpoint
        } else {
            RowPosition::SecondHalf
        };
        product *= &ratio;
        rows.push(RestrictionRow {
            x: entry.x.clone(),
            d,
            d_plus,
            ratio,
            position,
            multiplicity_free: position == RowPosition::FirstHalf,
            character_fission: position == RowPosition::SecondHalf,
        });
    }
    Ok(RestrictionTable {
        rows,
        ratio_product: product,
    })
}
