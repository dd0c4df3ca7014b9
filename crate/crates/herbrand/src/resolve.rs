//! Resolving a Herbrand-shaped function back into tower data.

use num_traits::{One, Zero};
use plfun::{log_p, PLFun};

use crate::error::TowerError;
use crate::tower::{Layer, RamTower};

/// Recovers the unique separable tower whose Herbrand function is `f`.
///
/// `f` must vanish at 0, start with slope 1, and multiply its slope by a
/// positive power of `p` at every break; the breaks become the jumps and the
/// slope ratios the layer degrees. This is the exact inverse of
/// [`RamTower::build_psi`] on separable towers (bounded restrictions of the
/// Herbrand function resolve the same way, since only break data matters).
///
/// # Example
///
/// ```
/// use herbrand::{elementary_resolution, Layer, RamTower};
/// use plfun::{rat, ratio, PLFun};
///
/// let f = PLFun::new(rat(0), rat(1), vec![(ratio(13, 3), rat(4))], None).unwrap();
/// let t = elementary_resolution(&f, 2).unwrap();
/// assert_eq!(t.layers(), &[Layer::new(ratio(13, 3), 2)]);
/// ```
pub fn elementary_resolution(f: &PLFun, p: u32) -> Result<RamTower, TowerError> {
    if !f.value_at_zero().is_zero() {
        return Err(TowerError::NotHerbrandShaped {
            p,
            detail: format!("value at 0 is {}, expected 0", f.value_at_zero()),
        });
    }
    if !f.initial_slope().is_one() {
        return Err(TowerError::NotHerbrandShaped {
            p,
            detail: format!("initial slope is {}, expected 1", f.initial_slope()),
        });
    }
    let mut layers = Vec::with_capacity(f.breaks().len());
    let mut prev_slope = f.initial_slope().clone();
    for (x, slope) in f.breaks() {
        let ratio = slope / &prev_slope;
        let s = log_p(&ratio, p).filter(|&s| s >= 1).ok_or_else(|| {
            TowerError::NotHerbrandShaped {
                p,
                detail: format!("slope ratio {ratio} at break {x} is not a positive power of {p}"),
            }
        })?;
        layers.push(Layer::new(x.clone(), s));
        prev_slope = slope.clone();
    }
    RamTower::new(p, layers, 0)
}
