//! Swan-conductor bookkeeping through a tower: norm behaviour on conductor
//! exponents and the induction formula.

use plfun::{rat, Rat};

use crate::error::{ExtendedRat, TowerError};
use crate::tower::RamTower;

/// How a conductor exponent `k ≥ 1` moves through the norm of the tower:
/// returns `(ψ(k), exact)`, where `exact` is false exactly when `k` is a
/// ramification jump (at a jump the conductor bound is not attained).
///
/// # Example
///
/// ```
/// use herbrand::{norm_swan, Layer, RamTower};
/// use plfun::rat;
///
/// let t = RamTower::new(2, vec![Layer::new(rat(1), 1), Layer::new(rat(3), 1)], 0).unwrap();
/// assert_eq!(norm_swan(&t, 2).unwrap(), (rat(3), true));
/// assert_eq!(norm_swan(&t, 3).unwrap(), (rat(5), false));
/// ```
pub fn norm_swan(t: &RamTower, k: u64) -> Result<(Rat, bool), TowerError> {
    let x = rat(k as i64);
    let value = t.build_psi().eval(&x)?;
    Ok((value, !t.is_jump(&x)))
}

/// Swan conductor of an induced representation: for a representation of
/// Swan exponent `sw_tau` and dimension `dim_tau` over the top of the
/// tower, with residue degree `f_res`, the induced Swan exponent is
/// `(sw_tau + w · dim_tau) · f_res` where `w` is the tower's wild exponent.
///
/// Errors when the wild exponent is infinite.
///
/// # Example
///
/// ```
/// use herbrand::{swan_induced, Layer, RamTower};
/// use plfun::{rat, ratio};
///
/// let t = RamTower::new(2, vec![Layer::new(ratio(13, 3), 2)], 0).unwrap();
/// assert_eq!(swan_induced(&t, &rat(12), 1, 1).unwrap(), rat(25));
/// ```
pub fn swan_induced(
    t: &RamTower,
    sw_tau: &Rat,
    dim_tau: u64,
    f_res: u64,
) -> Result<Rat, TowerError> {
    if dim_tau == 0 || f_res == 0 {
        return Err(TowerError::InvalidTower {
            detail: "dimension and residue degree must be positive".into(),
        });
    }
    match t.wild_exponent() {
        ExtendedRat::Infinite => Err(TowerError::InfiniteWildExponent),
        ExtendedRat::Finite(w) => {
            Ok((sw_tau + w * rat(dim_tau as i64)) * rat(f_res as i64))
        }
    }
}
