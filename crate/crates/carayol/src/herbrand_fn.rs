use plfun::{rat, rat_pow, PLFun, Rat};

use crate::datum::CarayolDatum;
use crate::error::CarayolError;

/// The Herbrand function attached to a datum twisted by a character of
/// level `l`.
///
/// * Levels up to the intrinsic level leave the bi-Herbrand function
///   unchanged.
/// * Above the intrinsic level (and up to `floor(m/2)`, past which no twist
///   level occurs) the function is the pointwise maximum of the bi-Herbrand
///   function and the line `x - (m - l)/p^r`, provided `l` is not congruent
///   to `m` modulo `p`.
/// * The congruent levels are not covered by the rule and are reported as
///   [`CarayolError::UncoveredCase`].
///
/// # Example
///
/// ```
/// use carayol::{herbrand_of_datum, CarayolDatum};
/// use plfun::{rat, ratio};
///
/// let datum = CarayolDatum::from_parts(2, &[(rat(5), 2)], 25).unwrap();
/// let f = herbrand_of_datum(&datum, 12).unwrap();
/// let jumps = f.jump_table(None);
/// assert_eq!(jumps.abscissae(), vec![ratio(13, 3), ratio(31, 6)]);
/// ```
pub fn herbrand_of_datum(datum: &CarayolDatum, l: u64) -> Result<PLFun, CarayolError> {
    let inv = datum.invariants()?;
    let bundle = datum.bundle()?;
    if rat(l as i64) <= inv.l {
        return Ok(bundle.bi);
    }
    if l > inv.m / 2 {
        return Err(CarayolError::InvalidDatum {
            detail: format!(
                "twist level {l} exceeds both the intrinsic level {} and floor(m/2) = {}",
                inv.l,
                inv.m / 2
            ),
        });
    }
    if l % u64::from(inv.p) == inv.m % u64::from(inv.p) {
        return Err(CarayolError::UncoveredCase {
            l,
            m: inv.m,
            p: inv.p,
        });
    }
    let sigma = datum.spec().sigma();
    let shift: Rat = rat(inv.m as i64 - l as i64) * rat_pow(inv.p, -(inv.r as i32));
    let line = PLFun::new(-shift, rat(1), vec![], Some(sigma))?;
    Ok(bundle.bi.pointwise_max(&line)?)
}
