use plfun::{rat, rat_pow, Rat};

use crate::error::GaloisError;
use crate::profile::GaloisProfile;

/// The closed-form data of a single-jump profile.
#[derive(Debug, Clone)]
pub struct HSingularReport {
    /// The unique jump, always `sw / (1 + p^r)`.
    pub jump: Rat,
    /// The Swan exponent of the self-twist: `(p^{2r} - 1)` times the jump.
    pub twist_swan: Rat,
    /// The centric degree `p^{2r}`.
    pub centric_degree: u64,
    /// Slopes of the twist's decomposition function below and above the
    /// jump: `p^{-2r}` and `1`.
    pub sigma_slopes: (Rat, Rat),
}

/// Checks a single-jump profile against its closed forms: the jump sits at
/// `sw / (1 + p^r)` and the self-twist has Swan exponent `(p^{2r} - 1)`
/// times the jump, with decomposition slopes `p^{-2r}` then `1`.
///
/// # Example
///
/// ```
/// use galois::{h_singular_check, GaloisProfile};
/// use plfun::{rat, ratio};
///
/// let profile = GaloisProfile::from_jumps(2, 1, 7, &[(ratio(7, 3), rat(4))]).unwrap();
/// let report = h_singular_check(&profile).unwrap();
/// assert_eq!(report.jump, ratio(7, 3));
/// assert_eq!(report.twist_swan, rat(7));
/// ```
pub fn h_singular_check(profile: &GaloisProfile) -> Result<HSingularReport, GaloisError> {
    let jumps = profile.jumps();
    if jumps.len() != 1 {
        return Err(GaloisError::NotSingleJump { count: jumps.len() });
    }
    let jump = jumps.first().expect("one jump").x.clone();
    let p = profile.p();
    let r = profile.r();
    let predicted = rat(profile.sw() as i64) / (rat(1) + rat_pow(p, r as i32));
    if jump != predicted {
        return Err(GaloisError::MalformedProfile {
            detail: format!("single jump {jump} must sit at sw/(1 + p^r) = {predicted}"),
        });
    }
    let centric = rat_pow(p, 2 * r as i32);
    let twist_swan = (&centric - rat(1)) * &jump;
    Ok(HSingularReport {
        jump,
        twist_swan,
        centric_degree: centric.numer().try_into().expect("fits in u64"),
        sigma_slopes: (rat_pow(p, -2 * (r as i32)), rat(1)),
    })
}
