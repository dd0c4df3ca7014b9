use herbrand::{elementary_resolution, RamTower};
use plfun::{log_p, rat, rat_pow, Rat};

use crate::error::GaloisError;
use crate::profile::GaloisProfile;

/// The decomposition of a profile read off its function: the tame-side
/// tower below the crossing and the core left at the top.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    /// The axis crossing of the function.
    pub c: Rat,
    /// Whether the crossing is itself a jump.
    pub crossing_is_jump: bool,
    /// The core dimension: the square root of the crossing jump's height,
    /// or `1` when the crossing is not a jump.
    pub dim_core: u64,
    /// The square of the core dimension.
    pub centric_degree: u64,
    /// The tower resolved from the rescaled function below the crossing.
    pub l_tower: RamTower,
    /// The wild exponent of that tower.
    pub w_l: Rat,
    /// The Swan exponent left for the core: `sw - w_l * dim_core`.
    pub sw_core: Rat,
    /// The tower's Herbrand function evaluated at the crossing, defined
    /// when the core is not a character; it must equal
    /// `sw_core / (1 + dim_core)`.
    pub core_jump: Option<Rat>,
}

/// Decomposes a profile: locates the crossing, extracts the core dimension
/// from the middle jump, resolves the tower below the crossing, and splits
/// the Swan exponent accordingly.
///
/// # Example
///
/// ```
/// use galois::{analyze_profile, GaloisProfile};
/// use plfun::{rat, ratio};
///
/// let profile = GaloisProfile::from_jumps(
///     2,
///     2,
///     17,
///     &[(rat(1), rat(2)), (rat(3), rat(4)), (rat(4), rat(2))],
/// )
/// .unwrap();
/// let report = analyze_profile(&profile).unwrap();
/// assert_eq!(report.dim_core, 2);
/// assert_eq!(report.sw_core, rat(15));
/// assert_eq!(report.core_jump, Some(rat(5)));
/// ```
pub fn analyze_profile(profile: &GaloisProfile) -> Result<DecompositionReport, GaloisError> {
    let p = profile.p();
    let r = profile.r();
    let c = profile.crossing()?;
    let jumps = profile.jumps();
    let middle = jumps.at(&c);
    let crossing_is_jump = middle.is_some();

    let dim_core = match middle {
        Some(entry) => {
            let k = log_p(&entry.height, p).ok_or_else(|| GaloisError::MalformedProfile {
                detail: format!("crossing height {} is not a power of p", entry.height),
            })?;
            if k % 2 != 0 {
                return Err(GaloisError::MalformedProfile {
                    detail: format!(
                        "crossing height {} is an odd power of p; no core dimension",
                        entry.height
                    ),
                });
            }
            let half = rat_pow(p, (k / 2) as i32);
            half.numer()
                .try_into()
                .map_err(|_| GaloisError::MalformedProfile {
                    detail: "core dimension overflows".into(),
                })?
        }
        None => 1u64,
    };

    let rescaled = profile.psi().scale_y(&rat_pow(p, r as i32))?;
    let lower = rescaled.restrict(&c)?;
    let l_tower = elementary_resolution(&lower, p)?;
    let w_l = l_tower
        .wild_exponent()
        .finite()
        .cloned()
        .expect("resolved towers are separable");

    let sw_core = rat(profile.sw() as i64) - &w_l * rat(dim_core as i64);
    let core_jump = if dim_core > 1 {
        let at_c = l_tower.build_psi().eval(&c)?;
        let expected = &sw_core / rat(1 + dim_core as i64);
        if at_c != expected {
            return Err(GaloisError::MalformedProfile {
                detail: format!(
                    "core jump {at_c} disagrees with sw_core/(1 + dim) = {expected}"
                ),
            });
        }
        Some(at_c)
    } else {
        None
    };

    Ok(DecompositionReport {
        c,
        crossing_is_jump,
        dim_core,
        centric_degree: dim_core * dim_core,
        l_tower,
        w_l,
        sw_core,
        core_jump,
    })
}
