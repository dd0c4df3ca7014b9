use num_traits::ToPrimitive;
use plfun::{log_p, rat, rat_pow, PLFun, Rat};

use crate::error::GaloisError;
use crate::profile::GaloisProfile;

/// What descent finds inside the first ramification layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Inner {
    /// A smaller profile of the same shape.
    Profile(GaloisProfile),
    /// The degree-one case: only a character with the stated Swan exponent
    /// remains.
    Character { sw: u64 },
}

/// One peeled layer: the first jump of the outer profile together with the
/// inner datum living above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Descent {
    /// The abscissa of the peeled jump (an integer).
    pub layer_jump: Rat,
    /// The height of the peeled jump, a power of `p`.
    pub layer_height: u64,
    /// The datum left after passing to the layer field.
    pub inner: Inner,
}

/// Peels the first ramification layer off a profile.
///
/// The first jump must sit at a positive integer `a` (apply
/// [`GaloisProfile::tame_lift`] first otherwise) and the profile must have
/// at least two jumps. With `h` the height at `a` and `r1 = r - log_p h`,
/// the inner Swan exponent is `sw - (h - 1) a p^{r1}`; the interior jumps
/// move to `a + h (x - a)` with unchanged heights, while the first and last
/// jumps are consumed by the layer. When `r1 = 0` only a character remains.
///
/// # Example
///
/// ```
/// use galois::{descend_once, GaloisProfile, Inner};
/// use plfun::rat;
///
/// let profile = GaloisProfile::from_jumps(
///     2,
///     2,
///     17,
///     &[(rat(1), rat(2)), (rat(3), rat(4)), (rat(4), rat(2))],
/// )
/// .unwrap();
/// let descent = descend_once(&profile).unwrap();
/// assert_eq!(descent.layer_jump, rat(1));
/// assert_eq!(descent.layer_height, 2);
/// match descent.inner {
///     Inner::Profile(inner) => {
///         assert_eq!(inner.sw(), 15);
///         assert_eq!(inner.jumps().abscissae(), vec![rat(5)]);
///     }
///     Inner::Character { .. } => unreachable!(),
/// }
/// ```
pub fn descend_once(profile: &GaloisProfile) -> Result<Descent, GaloisError> {
    let jumps = profile.jumps();
    if jumps.len() < 2 {
        return Err(GaloisError::TooFewJumps { count: jumps.len() });
    }
    let first = jumps.first().expect("at least two jumps");
    let a = first.x.clone();
    if !a.is_integer() {
        return Err(GaloisError::NotIntegralFirstJump { jump: a });
    }
    let h_exp = log_p(&first.height, profile.p()).expect("validated power height");
    let h = first
        .height
        .numer()
        .to_u64()
        .expect("height fits in u64");
    let r1 = profile.r() - h_exp;

    let p_r1 = rat_pow(profile.p(), r1 as i32);
    let sw_inner_rat = rat(profile.sw() as i64) - rat((h - 1) as i64) * &a * &p_r1;
    let sw_inner = sw_inner_rat
        .is_integer()
        .then(|| sw_inner_rat.numer().to_u64())
        .flatten()
        .ok_or_else(|| GaloisError::InconsistentLayer {
            detail: format!("inner Swan exponent {sw_inner_rat} is not a positive integer"),
        })?;

    if r1 == 0 {
        return Ok(Descent {
            layer_jump: a,
            layer_height: h,
            inner: Inner::Character { sw: sw_inner },
        });
    }

    let moved: Vec<(Rat, Rat)> = jumps
        .iter()
        .skip(1)
        .take(jumps.len() - 2)
        .map(|e| (&a + rat(h as i64) * (&e.x - &a), e.height.clone()))
        .collect();
    let inner = GaloisProfile::from_jumps(profile.p(), r1, sw_inner, &moved)?;
    Ok(Descent {
        layer_jump: a,
        layer_height: h,
        inner: Inner::Profile(inner),
    })
}

/// Reassembles the outer profile from one layer and its inner datum: the
/// exact inverse of [`descend_once`].
///
/// The layer contributes the Herbrand function `x` below `a` and
/// `a + h (x - a)` above; composing the inner function with it, dividing by
/// `h`, cutting at the axis crossing, and mirroring yields the outer
/// function, which is then revalidated.
///
/// # Example
///
/// ```
/// use galois::{ascend_once, descend_once, GaloisProfile, Inner};
/// use plfun::rat;
///
/// let outer = GaloisProfile::from_jumps(
///     2,
///     2,
///     17,
///     &[(rat(1), rat(2)), (rat(3), rat(4)), (rat(4), rat(2))],
/// )
/// .unwrap();
/// let d = descend_once(&outer).unwrap();
/// let rebuilt = ascend_once(2, &d.layer_jump, d.layer_height, &d.inner).unwrap();
/// assert_eq!(rebuilt, outer);
/// ```
pub fn ascend_once(
    p: u32,
    layer_jump: &Rat,
    layer_height: u64,
    inner: &Inner,
) -> Result<GaloisProfile, GaloisError> {
    let h_exp = log_p(&rat(layer_height as i64), p).ok_or_else(|| {
        GaloisError::InconsistentLayer {
            detail: format!("layer height {layer_height} is not a power of p = {p}"),
        }
    })?;
    if h_exp == 0 {
        return Err(GaloisError::InconsistentLayer {
            detail: "layer height must be at least p".into(),
        });
    }
    let (r1, sw_inner, inner_fn) = match inner {
        Inner::Profile(q) => {
            if q.p() != p {
                return Err(GaloisError::InconsistentLayer {
                    detail: format!("inner profile has p = {}, layer has p = {p}", q.p()),
                });
            }
            (q.r(), q.sw(), q.psi().clone())
        }
        Inner::Character { sw } => {
            let identity = PLFun::new(rat(0), rat(1), vec![], Some(rat(*sw as i64)))
                .map_err(GaloisError::Pl)?;
            (0, *sw, identity)
        }
    };
    let r = r1 + h_exp;
    let p_r1 = rat_pow(p, r1 as i32);
    let sw_rat = rat(sw_inner as i64) + rat((layer_height - 1) as i64) * layer_jump * &p_r1;
    let sw = sw_rat
        .is_integer()
        .then(|| sw_rat.numer().to_u64())
        .flatten()
        .ok_or_else(|| GaloisError::InconsistentLayer {
            detail: format!("outer Swan exponent {sw_rat} is not a positive integer"),
        })?;
    let sigma = rat(sw as i64) * rat_pow(p, -(r as i32));

    let build = || -> Result<PLFun, plfun::PlError> {
        let layer_psi = PLFun::new(
            rat(0),
            rat(1),
            vec![(layer_jump.clone(), rat(layer_height as i64))],
            None,
        )?;
        let inner_end = inner_fn
            .domain_end()
            .cloned()
            .expect("inner functions are bounded");
        let x_max = layer_psi.solve(&inner_end)?;
        let composed = layer_psi.restrict(&x_max)?.then(&inner_fn)?;
        let f = composed.scale_y(&(rat(1) / rat(layer_height as i64)))?;
        let c = f.solve_sum(&sigma)?;
        f.restrict(&c)?.extend_symmetric(&sigma)
    };
    let psi = build().map_err(|e| GaloisError::InconsistentLayer {
        detail: format!("layer and inner datum do not assemble: {e}"),
    })?;
    GaloisProfile::new(p, r, sw, psi).map_err(|e| GaloisError::InconsistentLayer {
        detail: format!("reassembled function is not a profile: {e}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use plfun::ratio;

    fn profile_17() -> GaloisProfile {
        GaloisProfile::from_jumps(
            2,
            2,
            17,
            &[(rat(1), rat(2)), (rat(3), rat(4)), (rat(4), rat(2))],
        )
        .unwrap()
    }

    fn profile_75() -> GaloisProfile {
        GaloisProfile::from_jumps(2, 2, 75, &[(rat(13), rat(4)), (ratio(31, 2), rat(4))])
            .unwrap()
    }

    #[test]
    fn descend_to_inner_profile() {
        let d = descend_once(&profile_17()).unwrap();
        assert_eq!(d.layer_jump, rat(1));
        assert_eq!(d.layer_height, 2);
        match &d.inner {
            Inner::Profile(inner) => {
                assert_eq!((inner.p(), inner.r(), inner.sw()), (2, 1, 15));
                assert_eq!(inner.jumps().abscissae(), vec![rat(5)]);
                assert_eq!(inner.jumps().first().unwrap().height, rat(4));
            }
            Inner::Character { .. } => panic!("expected an inner profile"),
        }
    }

    #[test]
    fn descend_to_character() {
        let d = descend_once(&profile_75()).unwrap();
        assert_eq!(d.layer_jump, rat(13));
        assert_eq!(d.layer_height, 4);
        assert_eq!(d.inner, Inner::Character { sw: 36 });
    }

    #[test]
    fn descend_requires_integral_first_jump() {
        let profile = GaloisProfile::from_jumps(
            2,
            2,
            25,
            &[(ratio(13, 3), rat(4)), (ratio(31, 6), rat(4))],
        )
        .unwrap();
        assert!(matches!(
            descend_once(&profile),
            Err(GaloisError::NotIntegralFirstJump { .. })
        ));
        // A tame lift of degree 3 clears the obstruction.
        let lifted = profile.tame_lift(3).unwrap();
        let d = descend_once(&lifted).unwrap();
        assert_eq!(d.layer_jump, rat(13));
        assert_eq!(d.inner, Inner::Character { sw: 36 });
    }

    #[test]
    fn descend_requires_two_jumps() {
        let single =
            GaloisProfile::from_jumps(2, 1, 7, &[(ratio(7, 3), rat(4))]).unwrap();
        assert!(matches!(
            descend_once(&single),
            Err(GaloisError::TooFewJumps { count: 1 })
        ));
    }

    #[test]
    fn ascend_inverts_profile_descent() {
        let outer = profile_17();
        let d = descend_once(&outer).unwrap();
        let rebuilt = ascend_once(2, &d.layer_jump, d.layer_height, &d.inner).unwrap();
        assert_eq!(rebuilt, outer);
    }

    #[test]
    fn ascend_inverts_character_descent() {
        let outer = profile_75();
        let d = descend_once(&outer).unwrap();
        let rebuilt = ascend_once(2, &d.layer_jump, d.layer_height, &d.inner).unwrap();
        assert_eq!(rebuilt, outer);
        // The crossing of the rebuilt function sits between the two jumps.
        assert_eq!(rebuilt.crossing().unwrap(), ratio(57, 4));
    }

    #[test]
    fn ascend_rejects_tampered_character() {
        // Shifting the character exponent by one makes the outer Swan
        // exponent even, which the revalidation catches.
        let err = ascend_once(
            2,
            &rat(13),
            4,
            &Inner::Character { sw: 35 },
        )
        .unwrap_err();
        assert!(matches!(err, GaloisError::InconsistentLayer { .. }));
    }

    #[test]
    fn tampered_inner_profile_fails_at_construction() {
        // The inner profile of the 17-example carries sw = 15; writing 13
        // breaks the endpoint law already at construction time.
        let err = GaloisProfile::from_jumps(2, 1, 13, &[(rat(5), rat(4))]).unwrap_err();
        assert!(matches!(err, GaloisError::MalformedProfile { .. }));
    }
}
