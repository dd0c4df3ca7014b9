use num_integer::Integer;
use num_traits::Zero;
use plfun::{rat, Rat};

use crate::datum::{classify, StandardCase};
use crate::error::CarayolError;

/// The admissible levels of a twisting character for exponent `m` and wild
/// exponent `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelRange {
    /// `m > 2w`: the level is pinned to `m - w`.
    Forced(Rat),
    /// Otherwise any level from `0` through `floor(m / 2)` can occur.
    Bounded { max: u64 },
}

/// Determines the admissible levels for the pair `(m, w)`.
///
/// # Example
///
/// ```
/// use carayol::{level_range, LevelRange};
/// use plfun::rat;
///
/// assert_eq!(level_range(7, &rat(1)), LevelRange::Forced(rat(6)));
/// assert_eq!(level_range(25, &rat(15)), LevelRange::Bounded { max: 12 });
/// ```
pub fn level_range(m: u64, w: &Rat) -> LevelRange {
    if rat(m as i64) > rat(2) * w {
        LevelRange::Forced(rat(m as i64) - w)
    } else {
        LevelRange::Bounded { max: m / 2 }
    }
}

/// What happens to the level when the datum is twisted at parameter `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelOutcome {
    /// The twisted level equals the stated value.
    Exactly(u64),
    /// The twisted level is strictly below the stated value.
    StrictlyBelow(u64),
    /// The twisted level is at most the stated value.
    AtMost(u64),
}

/// Predicts the level of a twist of parameter `d` applied to a datum of
/// exponent `m`, wild exponent `w`, and current level `l`; returns the
/// complementary exponent `m - d` together with the level prediction.
///
/// Preconditions (each failure is reported as a named constraint):
///
/// * `m < 2w`;
/// * `1 <= d <= m/2`;
/// * `d > max(0, m - w)`;
/// * `d` is not congruent to `m` modulo `p`.
///
/// # Example
///
/// ```
/// use carayol::{vary_parameter, LevelOutcome};
/// use plfun::rat;
///
/// let (rest, level) = vary_parameter(2, 25, &rat(15), 5, 12).unwrap();
/// assert_eq!(rest, 13);
/// assert_eq!(level, LevelOutcome::StrictlyBelow(12));
/// ```
pub fn vary_parameter(
    p: u32,
    m: u64,
    w: &Rat,
    l: u64,
    d: u64,
) -> Result<(u64, LevelOutcome), CarayolError> {
    if rat(m as i64) >= rat(2) * w {
        return Err(CarayolError::ConstraintViolation {
            clause: format!("m < 2w must hold: m = {m}, w = {w}"),
        });
    }
    if d < 1 || d > m / 2 {
        return Err(CarayolError::ConstraintViolation {
            clause: format!("1 <= d <= m/2 must hold: d = {d}, m = {m}"),
        });
    }
    let intrinsic = {
        let diff = rat(m as i64) - w;
        if diff > Rat::zero() {
            diff
        } else {
            Rat::zero()
        }
    };
    if rat(d as i64) <= intrinsic {
        return Err(CarayolError::ConstraintViolation {
            clause: format!("d > max(0, m - w) must hold: d = {d}, m - w = {}", rat(m as i64) - w),
        });
    }
    if d % u64::from(p) == m % u64::from(p) {
        return Err(CarayolError::ConstraintViolation {
            clause: format!("d must not be congruent to m mod p: d = {d}, m = {m}, p = {p}"),
        });
    }

    let p64 = u64::from(p);
    let outcome = if l < d {
        if d % p64 == 0 {
            LevelOutcome::StrictlyBelow(d)
        } else {
            LevelOutcome::Exactly(d)
        }
    } else if l > d {
        LevelOutcome::Exactly(l)
    } else if d % p64 == 0 {
        LevelOutcome::Exactly(d)
    } else {
        LevelOutcome::AtMost(d)
    };
    Ok((m - d, outcome))
}

/// How a non-standard pair can be nudged into a standard case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardizeOutcome {
    /// The pair already falls into the named standard case.
    AlreadyStandard(StandardCase),
    /// Raising the wild exponent to `to_b` lands in case B; raising it to
    /// the multiple of `p` given by `to_c` lands in case C.
    RaisableTo { to_b: u64, to_c: Rat },
}

/// Reports whether `(m, w)` is standard, and if not, the smallest raises of
/// the wild exponent that make it so.
///
/// # Example
///
/// ```
/// use carayol::{standardize_target, StandardCase, StandardizeOutcome};
/// use plfun::rat;
///
/// assert_eq!(
///     standardize_target(2, 7, &rat(1)),
///     StandardizeOutcome::AlreadyStandard(StandardCase::A)
/// );
/// assert_eq!(
///     standardize_target(2, 25, &rat(15)),
///     StandardizeOutcome::RaisableTo { to_b: 25, to_c: rat(16) }
/// );
/// ```
pub fn standardize_target(p: u32, m: u64, w: &Rat) -> StandardizeOutcome {
    match classify(p, m, w) {
        StandardCase::NotStandard => {
            let p_big = num_bigint::BigInt::from(p);
            let ceil = w.ceil();
            let mut candidate = ceil.numer().clone();
            let rem = candidate.mod_floor(&p_big);
            if !rem.is_zero() {
                candidate += &p_big - rem;
            }
            StandardizeOutcome::RaisableTo {
                to_b: m,
                to_c: Rat::from_integer(candidate),
            }
        }
        case => StandardizeOutcome::AlreadyStandard(case),
    }
}
