//! Exact rational scalars and small arithmetic helpers.
//!
//! Every quantity in this workspace is an exact rational number: comparisons
//! are exact, fractions are kept reduced with a positive denominator, and no
//! floating point is ever involved. The scalar itself is
//! [`num_rational::BigRational`], re-exported as [`Rat`]; this module adds the
//! constructors, parsing and integer helpers the rest of the workspace leans
//! on.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the workspace.
///
/// Always reduced to lowest terms with a positive denominator (guaranteed by
/// the underlying representation).
pub type Rat = num_rational::BigRational;

/// Error produced when a rational literal cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRatError {
    /// The numerator or denominator is not a valid integer literal.
    #[error("invalid rational literal {input:?}")]
    Invalid {
        /// The offending input string.
        input: String,
    },
    /// The denominator is zero.
    #[error("zero denominator in rational literal {input:?}")]
    ZeroDenominator {
        /// The offending input string.
        input: String,
    },
}

/// Builds a rational from an integer.
///
/// # Example
///
/// ```
/// use plfun::{rat, ratio};
/// assert_eq!(rat(3), ratio(6, 2));
/// ```
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Builds the rational `n / d`, reducing to lowest terms.
///
/// # Panics
///
/// Panics if `d == 0`; use [`parse_rat`] for fallible construction from
/// untrusted input.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"a/b"` or `"a"` into an exact rational.
///
/// Whitespace around either component is ignored. The result is reduced and
/// sign-normalised. This parser never panics, so it is safe on untrusted
/// input.
///
/// # Example
///
/// ```
/// use plfun::{parse_rat, ratio};
/// assert_eq!(parse_rat("13/3").unwrap(), ratio(13, 3));
/// assert_eq!(parse_rat("-4").unwrap(), ratio(-4, 1));
/// assert!(parse_rat("1/0").is_err());
/// ```
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let invalid = || ParseRatError::Invalid {
        input: s.to_owned(),
    };
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = numer.trim().parse().map_err(|_| invalid())?;
    let denom: BigInt = denom.trim().parse().map_err(|_| invalid())?;
    if denom.is_zero() {
        return Err(ParseRatError::ZeroDenominator {
            input: s.to_owned(),
        });
    }
    Ok(Rat::new(numer, denom))
}

/// `p^k` as a big integer.
pub fn int_pow(p: u32, k: u32) -> BigInt {
    BigInt::from(p).pow(k)
}

/// `p^k` as a rational, with `k` allowed to be negative.
///
/// # Example
///
/// ```
/// use plfun::{rat_pow, ratio};
/// assert_eq!(rat_pow(2, -2), ratio(1, 4));
/// assert_eq!(rat_pow(3, 2), ratio(9, 1));
/// ```
pub fn rat_pow(p: u32, k: i32) -> Rat {
    let mag = Rat::from_integer(int_pow(p, k.unsigned_abs()));
    if k < 0 {
        mag.recip()
    } else {
        mag
    }
}

/// Floor of a rational as a big integer.
pub fn floor_int(x: &Rat) -> BigInt {
    x.floor().to_integer()
}

/// Whether `x` is an integer.
pub fn is_integer(x: &Rat) -> bool {
    x.is_integer()
}

/// Whether `x` lies in `(1/2)·Z \ Z`: half-integral but not integral.
///
/// # Example
///
/// ```
/// use plfun::{is_half_integer, ratio};
/// assert!(is_half_integer(&ratio(7, 2)));
/// assert!(!is_half_integer(&ratio(7, 1)));
/// assert!(!is_half_integer(&ratio(7, 3)));
/// ```
pub fn is_half_integer(x: &Rat) -> bool {
    !x.is_integer() && (x * rat(2)).is_integer()
}

/// If `x` is a power of `p` (possibly `p^0 = 1`), returns the exponent.
///
/// Only non-negative powers are recognised; `x` must be a positive integer.
pub fn log_p(x: &Rat, p: u32) -> Option<u32> {
    if !x.is_integer() || !x.is_positive() {
        return None;
    }
    let mut n = x.to_integer();
    let p = BigInt::from(p);
    let mut k = 0u32;
    while n > BigInt::one() {
        if (&n % &p).is_zero() {
            n /= &p;
            k += 1;
        } else {
            return None;
        }
    }
    Some(k)
}

/// Whether `p` is prime. Used to validate tower and profile inputs.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    if p % 3 == 0 {
        return p == 3;
    }
    let mut d = 5u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 || p % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}
