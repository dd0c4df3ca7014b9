use biherbrand::{BiBundle, BiSpec};
use herbrand::{Layer, RamTower};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use plfun::{floor_int, rat, rat_pow, Rat};

use crate::error::CarayolError;

/// The standard-case classification of an exponent/wild-exponent pair.
///
/// With exponent `m` and wild exponent `w`:
///
/// * `A` when `m > 2w`;
/// * `B` when `m <= w`;
/// * `C` when `w < m <= 2w` and `p` divides `w`;
/// * `NotStandard` when `w < m <= 2w` and `p` does not divide `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardCase {
    A,
    B,
    C,
    NotStandard,
}

impl std::fmt::Display for StandardCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StandardCase::A => write!(f, "A"),
            StandardCase::B => write!(f, "B"),
            StandardCase::C => write!(f, "C"),
            StandardCase::NotStandard => write!(f, "not standard"),
        }
    }
}

/// Classifies an exponent/wild-exponent pair into its standard case.
pub fn classify(p: u32, m: u64, w: &Rat) -> StandardCase {
    let m = rat(m as i64);
    if m > rat(2) * w {
        StandardCase::A
    } else if m <= *w {
        StandardCase::B
    } else if divisible_by(w, p) {
        StandardCase::C
    } else {
        StandardCase::NotStandard
    }
}

/// True when `w` is an integer divisible by `p`.
fn divisible_by(w: &Rat, p: u32) -> bool {
    w.is_integer() && w.numer().is_multiple_of(&p.into())
}

/// A ramification datum: a totally wild tower together with a Swan exponent
/// prime to `p`. All invariants of the calculus are derived from this pair.
#[derive(Debug, Clone)]
pub struct CarayolDatum {
    spec: BiSpec,
}

/// The derived invariants of a datum.
///
/// * `w` — the wild exponent of the tower;
/// * `l` — the intrinsic level `max(0, m - w)`;
/// * `lambda` — `floor(l / 2)`;
/// * `lambda_prime` — `max(floor((1 + l) / 2) - 1, 0)`;
/// * `epsilon` — the point where the bi-Herbrand function reaches
///   `lambda / p^r`;
/// * `c` — the axis crossing of the scaled Herbrand graph;
/// * `j_infinity` — the largest tower jump;
/// * `case` — the standard-case classification of `(m, w)`;
/// * `star_exceptional` — whether the largest jump coincides with the
///   crossing while the intrinsic level is positive and even.
#[derive(Debug, Clone)]
pub struct DatumInvariants {
    pub p: u32,
    pub r: u32,
    pub m: u64,
    pub w: Rat,
    pub l: Rat,
    pub lambda: u64,
    pub lambda_prime: u64,
    pub epsilon: Rat,
    pub c: Rat,
    pub j_infinity: Rat,
    pub case: StandardCase,
    pub star_exceptional: bool,
}

impl CarayolDatum {
    /// Wraps a validated spec as a datum.
    pub fn new(spec: BiSpec) -> Self {
        CarayolDatum { spec }
    }

    /// Builds a datum from raw parts: prime, single-step jump list with
    /// step sizes, and exponent.
    ///
    /// # Example
    ///
    /// ```
    /// use carayol::CarayolDatum;
    /// use plfun::rat;
    ///
    /// let datum = CarayolDatum::from_parts(2, &[(rat(5), 2)], 25).unwrap();
    /// assert_eq!(datum.invariants().unwrap().lambda, 5);
    /// ```
    pub fn from_parts(p: u32, jumps: &[(Rat, u32)], m: u64) -> Result<Self, CarayolError> {
        let layers = jumps
            .iter()
            .map(|(j, s)| Layer::new(j.clone(), *s))
            .collect::<Vec<_>>();
        let tower = RamTower::new(p, layers, 0).map_err(|e| CarayolError::InvalidDatum {
            detail: e.to_string(),
        })?;
        Ok(CarayolDatum::new(BiSpec::new(tower, m)?))
    }

    /// The underlying spec.
    pub fn spec(&self) -> &BiSpec {
        &self.spec
    }

    /// The assembled bi-Herbrand bundle of the datum.
    pub fn bundle(&self) -> Result<BiBundle, CarayolError> {
        Ok(self.spec.bundle()?)
    }

    /// Computes every invariant of the calculus for this datum.
    ///
    /// # Example
    ///
    /// ```
    /// use carayol::{CarayolDatum, StandardCase};
    /// use plfun::rat;
    ///
    /// let datum = CarayolDatum::from_parts(2, &[(rat(5), 2)], 25).unwrap();
    /// let inv = datum.invariants().unwrap();
    /// assert_eq!(inv.w, rat(15));
    /// assert_eq!(inv.l, rat(10));
    /// assert_eq!(inv.case, StandardCase::NotStandard);
    /// assert!(inv.star_exceptional);
    /// ```
    pub fn invariants(&self) -> Result<DatumInvariants, CarayolError> {
        let p = self.spec.p();
        let r = self.spec.r();
        let m = self.spec.m();
        let tower = self.spec.tower();
        let w = tower
            .wild_exponent()
            .finite()
            .cloned()
            .expect("separable tower");
        let j_infinity = tower
            .j_infinity()
            .expect("nontrivial tower")
            .finite()
            .cloned()
            .expect("separable tower");

        let l = {
            let diff = rat(m as i64) - &w;
            if diff.is_negative() {
                Rat::zero()
            } else {
                diff
            }
        };
        let lambda = floor_int(&(&l / rat(2)))
            .to_u64()
            .expect("level fits in u64");
        let lambda_prime = {
            let half = floor_int(&((rat(1) + &l) / rat(2)));
            let shifted: num_bigint::BigInt = half - 1;
            if shifted.is_negative() {
                0
            } else {
                shifted.to_u64().expect("level fits in u64")
            }
        };

        let bundle = self.spec.bundle()?;
        let target = rat(lambda as i64) * rat_pow(p, -(r as i32));
        let epsilon = bundle.bi.solve(&target)?;
        let case = classify(p, m, &w);
        let star_exceptional = j_infinity == bundle.c && l.is_positive() && is_even(&l);

        Ok(DatumInvariants {
            p,
            r,
            m,
            w,
            l,
            lambda,
            lambda_prime,
            epsilon,
            c: bundle.c,
            j_infinity,
            case,
            star_exceptional,
        })
    }
}

/// True when `x` is an even integer.
fn is_even(x: &Rat) -> bool {
    x.is_integer() && x.numer().is_even()
}

#[cfg(test)]
mod tests {
    use super::*;
    use plfun::ratio;

    #[test]
    fn star_exceptional_example() {
        let datum = CarayolDatum::from_parts(2, &[(rat(5), 2)], 25).unwrap();
        let inv = datum.invariants().unwrap();
        assert_eq!(inv.w, rat(15));
        assert_eq!(inv.l, rat(10));
        assert_eq!(inv.lambda, 5);
        assert_eq!(inv.lambda_prime, 4);
        assert_eq!(inv.c, rat(5));
        assert_eq!(inv.j_infinity, rat(5));
        assert_eq!(inv.epsilon, rat(5));
        assert_eq!(inv.case, StandardCase::NotStandard);
        assert!(inv.star_exceptional);
    }

    #[test]
    fn case_a_example() {
        let datum = CarayolDatum::from_parts(2, &[(rat(1), 1)], 7).unwrap();
        let inv = datum.invariants().unwrap();
        assert_eq!(inv.w, rat(1));
        assert_eq!(inv.l, rat(6));
        assert_eq!(inv.lambda, 3);
        assert_eq!(inv.lambda_prime, 2);
        assert_eq!(inv.c, rat(2));
        assert_eq!(inv.epsilon, rat(2));
        assert_eq!(inv.case, StandardCase::A);
        assert!(!inv.star_exceptional);
    }

    #[test]
    fn case_b_example() {
        let datum = CarayolDatum::from_parts(2, &[(rat(5), 1)], 3).unwrap();
        let inv = datum.invariants().unwrap();
        assert_eq!(inv.w, rat(5));
        assert_eq!(inv.l, rat(0));
        assert_eq!(inv.lambda, 0);
        assert_eq!(inv.lambda_prime, 0);
        assert_eq!(inv.epsilon, rat(0));
        assert_eq!(inv.case, StandardCase::B);
        assert!(!inv.star_exceptional);
    }

    #[test]
    fn case_c_requires_divisible_wild_exponent() {
        // w = 6, m = 7: w < m <= 2w with 2 | 6.
        let datum = CarayolDatum::from_parts(2, &[(rat(6), 1)], 7).unwrap();
        assert_eq!(datum.invariants().unwrap().case, StandardCase::C);
        // Same window but w = 5 odd: not standard.
        assert_eq!(classify(2, 7, &rat(5)), StandardCase::NotStandard);
        // Fractional wild exponents never count as divisible.
        assert_eq!(classify(2, 7, &ratio(13, 3)), StandardCase::NotStandard);
    }

    #[test]
    fn odd_intrinsic_level_shares_lambda() {
        // l odd: lambda == lambda_prime == (l - 1) / 2.
        let datum = CarayolDatum::from_parts(2, &[(rat(2), 1)], 7).unwrap();
        let inv = datum.invariants().unwrap();
        assert_eq!(inv.l, rat(5));
        assert_eq!(inv.lambda, 2);
        assert_eq!(inv.lambda_prime, 2);
    }
}
