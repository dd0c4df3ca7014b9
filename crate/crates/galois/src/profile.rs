use biherbrand::{carayol_jump_checks, verify_symmetry, CheckReport};
use num_bigint::BigInt;
use num_integer::Integer;
use plfun::{is_prime, log_p, rat, rat_pow, JumpTable, PLFun, Rat};

use crate::error::GaloisError;

/// A ramification profile: an irreducible datum of degree `p^r` presented
/// through its symmetric Herbrand-type function.
///
/// The function `psi` lives on `[0, sigma]` with `sigma = sw / p^r`, fixes
/// both endpoints, runs convexly from slope `p^{-r}` to slope `p^r`, is
/// symmetric about the axis `x + y = sigma`, and every jump height is a
/// positive power of `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisProfile {
    p: u32,
    r: u32,
    sw: u64,
    psi: PLFun,
}

impl GaloisProfile {
    /// Runs every profile law as a named check, without failing early.
    pub fn validation_report(p: u32, r: u32, sw: u64, psi: &PLFun) -> CheckReport {
        let mut report = CheckReport::default();
        report.push("prime", is_prime(p), format!("p = {p} must be prime"));
        report.push("degree", r >= 1, format!("r = {r} must be at least 1"));
        report.push(
            "exponent",
            sw >= 1 && p >= 2 && sw % u64::from(p.max(2)) != 0,
            format!("sw = {sw} must be positive and prime to p = {p}"),
        );
        if !report.pass() {
            return report;
        }

        for check in carayol_jump_checks(psi, p, r, sw).checks {
            report.checks.push(check);
        }

        let sigma = rat(sw as i64) * rat_pow(p, -(r as i32));
        let sym = verify_symmetry(psi, &sigma);
        report.push("symmetry", sym.pass, sym.detail);

        let jumps = psi.jump_table(None);
        let all_powers = jumps
            .iter()
            .all(|e| log_p(&e.height, p).map(|k| k >= 1).unwrap_or(false));
        report.push(
            "height-p-powers",
            all_powers,
            "every jump height must be a positive power of p".into(),
        );
        let heights: Vec<&Rat> = jumps.iter().map(|e| &e.height).collect();
        let mirrored = heights.iter().rev().eq(heights.iter());
        report.push(
            "matched-heights",
            mirrored,
            "the height sequence must read the same in both directions".into(),
        );
        report
    }

    /// Validates and wraps profile data.
    ///
    /// # Example
    ///
    /// ```
    /// use galois::GaloisProfile;
    /// use plfun::{rat, ratio, PLFun};
    ///
    /// let psi = PLFun::new(
    ///     rat(0),
    ///     ratio(1, 2),
    ///     vec![(ratio(7, 3), rat(2))],
    ///     Some(ratio(7, 2)),
    /// )
    /// .unwrap();
    /// let profile = GaloisProfile::new(2, 1, 7, psi).unwrap();
    /// assert_eq!(profile.crossing().unwrap(), ratio(7, 3));
    /// ```
    pub fn new(p: u32, r: u32, sw: u64, psi: PLFun) -> Result<Self, GaloisError> {
        let report = Self::validation_report(p, r, sw, &psi);
        if !report.pass() {
            let detail = report
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| format!("{}: {}", c.name, c.detail))
                .collect::<Vec<_>>()
                .join("; ");
            return Err(GaloisError::MalformedProfile { detail });
        }
        Ok(GaloisProfile { p, r, sw, psi })
    }

    /// Builds the function from a jump list `(abscissa, height)` and
    /// validates it: the slope starts at `p^{-r}` and multiplies by each
    /// height in turn.
    ///
    /// # Example
    ///
    /// ```
    /// use galois::GaloisProfile;
    /// use plfun::{rat, ratio};
    ///
    /// let profile = GaloisProfile::from_jumps(
    ///     2,
    ///     2,
    ///     17,
    ///     &[(rat(1), rat(2)), (rat(3), rat(4)), (rat(4), rat(2))],
    /// )
    /// .unwrap();
    /// assert_eq!(profile.sigma(), ratio(17, 4));
    /// ```
    pub fn from_jumps(p: u32, r: u32, sw: u64, jumps: &[(Rat, Rat)]) -> Result<Self, GaloisError> {
        let sigma = rat(sw as i64) * rat_pow(p, -(r as i32));
        let mut slope = rat_pow(p, -(r as i32));
        let mut breaks = Vec::with_capacity(jumps.len());
        for (x, h) in jumps {
            slope *= h;
            breaks.push((x.clone(), slope.clone()));
        }
        let psi = PLFun::new(rat(0), rat_pow(p, -(r as i32)), breaks, Some(sigma))
            .map_err(|e| GaloisError::MalformedProfile {
                detail: e.to_string(),
            })?;
        Self::new(p, r, sw, psi)
    }

    /// The residual characteristic.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// The exponent `r` with `p^r` the wild degree.
    pub fn r(&self) -> u32 {
        self.r
    }

    /// The Swan exponent.
    pub fn sw(&self) -> u64 {
        self.sw
    }

    /// The symmetric function itself.
    pub fn psi(&self) -> &PLFun {
        &self.psi
    }

    /// The right endpoint `sw / p^r`, also the symmetry-axis level.
    pub fn sigma(&self) -> Rat {
        rat(self.sw as i64) * rat_pow(self.p, -(self.r as i32))
    }

    /// The jump table of the function.
    pub fn jumps(&self) -> JumpTable {
        self.psi.jump_table(None)
    }

    /// The axis crossing: the unique `c` with `c + psi(c) = sigma`.
    pub fn crossing(&self) -> Result<Rat, GaloisError> {
        Ok(self.psi.solve_sum(&self.sigma())?)
    }

    /// Rescales by a tame degree `e` prime to `p`: jump abscissae and the
    /// Swan exponent both multiply by `e`.
    ///
    /// # Example
    ///
    /// ```
    /// use galois::GaloisProfile;
    /// use plfun::{rat, ratio};
    ///
    /// let profile = GaloisProfile::from_jumps(
    ///     2,
    ///     2,
    ///     25,
    ///     &[(ratio(13, 3), rat(4)), (ratio(31, 6), rat(4))],
    /// )
    /// .unwrap();
    /// let lifted = profile.tame_lift(3).unwrap();
    /// assert_eq!(lifted.sw(), 75);
    /// assert_eq!(lifted.jumps().abscissae(), vec![rat(13), ratio(31, 2)]);
    /// ```
    pub fn tame_lift(&self, e: u64) -> Result<Self, GaloisError> {
        if e == 0 || e.gcd(&u64::from(self.p)) != 1 {
            return Err(GaloisError::TameConflict { e, p: self.p });
        }
        let factor = rat(e as i64);
        let psi = self.psi.scale_x(&factor)?.scale_y(&factor)?;
        Self::new(self.p, self.r, self.sw * e, psi)
    }

    /// The denominators of the jump abscissae, in order: the obstructions to
    /// integrality that a tame lift must clear.
    ///
    /// # Example
    ///
    /// ```
    /// use galois::GaloisProfile;
    /// use num_bigint::BigInt;
    /// use plfun::{rat, ratio};
    ///
    /// let profile = GaloisProfile::from_jumps(
    ///     2,
    ///     2,
    ///     25,
    ///     &[(ratio(13, 3), rat(4)), (ratio(31, 6), rat(4))],
    /// )
    /// .unwrap();
    /// assert_eq!(
    ///     profile.tame_integrality(),
    ///     vec![BigInt::from(3), BigInt::from(6)]
    /// );
    /// ```
    pub fn tame_integrality(&self) -> Vec<BigInt> {
        self.jumps()
            .abscissae()
            .iter()
            .map(|x| x.denom().clone())
            .collect()
    }
}
