use herbrand::{Layer, RamTower};
use plfun::{is_half_integer, rat, ratio, Rat};

use crate::bundle::BiSpec;
use crate::error::BiError;

/// How the axis crossing of the scaled Herbrand graph is computed in the
/// scenario report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingReading {
    /// Solve the defining equation `4c + psi(c) = m` exactly.
    DefiningEquation,
    /// Use the closed formula `c = (m - 2a) / 6` for a crossing on the
    /// middle piece of the two-jump graph.
    PrintedFormula,
}

/// Diagnostics for one crossing reading at the selected exponent.
#[derive(Debug, Clone)]
pub struct ReadingReport {
    pub reading: CrossingReading,
    /// The crossing point under this reading.
    pub c: Rat,
    /// The three would-be jumps `a < c < z` of the symmetric function.
    pub jumps: [Rat; 3],
    /// Whether `c` lies strictly between the tower jumps `a` and `b`.
    pub in_window: bool,
    /// Whether `a < c < z` holds strictly.
    pub jumps_increasing: bool,
    /// Whether `z = (m - a)/4` is a half-integer that is not an integer.
    pub z_half_not_integral: bool,
    /// Whether `3c` is a half-integer that is not an integer.
    pub three_c_half_not_integral: bool,
}

impl ReadingReport {
    /// True when every diagnostic holds under this reading.
    pub fn passes_diagnostics(&self) -> bool {
        self.in_window
            && self.jumps_increasing
            && self.z_half_not_integral
            && self.three_c_half_not_integral
    }
}

/// Result of the scenario search: the least admissible exponent and the
/// diagnostics under both crossing readings.
#[derive(Debug, Clone)]
pub struct ScenarioReport {
    /// The lower tower jump (an odd integer).
    pub a: u64,
    /// The upper tower jump.
    pub b: Rat,
    /// The least admissible exponent.
    pub m: u64,
    /// The mirrored jump `z = (m - a)/4`, shared by both readings.
    pub z: Rat,
    /// Diagnostics under the defining equation and the closed formula.
    pub readings: [ReadingReport; 2],
}

fn reading_report(
    reading: CrossingReading,
    c: Rat,
    a: u64,
    b: &Rat,
    z: &Rat,
) -> ReadingReport {
    let a_rat = rat(a as i64);
    let in_window = a_rat < c && c < *b;
    let jumps_increasing = a_rat < c && c < *z;
    let three_c = rat(3) * &c;
    ReadingReport {
        reading,
        jumps: [a_rat, c.clone(), z.clone()],
        in_window,
        jumps_increasing,
        z_half_not_integral: is_half_integer(z),
        three_c_half_not_integral: is_half_integer(&three_c),
        c,
    }
}

/// Searches for the least odd exponent `m` admissible for the degree-4 tower
/// with jumps `a < b` (`a` an odd integer), then reports the crossing
/// diagnostics under both readings.
///
/// Admissibility requires, with `c_i` the exact crossing (`4c + psi(c) = m`)
/// and `c_ii = (m - 2a)/6` the closed formula:
///
/// * `a < c_i < b` and `a < c_ii < b`;
/// * `m` is not congruent to `2a` modulo `3`;
/// * `m` is congruent to `a + 2` modulo `4`.
///
/// The search stops at `m >= 6b + 2a`, where the closed-formula crossing
/// would leave the window for good; exhausting the range yields
/// [`BiError::NoAdmissibleM`].
///
/// # Example
///
/// ```
/// use biherbrand::{scenario_97, CrossingReading};
/// use plfun::{rat, ratio};
///
/// let report = scenario_97(1, &rat(6)).unwrap();
/// assert_eq!(report.m, 15);
/// assert_eq!(report.readings[0].c, ratio(8, 3));
/// assert_eq!(report.readings[1].c, ratio(13, 6));
/// assert!(!report.readings[0].passes_diagnostics());
/// assert!(report.readings[1].passes_diagnostics());
/// ```
pub fn scenario_97(a: u64, b: &Rat) -> Result<ScenarioReport, BiError> {
    if a == 0 || a % 2 == 0 {
        return Err(BiError::InvalidSpec {
            detail: format!("lower jump a = {a} must be an odd positive integer"),
        });
    }
    let a_rat = rat(a as i64);
    if *b <= a_rat {
        return Err(BiError::InvalidSpec {
            detail: format!("upper jump b = {b} must exceed the lower jump a = {a}"),
        });
    }
    let bound: Rat = rat(6) * b + rat(2) * &a_rat;
    let tower = RamTower::new(
        2,
        vec![Layer::new(a_rat.clone(), 1), Layer::new(b.clone(), 1)],
        0,
    )?;

    // Least positive residue of a + 2 modulo 4 (odd since a is); step by 4
    // to keep the congruence.
    let mut m = (a + 2) % 4;
    while rat(m as i64) < bound {
        if m % 3 != (2 * a) % 3 {
            let spec = BiSpec::new(tower.clone(), m)?;
            let c_exact = spec.crossing_point()?;
            let c_formula = ratio(m as i64 - 2 * a as i64, 6);
            let window = |c: &Rat| a_rat < *c && *c < *b;
            if window(&c_exact) && window(&c_formula) {
                let z = ratio(m as i64 - a as i64, 4);
                let readings = [
                    reading_report(CrossingReading::DefiningEquation, c_exact, a, b, &z),
                    reading_report(CrossingReading::PrintedFormula, c_formula, a, b, &z),
                ];
                return Ok(ScenarioReport {
                    a,
                    b: b.clone(),
                    m,
                    z,
                    readings,
                });
            }
        }
        m += 4;
    }
    Err(BiError::NoAdmissibleM { a, b: b.clone() })
}
