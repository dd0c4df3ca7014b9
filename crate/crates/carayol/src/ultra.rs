use num_integer::Integer;
use num_traits::Signed;
use plfun::{rat, rat_pow, Rat};

use crate::datum::CarayolDatum;
use crate::error::CarayolError;

/// Direction of the ultrametric parameter conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UltraDirection {
    /// Convert an `a`-side value to the `delta` side by solving the
    /// bi-Herbrand function.
    AToDelta,
    /// Convert a `delta`-side value to the `a` side by evaluating it.
    DeltaToA,
}

/// Why the conversion range closes up at the crossing point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsilonCondition {
    /// The largest tower jump lies below the crossing and the intrinsic
    /// level is even.
    JInfBelowCrossing,
    /// The datum is star-exceptional: the largest jump equals the crossing
    /// with positive even intrinsic level.
    StarExceptional,
}

/// The converted value together with the conversion's natural range.
#[derive(Debug, Clone)]
pub struct ConversionReport {
    pub direction: UltraDirection,
    pub input: Rat,
    pub output: Rat,
    /// Largest meaningful `a`-side value: `lambda / p^r`.
    pub max_a: Rat,
    /// Largest meaningful `delta`-side value: the point `epsilon` where the
    /// bi-Herbrand function reaches `max_a`.
    pub max_delta: Rat,
    /// Whether `epsilon` coincides with the crossing point.
    pub epsilon_equals_c: bool,
    /// The structural reason for the coincidence, when one applies.
    pub condition: Option<EpsilonCondition>,
}

/// Converts between the two ultrametric parameters of a datum.
///
/// The `a`-side parameter is a height below `lambda / p^r`; the `delta`-side
/// parameter is an abscissa below `epsilon`. The bi-Herbrand function is the
/// exact change of variables between them.
///
/// # Example
///
/// ```
/// use carayol::{ultrametric_convert, CarayolDatum, EpsilonCondition, UltraDirection};
/// use plfun::{rat, ratio};
///
/// let datum = CarayolDatum::from_parts(2, &[(rat(1), 1)], 7).unwrap();
/// let report =
///     ultrametric_convert(&datum, UltraDirection::AToDelta, &ratio(3, 2)).unwrap();
/// assert_eq!(report.output, rat(2));
/// assert_eq!(report.condition, Some(EpsilonCondition::JInfBelowCrossing));
/// ```
pub fn ultrametric_convert(
    datum: &CarayolDatum,
    direction: UltraDirection,
    value: &Rat,
) -> Result<ConversionReport, CarayolError> {
    let inv = datum.invariants()?;
    let bundle = datum.bundle()?;
    let max_a = rat(inv.lambda as i64) * rat_pow(inv.p, -(inv.r as i32));
    let max_delta = inv.epsilon.clone();
    let output = match direction {
        UltraDirection::AToDelta => bundle.bi.solve(value)?,
        UltraDirection::DeltaToA => bundle.bi.eval(value)?,
    };
    let epsilon_equals_c = inv.epsilon == inv.c;
    let condition = if inv.j_infinity < inv.c && is_even(&inv.l) && inv.l.is_positive() {
        Some(EpsilonCondition::JInfBelowCrossing)
    } else if inv.star_exceptional {
        Some(EpsilonCondition::StarExceptional)
    } else {
        None
    };
    Ok(ConversionReport {
        direction,
        input: value.clone(),
        output,
        max_a,
        max_delta,
        epsilon_equals_c,
        condition,
    })
}

/// True when `x` is an even integer.
fn is_even(x: &Rat) -> bool {
    x.is_integer() && x.numer().is_even()
}
