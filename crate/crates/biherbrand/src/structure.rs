use plfun::{rat, rat_pow, PLFun, Rat};

use crate::error::BiError;

/// The structure function attached to `(p, r, m)`: the unbounded convex
/// piecewise-linear function with value `m (p^r - 1) / p^{2r}` at `0`, slope
/// `p^{-r}` up to `sigma = m / p^r`, and slope `1` beyond.
///
/// # Example
///
/// ```
/// use biherbrand::structure_function;
/// use plfun::{rat, ratio};
///
/// let phi = structure_function(2, 1, 7);
/// assert_eq!(phi.value_at_zero(), &ratio(7, 4));
/// assert_eq!(phi.eval(&ratio(7, 2)).unwrap(), ratio(7, 2));
/// assert_eq!(phi.eval(&rat(5)).unwrap(), rat(5));
/// ```
pub fn structure_function(p: u32, r: u32, m: u64) -> PLFun {
    let pr = rat_pow(p, r as i32);
    let inv = rat_pow(p, -(r as i32));
    let sigma = rat(m as i64) * &inv;
    let v0 = rat(m as i64) * (&pr - rat(1)) * rat_pow(p, -2 * r as i32);
    PLFun::new(v0, inv, vec![(sigma, rat(1))], None).expect("structure function is well formed")
}

/// Composes a symmetric function `psi` on `[0, sigma]` with the structure
/// function: the decomposition function `Sigma = Phi o psi`.
///
/// Requires `psi` to be defined on `[0, sigma]` with `psi(sigma) = sigma`;
/// the result again lives on `[0, sigma]` and satisfies
/// `Sigma(x) = Phi(0) + p^{-r} psi(x)` there.
///
/// # Example
///
/// ```
/// use biherbrand::{decomposition_function, BiSpec};
/// use herbrand::{Layer, RamTower};
/// use plfun::{rat, ratio};
///
/// let tower = RamTower::new(2, vec![Layer::new(rat(1), 1)], 0).unwrap();
/// let spec = BiSpec::new(tower, 7).unwrap();
/// let bi = spec.bundle().unwrap().bi;
/// let sigma = decomposition_function(&bi, 2, 1, 7).unwrap();
/// assert_eq!(sigma.value_at_zero(), &ratio(7, 4));
/// ```
pub fn decomposition_function(psi: &PLFun, p: u32, r: u32, m: u64) -> Result<PLFun, BiError> {
    let sigma: Rat = rat(m as i64) * rat_pow(p, -(r as i32));
    if psi.domain_end() != Some(&sigma) {
        return Err(BiError::InvalidSpec {
            detail: format!("function must be defined on [0, {sigma}]"),
        });
    }
    let top = psi.eval(&sigma)?;
    if top != sigma {
        return Err(BiError::InvalidSpec {
            detail: format!("function must fix the endpoint: got {top}, expected {sigma}"),
        });
    }
    Ok(psi.then(&structure_function(p, r, m))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::BiSpec;
    use herbrand::{Layer, RamTower};
    use plfun::ratio;

    #[test]
    fn structure_values_at_zero() {
        assert_eq!(structure_function(2, 1, 1).value_at_zero(), &ratio(1, 4));
        assert_eq!(structure_function(2, 1, 7).value_at_zero(), &ratio(7, 4));
        assert_eq!(structure_function(3, 1, 7).value_at_zero(), &ratio(14, 9));
    }

    #[test]
    fn structure_slopes_and_break() {
        let phi = structure_function(2, 2, 17);
        assert_eq!(phi.initial_slope(), &ratio(1, 4));
        assert_eq!(phi.final_slope(), &rat(1));
        assert_eq!(phi.breaks(), &[(ratio(17, 4), rat(1))]);
        assert_eq!(phi.domain_end(), None);
    }

    #[test]
    fn decomposition_slopes_for_two_layer_example() {
        let tower = RamTower::new(
            2,
            vec![Layer::new(rat(1), 1), Layer::new(rat(5), 1)],
            0,
        )
        .unwrap();
        let spec = BiSpec::new(tower, 17).unwrap();
        let bi = spec.bundle().unwrap().bi;
        let sig = decomposition_function(&bi, 2, 2, 17).unwrap();
        let mut slopes = vec![sig.initial_slope().clone()];
        slopes.extend(sig.breaks().iter().map(|(_, s)| s.clone()));
        assert_eq!(slopes, vec![ratio(1, 16), ratio(1, 8), ratio(1, 2), rat(1)]);
        assert_eq!(sig.value_at_zero(), &(rat(17) * ratio(3, 16)));
    }

    #[test]
    fn decomposition_rejects_mismatched_domain() {
        let tower = RamTower::new(2, vec![Layer::new(rat(1), 1)], 0).unwrap();
        let bi = BiSpec::new(tower, 7).unwrap().bundle().unwrap().bi;
        assert!(matches!(
            decomposition_function(&bi, 2, 1, 9),
            Err(BiError::InvalidSpec { .. })
        ));
    }
}
