//! Ramification data of totally wildly ramified towers and their Herbrand
//! functions.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use plfun::{int_pow, is_prime, rat_pow, PLFun, Rat};

use crate::error::{ExtendedRat, TowerError};

/// One wild layer: the ramification jump (in base-field coordinates) and the
/// log-degree `s ≥ 1` of the layer, of degree `p^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    /// The ramification jump, a positive rational in base-field coordinates.
    pub jump: Rat,
    /// The log-degree of the layer; the layer has degree `p^s`.
    pub s: u32,
}

impl Layer {
    /// Convenience constructor.
    pub fn new(jump: Rat, s: u32) -> Self {
        Layer { jump, s }
    }
}

/// A totally ramified tower of degree `p^r` over a `p`-adic base, described
/// by its strictly increasing ramification jumps, plus an optional purely
/// inseparable part of log-degree `insep_s` on top.
///
/// The Herbrand function, wild exponent and largest jump are all derived
/// from this data. The tower is *separable* when `insep_s == 0`; towers
/// with an inseparable part have infinite wild exponent.
///
/// # Example
///
/// ```
/// use herbrand::{Layer, RamTower};
/// use plfun::rat;
///
/// let t = RamTower::new(2, vec![Layer::new(rat(1), 1), Layer::new(rat(3), 1)], 0).unwrap();
/// assert_eq!(t.wild_exponent().finite(), Some(&rat(7)));
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamTower {
    p: u32,
    layers: Vec<Layer>,
    insep_s: u32,
}

impl RamTower {
    /// Validates and builds a tower: `p` prime, jumps positive and strictly
    /// increasing, every layer exponent at least 1.
    pub fn new(p: u32, layers: Vec<Layer>, insep_s: u32) -> Result<Self, TowerError> {
        if !is_prime(p) {
            return Err(TowerError::InvalidTower {
                detail: format!("p = {p} is not prime"),
            });
        }
        let mut prev: Option<&Rat> = None;
        for layer in &layers {
            if layer.s == 0 {
                return Err(TowerError::InvalidTower {
                    detail: format!("layer at jump {} has exponent 0", layer.jump),
                });
            }
            if !layer.jump.is_positive() {
                return Err(TowerError::InvalidTower {
                    detail: format!("jump {} is not positive", layer.jump),
                });
            }
            if let Some(prev) = prev {
                if &layer.jump <= prev {
                    return Err(TowerError::InvalidTower {
                        detail: format!(
                            "jumps {prev} and {} are not strictly increasing",
                            layer.jump
                        ),
                    });
                }
            }
            prev = Some(&layer.jump);
        }
        Ok(RamTower { p, layers, insep_s })
    }

    /// The residue characteristic.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// The wild layers, bottom to top.
    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    /// The log-degree of the inseparable part.
    pub fn insep_s(&self) -> u32 {
        self.insep_s
    }

    /// Whether the tower is separable.
    pub fn is_separable(&self) -> bool {
        self.insep_s == 0
    }

    /// Total log-degree `r` (separable layers plus inseparable part).
    pub fn r(&self) -> u32 {
        self.separable_log() + self.insep_s
    }

    /// Log-degree of the separable part.
    pub fn separable_log(&self) -> u32 {
        self.layers.iter().map(|l| l.s).sum()
    }

    /// Total degree `p^r`.
    pub fn degree(&self) -> BigInt {
        int_pow(self.p, self.r())
    }

    /// The Herbrand function `ψ` of the separable part on `[0, ∞)`: slope 1
    /// below the first jump, multiplied by `p^s` at each jump.
    ///
    /// # Example
    ///
    /// ```
    /// use herbrand::{Layer, RamTower};
    /// use plfun::rat;
    ///
    /// let t = RamTower::new(2, vec![Layer::new(rat(1), 1), Layer::new(rat(3), 1)], 0).unwrap();
    /// let psi = t.build_psi();
    /// assert_eq!(psi.eval(&rat(4)).unwrap(), rat(9));
    /// ```
    pub fn build_psi(&self) -> PLFun {
        let mut slope_log = 0u32;
        let breaks = self
            .layers
            .iter()
            .map(|layer| {
                slope_log += layer.s;
                (layer.jump.clone(), rat_pow(self.p, slope_log as i32))
            })
            .collect();
        PLFun::new(Rat::zero(), rat_pow(self.p, 0), breaks, None)
            .expect("tower invariants imply a valid Herbrand function")
    }

    /// The inverse Herbrand function `φ = ψ⁻¹` on `[0, ∞)`.
    pub fn phi(&self) -> PLFun {
        self.build_psi()
            .invert()
            .expect("ψ vanishes at 0, so it inverts")
    }

    /// The largest jump `j_∞`; infinite when the tower has an inseparable
    /// part, an error when the tower is trivial.
    pub fn j_infinity(&self) -> Result<ExtendedRat, TowerError> {
        if self.insep_s > 0 {
            return Ok(ExtendedRat::Infinite);
        }
        self.layers
            .last()
            .map(|l| ExtendedRat::Finite(l.jump.clone()))
            .ok_or(TowerError::EmptyTower)
    }

    /// The wild exponent `w`: zero for trivial towers, infinite when there
    /// is an inseparable part, and otherwise `p^r · j_∞ − ψ(j_∞)`, the
    /// height of the asymptote `ψ(x) = p^r·x − w`.
    pub fn wild_exponent(&self) -> ExtendedRat {
        if self.insep_s > 0 {
            return ExtendedRat::Infinite;
        }
        let Some(last) = self.layers.last() else {
            return ExtendedRat::Finite(Rat::zero());
        };
        let psi = self.build_psi();
        let at_top = psi.eval(&last.jump).expect("jump is in the domain");
        let r = self.separable_log();
        ExtendedRat::Finite(rat_pow(self.p, r as i32) * &last.jump - at_top)
    }

    /// Whether `x` is one of the ramification jumps.
    pub fn is_jump(&self, x: &Rat) -> bool {
        self.layers.iter().any(|l| &l.jump == x)
    }

    /// Base change by a tamely ramified extension of degree `e` prime to
    /// `p`: jumps scale by `e`, layer degrees and jump heights are
    /// unchanged. The lifted Herbrand function satisfies
    /// `ψ_lifted(x) = e·ψ(x/e)`.
    ///
    /// # Example
    ///
    /// ```
    /// use herbrand::{Layer, RamTower};
    /// use plfun::{rat, ratio};
    ///
    /// let t = RamTower::new(2, vec![Layer::new(ratio(13, 3), 2)], 0).unwrap();
    /// let lifted = t.tame_lift(3).unwrap();
    /// assert_eq!(lifted.layers()[0].jump, rat(13));
    /// ```
    pub fn tame_lift(&self, e: u32) -> Result<Self, TowerError> {
        if e == 0 || num_integer::gcd(e as u64, self.p as u64) != 1 {
            return Err(TowerError::TameConflict { e, p: self.p });
        }
        let e_rat = plfun::rat(e as i64);
        let layers = self
            .layers
            .iter()
            .map(|l| Layer::new(&l.jump * &e_rat, l.s))
            .collect();
        RamTower::new(self.p, layers, self.insep_s)
    }

    /// Splits the tower between layers `i − 1` and `i` into a bottom tower
    /// (the first `i` layers) and the top tower written in the bottom
    /// field's coordinates: each remaining jump `j` becomes `ψ_bottom(j)`,
    /// with layer degrees unchanged. The inseparable part stays on top.
    ///
    /// The two parts compose back to the whole:
    /// `ψ = ψ_bottom.then(ψ_top)`, and the wild exponents satisfy
    /// `w = deg(top) · w_bottom + w_top`.
    pub fn split_at(&self, i: usize) -> Result<(RamTower, RamTower), TowerError> {
        if i > self.layers.len() {
            return Err(TowerError::LayerOutOfRange {
                index: i,
                len: self.layers.len(),
            });
        }
        let bottom = RamTower::new(self.p, self.layers[..i].to_vec(), 0)?;
        let psi_bottom = bottom.build_psi();
        let top_layers = self.layers[i..]
            .iter()
            .map(|l| {
                Ok(Layer::new(
                    psi_bottom.eval(&l.jump).map_err(TowerError::from)?,
                    l.s,
                ))
            })
            .collect::<Result<Vec<_>, TowerError>>()?;
        let top = RamTower::new(self.p, top_layers, self.insep_s)?;
        Ok((bottom, top))
    }
}

impl std::fmt::Display for RamTower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "p = {}, layers [", self.p)?;
        for (i, layer) in self.layers.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({}, {})", layer.jump, layer.s)?;
        }
        write!(f, "]")?;
        if self.insep_s > 0 {
            write!(f, ", inseparable part of log-degree {}", self.insep_s)?;
        }
        Ok(())
    }
}
