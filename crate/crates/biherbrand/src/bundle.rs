use herbrand::RamTower;
use num_traits::{Signed, Zero};
use plfun::{rat, rat_pow, PLFun, Rat};

use crate::error::BiError;

/// Input data for a bi-Herbrand function: a totally wild ramification tower of
/// degree `p^r` (`r >= 1`) together with a positive Swan conductor exponent
/// `m` prime to `p`.
///
/// # Example
///
/// ```
/// use biherbrand::BiSpec;
/// use herbrand::{Layer, RamTower};
/// use plfun::{rat, ratio};
///
/// let tower = RamTower::new(2, vec![Layer::new(rat(3), 1)], 0).unwrap();
/// let spec = BiSpec::new(tower, 7).unwrap();
/// assert_eq!(spec.sigma(), ratio(7, 2));
/// ```
#[derive(Debug, Clone)]
pub struct BiSpec {
    tower: RamTower,
    m: u64,
}

/// A bi-Herbrand function together with the pieces it is assembled from.
///
/// All four functions live on the interval `[0, sigma]` with
/// `sigma = m / p^r`:
///
/// * `psi_times` is the scaled Herbrand function `p^{-r} psi`;
/// * `psi_plus` is its mirror image across the symmetry axis `x + y = sigma`
///   (it takes a negative value at `0`);
/// * `bi` is the pointwise maximum of the two, the bi-Herbrand function;
/// * `c` is the unique solution of `x + psi_times(x) = sigma`, the point
///   where the scaled Herbrand graph crosses the symmetry axis;
/// * `jbar_infinity` mirrors the largest tower jump across the axis whenever
///   that jump lies inside `[0, sigma)`.
#[derive(Debug, Clone)]
pub struct BiBundle {
    pub psi_times: PLFun,
    pub psi_plus: PLFun,
    pub bi: PLFun,
    pub c: Rat,
    pub jbar_infinity: Option<Rat>,
}

impl BiSpec {
    /// Validates and wraps the tower/exponent pair.
    ///
    /// Requires a separable tower of degree at least `p` (so `r >= 1`) and a
    /// positive exponent `m` not divisible by `p`.
    pub fn new(tower: RamTower, m: u64) -> Result<Self, BiError> {
        if !tower.is_separable() {
            return Err(BiError::InvalidSpec {
                detail: "tower must be separable".into(),
            });
        }
        if tower.r() == 0 {
            return Err(BiError::InvalidSpec {
                detail: "tower must have degree at least p (r >= 1)".into(),
            });
        }
        if m == 0 {
            return Err(BiError::InvalidSpec {
                detail: "exponent m must be positive".into(),
            });
        }
        if m % u64::from(tower.p()) == 0 {
            return Err(BiError::InvalidSpec {
                detail: format!("exponent m = {m} must be prime to p = {}", tower.p()),
            });
        }
        Ok(Self { tower, m })
    }

    /// The underlying ramification tower.
    pub fn tower(&self) -> &RamTower {
        &self.tower
    }

    /// The residual characteristic.
    pub fn p(&self) -> u32 {
        self.tower.p()
    }

    /// The exponent `r` with `p^r` the tower degree.
    pub fn r(&self) -> u32 {
        self.tower.r()
    }

    /// The Swan exponent `m`.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// The symmetry parameter `sigma = m / p^r`, the right endpoint of the
    /// domain and the axis level of the symmetry `x + y = sigma`.
    pub fn sigma(&self) -> Rat {
        rat(self.m as i64) * rat_pow(self.p(), -(self.r() as i32))
    }

    /// Assembles the bi-Herbrand function and its companion data.
    ///
    /// # Example
    ///
    /// ```
    /// use biherbrand::BiSpec;
    /// use herbrand::{Layer, RamTower};
    /// use plfun::{rat, ratio};
    ///
    /// let tower = RamTower::new(2, vec![Layer::new(rat(3), 1)], 0).unwrap();
    /// let bundle = BiSpec::new(tower, 7).unwrap().bundle().unwrap();
    /// let jumps = bundle.bi.jump_table(None);
    /// assert_eq!(jumps.len(), 1);
    /// assert_eq!(jumps.get(0).unwrap().x, ratio(7, 3));
    /// ```
    pub fn bundle(&self) -> Result<BiBundle, BiError> {
        let sigma = self.sigma();
        let scale = rat_pow(self.p(), -(self.r() as i32));
        let scaled = self.tower.build_psi().scale_y(&scale)?;
        let psi_times = scaled.restrict(&sigma)?;
        let psi_plus = scaled.reflect(&sigma)?;
        let bi = psi_times.pointwise_max(&psi_plus)?;
        let c = psi_times.solve_sum(&sigma)?;
        let jbar_infinity = match self.tower.j_infinity() {
            Ok(j) => {
                let j = j.finite().expect("separable tower has finite jumps");
                if *j < sigma {
                    Some(&sigma - psi_times.eval(j)?)
                } else {
                    None
                }
            }
            Err(_) => None,
        };
        Ok(BiBundle {
            psi_times,
            psi_plus,
            bi,
            c,
            jbar_infinity,
        })
    }

    /// The crossing point `c` alone: the unique solution of
    /// `x + p^{-r} psi(x) = sigma`.
    pub fn crossing_point(&self) -> Result<Rat, BiError> {
        let sigma = self.sigma();
        let scale = rat_pow(self.p(), -(self.r() as i32));
        let scaled = self.tower.build_psi().scale_y(&scale)?;
        Ok(scaled.restrict(&sigma)?.solve_sum(&sigma)?)
    }
}

impl BiBundle {
    /// Interior positivity: `0 < bi(x) < x` for `0 < x < sigma`.
    ///
    /// Returns the first probe point violating the bound, if any. Probes are
    /// the interior break abscissae and the midpoints of all pieces.
    pub fn interior_bound_witness(&self) -> Option<Rat> {
        let sigma = self
            .bi
            .domain_end()
            .cloned()
            .expect("bi-Herbrand functions are bounded");
        let mut probes: Vec<Rat> = Vec::new();
        let mut edges: Vec<Rat> = vec![Rat::zero()];
        edges.extend(self.bi.breaks().iter().map(|(x, _)| x.clone()));
        edges.push(sigma.clone());
        for pair in edges.windows(2) {
            probes.push((&pair[0] + &pair[1]) / rat(2));
        }
        probes.extend(self.bi.breaks().iter().map(|(x, _)| x.clone()));
        probes
            .into_iter()
            .filter(|x| x.is_positive() && *x < sigma)
            .find(|x| {
                let y = self.bi.eval(x).expect("probe inside domain");
                !(y.is_positive() && y < *x)
            })
    }
}
