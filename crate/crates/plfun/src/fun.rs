//! Continuous, strictly increasing piecewise-linear functions with exact
//! rational break data.
//!
//! A [`PLFun`] is determined by its value at 0, an initial slope, a finite
//! ordered list of breaks `(x, slope_after)` and an optional domain end. The
//! domain is `[0, domain_end]`, or `[0, ∞)` when no end is given. Values may
//! be negative; slopes are always positive, so every function here is
//! strictly increasing and invertible on its range.
//!
//! Functions are kept in canonical form: break abscissae are strictly
//! increasing, strictly positive and strictly below the domain end, and no
//! two adjacent slopes are equal. Canonical form makes structural equality
//! coincide with pointwise equality, so `==` is meaningful.

use num_traits::{Signed, Zero};

use crate::error::PlError;
use crate::jump::{JumpEntry, JumpTable};
use crate::rat::Rat;

/// A continuous, strictly increasing piecewise-linear function on `[0, X]`
/// or `[0, ∞)`, with exact rational breaks and slopes.
///
/// # Example
///
/// ```
/// use plfun::{PLFun, rat, ratio};
///
/// // Slope 1 up to x = 1, slope 2 beyond, on [0, ∞).
/// let f = PLFun::new(rat(0), rat(1), vec![(rat(1), rat(2))], None).unwrap();
/// assert_eq!(f.eval(&rat(3)).unwrap(), rat(5));
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLFun {
    value_at_zero: Rat,
    initial_slope: Rat,
    breaks: Vec<(Rat, Rat)>,
    domain_end: Option<Rat>,
}

impl PLFun {
    /// Builds a function from raw break data, validating and canonicalising.
    ///
    /// `breaks` lists `(abscissa, slope_after)` pairs; abscissae must be
    /// strictly increasing, strictly positive and strictly below
    /// `domain_end` when one is given. All slopes must be positive. Breaks
    /// that do not change the slope are merged away.
    pub fn new(
        value_at_zero: Rat,
        initial_slope: Rat,
        breaks: Vec<(Rat, Rat)>,
        domain_end: Option<Rat>,
    ) -> Result<Self, PlError> {
        if !initial_slope.is_positive() {
            return Err(PlError::NonPositiveSlope {
                slope: initial_slope,
            });
        }
        let mut prev_x: Option<&Rat> = None;
        for (x, slope) in &breaks {
            if !slope.is_positive() {
                return Err(PlError::NonPositiveSlope {
                    slope: slope.clone(),
                });
            }
            if !x.is_positive() {
                return Err(PlError::BadBreaks {
                    detail: format!("break abscissa {x} is not positive"),
                });
            }
            if let Some(prev) = prev_x {
                if x <= prev {
                    return Err(PlError::BadBreaks {
                        detail: format!("abscissae {prev} and {x} are not strictly increasing"),
                    });
                }
            }
            prev_x = Some(x);
        }
        if let Some(end) = &domain_end {
            if !end.is_positive() {
                return Err(PlError::BadDomainEnd {
                    detail: format!("domain end {end} is not positive"),
                });
            }
            if let Some(last) = prev_x {
                if last >= end {
                    return Err(PlError::BadDomainEnd {
                        detail: format!("break {last} is not strictly below the domain end {end}"),
                    });
                }
            }
        }

        // Canonicalise: drop breaks that do not change the slope.
        let mut canonical: Vec<(Rat, Rat)> = Vec::with_capacity(breaks.len());
        let mut current = initial_slope.clone();
        for (x, slope) in breaks {
            if slope != current {
                current = slope.clone();
                canonical.push((x, slope));
            }
        }

        Ok(PLFun {
            value_at_zero,
            initial_slope,
            breaks: canonical,
            domain_end,
        })
    }

    /// The identity function on `[0, ∞)`.
    pub fn identity() -> Self {
        PLFun::line(Rat::zero(), Rat::from_integer(1.into()), None).expect("identity is valid")
    }

    /// The line `x ↦ value_at_zero + slope·x`.
    pub fn line(value_at_zero: Rat, slope: Rat, domain_end: Option<Rat>) -> Result<Self, PlError> {
        PLFun::new(value_at_zero, slope, Vec::new(), domain_end)
    }

    /// Builds a bounded function from its vertex list.
    ///
    /// Requires at least two vertices, the first at abscissa 0, with strictly
    /// increasing abscissae and values.
    pub fn from_vertices(vertices: &[(Rat, Rat)]) -> Result<Self, PlError> {
        if vertices.len() < 2 {
            return Err(PlError::BadBreaks {
                detail: "a vertex list needs at least two points".into(),
            });
        }
        if !vertices[0].0.is_zero() {
            return Err(PlError::BadBreaks {
                detail: format!("first vertex abscissa must be 0, found {}", vertices[0].0),
            });
        }
        let mut breaks = Vec::with_capacity(vertices.len().saturating_sub(2));
        let mut initial_slope = None;
        for pair in vertices.windows(2) {
            let (x0, y0) = &pair[0];
            let (x1, y1) = &pair[1];
            if x1 <= x0 {
                return Err(PlError::BadBreaks {
                    detail: format!("vertex abscissae {x0} and {x1} are not strictly increasing"),
                });
            }
            let slope = (y1 - y0) / (x1 - x0);
            if !slope.is_positive() {
                return Err(PlError::NonPositiveSlope { slope });
            }
            match initial_slope {
                None => initial_slope = Some(slope),
                Some(_) => breaks.push((x0.clone(), slope)),
            }
        }
        let end = vertices.last().map(|(x, _)| x.clone());
        PLFun::new(
            vertices[0].1.clone(),
            initial_slope.expect("at least one segment"),
            breaks,
            end,
        )
    }

    /// The value at 0.
    pub fn value_at_zero(&self) -> &Rat {
        &self.value_at_zero
    }

    /// The slope on the first linear piece.
    pub fn initial_slope(&self) -> &Rat {
        &self.initial_slope
    }

    /// The break list `(abscissa, slope_after)` in canonical form.
    pub fn breaks(&self) -> &[(Rat, Rat)] {
        &self.breaks
    }

    /// The domain end, or `None` for `[0, ∞)`.
    pub fn domain_end(&self) -> Option<&Rat> {
        self.domain_end.as_ref()
    }

    /// The slope on the final linear piece (the ray slope when unbounded).
    pub fn final_slope(&self) -> &Rat {
        self.breaks
            .last()
            .map(|(_, s)| s)
            .unwrap_or(&self.initial_slope)
    }

    /// The value at the domain end, when the domain is bounded.
    pub fn value_at_end(&self) -> Option<Rat> {
        self.domain_end
            .as_ref()
            .map(|end| self.eval(end).expect("domain end is in the domain"))
    }

    /// Whether `x` lies in the domain.
    pub fn contains(&self, x: &Rat) -> bool {
        !x.is_negative() && self.domain_end.as_ref().is_none_or(|end| x <= end)
    }

    fn check_in_domain(&self, x: &Rat) -> Result<(), PlError> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(PlError::OutOfDomain { x: x.clone() })
        }
    }

    /// Evaluates the function at `x`.
    pub fn eval(&self, x: &Rat) -> Result<Rat, PlError> {
        self.check_in_domain(x)?;
        let mut value = self.value_at_zero.clone();
        let mut prev_x = Rat::zero();
        let mut slope = &self.initial_slope;
        for (bx, bs) in &self.breaks {
            if bx >= x {
                break;
            }
            value += slope * (bx - &prev_x);
            prev_x = bx.clone();
            slope = bs;
        }
        value += slope * (x - &prev_x);
        Ok(value)
    }

    /// The slope immediately to the right of `x` (the initial slope at 0).
    pub fn slope_right(&self, x: &Rat) -> &Rat {
        let mut slope = &self.initial_slope;
        for (bx, bs) in &self.breaks {
            if bx <= x {
                slope = bs;
            } else {
                break;
            }
        }
        slope
    }

    /// The slope immediately to the left of `x` (the initial slope for any
    /// `x` at or below the first break).
    pub fn slope_left(&self, x: &Rat) -> &Rat {
        let mut slope = &self.initial_slope;
        for (bx, bs) in &self.breaks {
            if bx < x {
                slope = bs;
            } else {
                break;
            }
        }
        slope
    }

    /// Solves `f(x) = y` exactly; the solution is unique since `f` is
    /// strictly increasing. Errors when `y` is outside the range.
    pub fn solve(&self, y: &Rat) -> Result<Rat, PlError> {
        if y < &self.value_at_zero {
            return Err(PlError::OutOfRange { y: y.clone() });
        }
        let mut prev_x = Rat::zero();
        let mut prev_val = self.value_at_zero.clone();
        let mut slope = &self.initial_slope;
        for (bx, bs) in &self.breaks {
            let val = &prev_val + slope * (bx - &prev_x);
            if &val >= y {
                return Ok(&prev_x + (y - &prev_val) / slope);
            }
            prev_x = bx.clone();
            prev_val = val;
            slope = bs;
        }
        let x = &prev_x + (y - &prev_val) / slope;
        match &self.domain_end {
            Some(end) if &x > end => Err(PlError::OutOfRange { y: y.clone() }),
            _ => Ok(x),
        }
    }

    /// Solves `x + f(x) = s` exactly; `x ↦ x + f(x)` is strictly increasing,
    /// so the solution is unique. Errors when `s` is out of reach.
    pub fn solve_sum(&self, s: &Rat) -> Result<Rat, PlError> {
        if s < &self.value_at_zero {
            return Err(PlError::OutOfRange { y: s.clone() });
        }
        let one = Rat::from_integer(1.into());
        let mut prev_x = Rat::zero();
        let mut prev_val = self.value_at_zero.clone();
        let mut slope = &self.initial_slope;
        for (bx, bs) in &self.breaks {
            let val = &prev_val + slope * (bx - &prev_x);
            if &(&val + bx) >= s {
                return Ok(&prev_x + (s - &prev_val - &prev_x) / (slope + &one));
            }
            prev_x = bx.clone();
            prev_val = val;
            slope = bs;
        }
        let x = &prev_x + (s - &prev_val - &prev_x) / (slope + &one);
        match &self.domain_end {
            Some(end) if &x > end => Err(PlError::OutOfRange { y: s.clone() }),
            _ => Ok(x),
        }
    }

    /// Restricts the domain to `[0, new_end]`.
    pub fn restrict(&self, new_end: &Rat) -> Result<Self, PlError> {
        if !new_end.is_positive() {
            return Err(PlError::BadDomainEnd {
                detail: format!("domain end {new_end} is not positive"),
            });
        }
        if let Some(end) = &self.domain_end {
            if new_end > end {
                return Err(PlError::BadDomainEnd {
                    detail: format!("cannot extend the domain from {end} to {new_end}"),
                });
            }
        }
        let breaks = self
            .breaks
            .iter()
            .filter(|(x, _)| x < new_end)
            .cloned()
            .collect();
        PLFun::new(
            self.value_at_zero.clone(),
            self.initial_slope.clone(),
            breaks,
            Some(new_end.clone()),
        )
    }

    /// Post-multiplies values by `k > 0`: returns `x ↦ k·f(x)`.
    pub fn scale_y(&self, k: &Rat) -> Result<Self, PlError> {
        if !k.is_positive() {
            return Err(PlError::NonPositiveSlope { slope: k.clone() });
        }
        PLFun::new(
            &self.value_at_zero * k,
            &self.initial_slope * k,
            self.breaks
                .iter()
                .map(|(x, s)| (x.clone(), s * k))
                .collect(),
            self.domain_end.clone(),
        )
    }

    /// Stretches the abscissa by `k > 0`: returns `x ↦ f(x/k)`.
    pub fn scale_x(&self, k: &Rat) -> Result<Self, PlError> {
        if !k.is_positive() {
            return Err(PlError::NonPositiveSlope { slope: k.clone() });
        }
        PLFun::new(
            self.value_at_zero.clone(),
            &self.initial_slope / k,
            self.breaks
                .iter()
                .map(|(x, s)| (x * k, s / k))
                .collect(),
            self.domain_end.as_ref().map(|end| end * k),
        )
    }

    /// Composes in diagram order: `self.then(g)` is `x ↦ g(self(x))`.
    ///
    /// Requires the range of `self` to lie inside the domain of `g`. Breaks
    /// of the composite sit at the breaks of `self` and at the preimages
    /// under `self` of the breaks of `g`.
    ///
    /// # Example
    ///
    /// ```
    /// use plfun::{PLFun, rat};
    ///
    /// let f = PLFun::new(rat(0), rat(1), vec![(rat(1), rat(2))], None).unwrap();
    /// let g = PLFun::new(rat(0), rat(1), vec![(rat(5), rat(2))], None).unwrap();
    /// let h = f.then(&g);
    /// assert_eq!(
    ///     h.unwrap().breaks(),
    ///     &[(rat(1), rat(2)), (rat(3), rat(4))]
    /// );
    /// ```
    pub fn then(&self, g: &PLFun) -> Result<Self, PlError> {
        if self.value_at_zero.is_negative() {
            return Err(PlError::DomainMismatch {
                detail: format!(
                    "inner value {} at 0 lies below the outer domain",
                    self.value_at_zero
                ),
            });
        }
        let self_end_value = self.value_at_end();
        if let Some(g_end) = &g.domain_end {
            match &self_end_value {
                None => {
                    return Err(PlError::DomainMismatch {
                        detail: "inner function is unbounded but outer domain is bounded".into(),
                    });
                }
                Some(v) if v > g_end => {
                    return Err(PlError::DomainMismatch {
                        detail: format!("inner range reaches {v}, beyond the outer domain {g_end}"),
                    });
                }
                _ => {}
            }
        }

        // Candidate break abscissae: breaks of self, plus preimages of g's
        // breaks that fall strictly inside the domain.
        let mut xs: Vec<Rat> = self.breaks.iter().map(|(x, _)| x.clone()).collect();
        for (gb, _) in &g.breaks {
            if gb > &self.value_at_zero && self_end_value.as_ref().is_none_or(|v| gb < v) {
                xs.push(self.solve(gb)?);
            }
        }
        xs.sort();
        xs.dedup();

        let value_at_zero = g.eval(&self.value_at_zero)?;
        let initial_slope = g.slope_right(&self.value_at_zero) * &self.initial_slope;
        let mut breaks = Vec::with_capacity(xs.len());
        for x in xs {
            let image = self.eval(&x)?;
            let slope = g.slope_right(&image) * self.slope_right(&x);
            breaks.push((x, slope));
        }
        PLFun::new(value_at_zero, initial_slope, breaks, self.domain_end.clone())
    }

    /// The inverse function, with reciprocal slopes and breaks at the images
    /// of this function's breaks.
    ///
    /// Only functions vanishing at 0 are invertible within this type: the
    /// inverse of `f` with `f(0) = v ≠ 0` would live on `[v, …]`, and domains
    /// here always start at 0.
    pub fn invert(&self) -> Result<Self, PlError> {
        if !self.value_at_zero.is_zero() {
            return Err(PlError::NotInvertible {
                value_at_zero: self.value_at_zero.clone(),
            });
        }
        let mut breaks = Vec::with_capacity(self.breaks.len());
        for (x, slope) in &self.breaks {
            breaks.push((self.eval(x)?, slope.recip()));
        }
        PLFun::new(
            Rat::zero(),
            self.initial_slope.recip(),
            breaks,
            self.value_at_end(),
        )
    }

    /// The pointwise maximum of two functions sharing the same domain.
    ///
    /// Crossings in the interior of linear pieces become breaks of the
    /// result.
    pub fn pointwise_max(&self, other: &PLFun) -> Result<Self, PlError> {
        if self.domain_end != other.domain_end {
            return Err(PlError::DomainMismatch {
                detail: "pointwise max requires identical domains".into(),
            });
        }

        let mut xs: Vec<Rat> = self
            .breaks
            .iter()
            .chain(other.breaks.iter())
            .map(|(x, _)| x.clone())
            .collect();
        xs.push(Rat::zero());
        xs.sort();
        xs.dedup();
        if let Some(end) = &self.domain_end {
            xs.retain(|x| x < end);
        }

        // Walk the common refinement segment by segment; within a segment
        // both functions are linear, so the max changes slope at most once.
        let mut events: Vec<(Rat, Rat)> = Vec::new(); // (abscissa, slope of max after it)
        for (i, x0) in xs.iter().enumerate() {
            let upper = xs.get(i + 1).or(self.domain_end.as_ref());
            let va = self.eval(x0)?;
            let vb = other.eval(x0)?;
            let sa = self.slope_right(x0);
            let sb = other.slope_right(x0);
            let (lead_slope, trail_slope, gap) = if va > vb {
                (sa, sb, &va - &vb)
            } else if vb > va {
                (sb, sa, &vb - &va)
            } else {
                // Tied at the segment start: the steeper one leads throughout.
                events.push((x0.clone(), sa.max(sb).clone()));
                continue;
            };
            events.push((x0.clone(), lead_slope.clone()));
            if trail_slope > lead_slope {
                let cross = x0 + gap / (trail_slope - lead_slope);
                let inside = match upper {
                    Some(hi) => &cross < hi,
                    None => true,
                };
                if inside {
                    events.push((cross, trail_slope.clone()));
                }
            }
        }

        let value_at_zero = self.value_at_zero.clone().max(other.value_at_zero.clone());
        let initial_slope = events
            .first()
            .map(|(_, s)| s.clone())
            .expect("at least the segment at 0");
        let breaks = events
            .into_iter()
            .filter(|(x, _)| x.is_positive())
            .collect();
        PLFun::new(value_at_zero, initial_slope, breaks, self.domain_end.clone())
    }

    /// Reflects the graph across the line `x + y = axis`.
    ///
    /// Returns `g(x) = axis − f⁻¹(axis − x)` on `[0, axis − f(0)]`; the graph
    /// of `g` is the mirror image of the graph of `f`. Requires the graph to
    /// reach height `axis` (always true on an unbounded domain) and
    /// `f(0) < axis`.
    pub fn reflect(&self, axis: &Rat) -> Result<Self, PlError> {
        if axis <= &self.value_at_zero {
            return Err(PlError::BadReflection {
                axis: axis.clone(),
                detail: format!("value {} at 0 is not below the axis", self.value_at_zero),
            });
        }
        if let Some(top) = self.value_at_end() {
            if &top < axis {
                return Err(PlError::BadReflection {
                    axis: axis.clone(),
                    detail: format!("graph tops out at height {top}, below the axis"),
                });
            }
        }
        let x_at_axis = self.solve(axis)?;
        let mut vertices = vec![(Rat::zero(), self.value_at_zero.clone())];
        for (bx, _) in &self.breaks {
            if bx < &x_at_axis {
                vertices.push((bx.clone(), self.eval(bx)?));
            }
        }
        vertices.push((x_at_axis, axis.clone()));
        let mirrored: Vec<(Rat, Rat)> = vertices
            .into_iter()
            .rev()
            .map(|(x, y)| (axis - y, axis - x))
            .collect();
        PLFun::from_vertices(&mirrored)
    }

    /// Glues a bounded function with its own mirror image across
    /// `x + y = axis`, producing the symmetric completion on
    /// `[0, axis − f(0)]`.
    ///
    /// Requires the graph's upper corner to lie on the axis:
    /// `end + f(end) = axis`.
    pub fn extend_symmetric(&self, axis: &Rat) -> Result<Self, PlError> {
        let end = self.domain_end.as_ref().ok_or_else(|| PlError::BadReflection {
            axis: axis.clone(),
            detail: "symmetric extension needs a bounded graph".into(),
        })?;
        let top = self.value_at_end().expect("bounded domain");
        if &(end + &top) != axis {
            return Err(PlError::BadReflection {
                axis: axis.clone(),
                detail: format!("corner ({end}, {top}) does not lie on the axis"),
            });
        }
        let mut vertices = vec![(Rat::zero(), self.value_at_zero.clone())];
        for (bx, _) in &self.breaks {
            vertices.push((bx.clone(), self.eval(bx)?));
        }
        vertices.push((end.clone(), top));
        let mirrored: Vec<(Rat, Rat)> = vertices
            .iter()
            .rev()
            .skip(1) // the corner is its own mirror image
            .map(|(x, y)| (axis - y, axis - x))
            .collect();
        vertices.extend(mirrored);
        PLFun::from_vertices(&vertices)
    }

    /// The vertex list: `(0, f(0))`, one vertex per break, and the endpoint
    /// when the domain is bounded.
    pub fn vertices(&self) -> Vec<(Rat, Rat)> {
        let mut vertices = vec![(Rat::zero(), self.value_at_zero.clone())];
        for (bx, _) in &self.breaks {
            vertices.push((bx.clone(), self.eval(bx).expect("break is in the domain")));
        }
        if let Some(end) = &self.domain_end {
            vertices.push((end.clone(), self.value_at_end().expect("bounded domain")));
        }
        vertices
    }

    /// The table of slope discontinuities.
    ///
    /// Every break of a canonical function changes the slope, so every break
    /// yields an entry `(x, left slope, right slope, height = right/left)`.
    /// When `open_upper` is given, breaks at or beyond it are excluded; this
    /// is how a discontinuity at the upper endpoint itself is dropped when
    /// the function is considered on a half-open interval.
    pub fn jump_table(&self, open_upper: Option<&Rat>) -> JumpTable {
        let mut entries = Vec::with_capacity(self.breaks.len());
        let mut left = &self.initial_slope;
        for (x, right) in &self.breaks {
            if open_upper.is_some_and(|u| x >= u) {
                break;
            }
            entries.push(JumpEntry {
                x: x.clone(),
                left_slope: left.clone(),
                right_slope: right.clone(),
                height: right / left,
            });
            left = right;
        }
        JumpTable::from_entries(entries)
    }

    /// Whether slopes are increasing left to right (strictly, by canonical
    /// form).
    pub fn is_convex(&self) -> bool {
        let mut prev = &self.initial_slope;
        for (_, slope) in &self.breaks {
            if slope < prev {
                return false;
            }
            prev = slope;
        }
        true
    }
}

impl std::fmt::Display for PLFun {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "f(0) = {}, slope {}",
            self.value_at_zero, self.initial_slope
        )?;
        for (x, s) in &self.breaks {
            write!(f, "; from {x}, slope {s}")?;
        }
        match &self.domain_end {
            Some(end) => write!(f, " on [0, {end}]"),
            None => write!(f, " on [0, ∞)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    fn fun(v0: Rat, s0: Rat, breaks: Vec<(Rat, Rat)>, end: Option<Rat>) -> PLFun {
        PLFun::new(v0, s0, breaks, end).unwrap()
    }

    #[test]
    fn eval_walks_the_pieces() {
        let f = fun(rat(0), rat(1), vec![(rat(1), rat(2))], None);
        assert_eq!(f.eval(&rat(3)).unwrap(), rat(5));

        let g = fun(rat(0), rat(1), vec![(rat(1), rat(2)), (rat(5), rat(4))], None);
        assert_eq!(g.eval(&rat(6)).unwrap(), rat(13));
        assert_eq!(g.eval(&rat(1)).unwrap(), rat(1));
        assert_eq!(g.eval(&rat(5)).unwrap(), rat(9));
    }

    #[test]
    fn eval_rejects_points_outside_the_domain() {
        let f = fun(rat(0), rat(1), vec![], Some(rat(2)));
        assert!(matches!(
            f.eval(&rat(3)),
            Err(PlError::OutOfDomain { .. })
        ));
        assert!(matches!(
            f.eval(&rat(-1)),
            Err(PlError::OutOfDomain { .. })
        ));
    }

    #[test]
    fn constructor_rejects_bad_data() {
        assert!(matches!(
            PLFun::new(rat(0), rat(0), vec![], None),
            Err(PlError::NonPositiveSlope { .. })
        ));
        assert!(matches!(
            PLFun::new(rat(0), rat(1), vec![(rat(-1), rat(2))], None),
            Err(PlError::BadBreaks { .. })
        ));
        assert!(matches!(
            PLFun::new(rat(0), rat(1), vec![(rat(2), rat(2)), (rat(1), rat(4))], None),
            Err(PlError::BadBreaks { .. })
        ));
        assert!(matches!(
            PLFun::new(rat(0), rat(1), vec![(rat(2), rat(2))], Some(rat(2))),
            Err(PlError::BadDomainEnd { .. })
        ));
    }

    #[test]
    fn constructor_merges_redundant_breaks() {
        let f = fun(rat(0), rat(1), vec![(rat(1), rat(1)), (rat(2), rat(3))], None);
        assert_eq!(f.breaks(), &[(rat(2), rat(3))]);
    }

    #[test]
    fn then_collects_breaks_from_both_factors() {
        // Diagram order: (f then g)(x) = g(f(x)).
        let f = fun(rat(0), rat(1), vec![(rat(1), rat(2))], None);
        let g = fun(rat(0), rat(1), vec![(rat(5), rat(2))], None);
        let h = f.then(&g).unwrap();
        assert_eq!(h.breaks(), &[(rat(1), rat(2)), (rat(3), rat(4))]);
        assert_eq!(h.eval(&rat(4)).unwrap(), g.eval(&f.eval(&rat(4)).unwrap()).unwrap());
    }

    #[test]
    fn then_requires_compatible_domains() {
        let unbounded = PLFun::identity();
        let bounded = fun(rat(0), rat(1), vec![], Some(rat(1)));
        assert!(matches!(
            unbounded.then(&bounded),
            Err(PlError::DomainMismatch { .. })
        ));
        // Range [0, 1] fits in domain [0, 1].
        assert!(bounded.then(&bounded).is_ok());
    }

    #[test]
    fn invert_reciprocates_slopes_at_mapped_breaks() {
        let id = PLFun::identity();
        assert_eq!(id.invert().unwrap(), id);

        let f = fun(rat(0), rat(1), vec![(rat(1), rat(2))], None);
        let g = f.invert().unwrap();
        assert_eq!(g.breaks(), &[(rat(1), ratio(1, 2))]);
        // Round trip composes to the identity.
        assert_eq!(f.then(&g).unwrap(), PLFun::identity());

        let shifted = fun(rat(1), rat(1), vec![], None);
        assert!(matches!(
            shifted.invert(),
            Err(PlError::NotInvertible { .. })
        ));
    }

    #[test]
    fn pointwise_max_places_a_break_at_the_crossing() {
        let end = ratio(25, 4);
        let a = fun(rat(0), ratio(1, 4), vec![], Some(end.clone()));
        let b = fun(ratio(-13, 4), rat(1), vec![], Some(end.clone()));
        let m = a.pointwise_max(&b).unwrap();
        assert_eq!(m.breaks(), &[(ratio(13, 3), rat(1))]);
        assert_eq!(m.eval(&ratio(13, 3)).unwrap(), ratio(13, 12));
    }

    #[test]
    fn pointwise_max_requires_matching_domains() {
        let a = fun(rat(0), rat(1), vec![], Some(rat(1)));
        let b = fun(rat(0), rat(1), vec![], Some(rat(2)));
        assert!(matches!(
            a.pointwise_max(&b),
            Err(PlError::DomainMismatch { .. })
        ));
    }

    #[test]
    fn jump_table_reports_slope_ratios() {
        let f = fun(
            rat(0),
            ratio(1, 4),
            vec![(ratio(13, 3), rat(1)), (ratio(31, 6), rat(4))],
            Some(ratio(25, 4)),
        );
        let jumps = f.jump_table(Some(&ratio(25, 4)));
        let heights: Vec<Rat> = jumps.iter().map(|e| e.height.clone()).collect();
        assert_eq!(heights, vec![rat(4), rat(4)]);
    }

    #[test]
    fn jump_table_open_upper_excludes_the_endpoint() {
        let f = fun(rat(0), rat(1), vec![(rat(2), rat(3))], None);
        assert_eq!(f.jump_table(None).len(), 1);
        assert_eq!(f.jump_table(Some(&rat(2))).len(), 0);
        assert_eq!(f.jump_table(Some(&rat(3))).len(), 1);
    }

    #[test]
    fn reflect_fixes_a_graph_touching_the_axis_symmetrically() {
        let id = fun(rat(0), rat(1), vec![], Some(rat(1)));
        assert_eq!(id.reflect(&rat(1)).unwrap(), id);
    }

    #[test]
    fn reflect_mirrors_the_vertex_data() {
        // Slope 1 then 2 after x = 3, on [0, ∞); mirror across x + y = 7/2.
        let f = fun(rat(0), ratio(1, 2), vec![(rat(3), rat(1))], None);
        let g = f.reflect(&ratio(7, 2)).unwrap();
        // g(x) = 7/2 − f⁻¹(7/2 − x) on [0, 7/2].
        assert_eq!(g.domain_end(), Some(&ratio(7, 2)));
        for x in [rat(0), rat(1), rat(2), rat(3), ratio(7, 2)] {
            let y = g.eval(&x).unwrap();
            // The mirrored point of (x, g(x)) must lie on f.
            assert_eq!(f.eval(&(ratio(7, 2) - &y)).unwrap(), ratio(7, 2) - &x);
        }
    }

    #[test]
    fn extend_symmetric_glues_at_the_corner() {
        // f on [0, 3] with corner (3, 1/2) and axis x + y = 7/2.
        let f = fun(rat(0), ratio(1, 6), vec![], Some(rat(3)));
        let g = f.extend_symmetric(&ratio(7, 2)).unwrap();
        assert_eq!(g.domain_end(), Some(&ratio(7, 2)));
        assert_eq!(g.eval(&rat(3)).unwrap(), ratio(1, 2));
        assert_eq!(g.eval(&ratio(7, 2)).unwrap(), ratio(7, 2));
        assert_eq!(g.breaks().len(), 1);
        assert_eq!(g.breaks()[0].0, rat(3));
    }

    #[test]
    fn solve_inverts_eval() {
        let f = fun(rat(0), rat(1), vec![(rat(1), rat(2)), (rat(5), rat(4))], None);
        for x in [rat(0), ratio(1, 2), rat(1), rat(3), rat(5), rat(11)] {
            let y = f.eval(&x).unwrap();
            assert_eq!(f.solve(&y).unwrap(), x);
        }
        assert!(matches!(f.solve(&rat(-1)), Err(PlError::OutOfRange { .. })));
    }

    #[test]
    fn solve_sum_finds_the_anti_diagonal_crossing() {
        // x + x/4 = 25/4 at x = 5.
        let f = fun(rat(0), ratio(1, 4), vec![(rat(5), rat(1))], Some(ratio(25, 4)));
        assert_eq!(f.solve_sum(&ratio(25, 4)).unwrap(), rat(5));
    }

    #[test]
    fn scale_and_restrict() {
        let f = fun(rat(0), rat(1), vec![(rat(3), rat(2))], None);
        let g = f.scale_y(&ratio(1, 2)).unwrap();
        assert_eq!(g.eval(&rat(5)).unwrap(), ratio(7, 2));

        let h = f.scale_x(&rat(3)).unwrap();
        assert_eq!(h.breaks()[0].0, rat(9));
        assert_eq!(h.eval(&rat(9)).unwrap(), rat(3));

        let r = f.restrict(&rat(2)).unwrap();
        assert_eq!(r.breaks().len(), 0);
        assert_eq!(r.domain_end(), Some(&rat(2)));
        assert!(f.restrict(&rat(0)).is_err());
    }
}
