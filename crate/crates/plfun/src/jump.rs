//! Tables of slope discontinuities of piecewise-linear functions.

use num_traits::One;

use crate::rat::Rat;

/// One slope discontinuity: the abscissa, the one-sided slopes and their
/// ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpEntry {
    /// Abscissa of the discontinuity.
    pub x: Rat,
    /// Slope immediately to the left.
    pub left_slope: Rat,
    /// Slope immediately to the right.
    pub right_slope: Rat,
    /// `right_slope / left_slope`; strictly greater than 1 for convex
    /// functions.
    pub height: Rat,
}

/// The ordered list of slope discontinuities of a piecewise-linear function.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct JumpTable {
    entries: Vec<JumpEntry>,
}

impl JumpTable {
    /// Wraps an ordered entry list produced by
    /// [`PLFun::jump_table`](crate::PLFun::jump_table).
    pub fn from_entries(entries: Vec<JumpEntry>) -> Self {
        debug_assert!(
            entries.windows(2).all(|w| w[0].x < w[1].x),
            "jump abscissae must be strictly increasing"
        );
        JumpTable { entries }
    }

    /// Number of discontinuities.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Whether the table is empty.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Iterates over the entries in increasing abscissa order.
    pub fn iter(&self) -> std::slice::Iter<'_, JumpEntry> {
        self.entries.iter()
    }

    /// The `i`-th entry.
    pub fn get(&self, i: usize) -> Option<&JumpEntry> {
        self.entries.get(i)
    }

    /// The first entry.
    pub fn first(&self) -> Option<&JumpEntry> {
        self.entries.first()
    }

    /// The last entry.
    pub fn last(&self) -> Option<&JumpEntry> {
        self.entries.last()
    }

    /// The entry at abscissa `x`, if there is a discontinuity there.
    pub fn at(&self, x: &Rat) -> Option<&JumpEntry> {
        self.entries.iter().find(|e| &e.x == x)
    }

    /// The list of jump abscissae.
    pub fn abscissae(&self) -> Vec<Rat> {
        self.entries.iter().map(|e| e.x.clone()).collect()
    }

    /// The product of all heights; equals the ratio of the outermost slopes.
    pub fn height_product(&self) -> Rat {
        self.entries
            .iter()
            .fold(Rat::one(), |acc, e| acc * &e.height)
    }
}

impl<'a> IntoIterator for &'a JumpTable {
    type Item = &'a JumpEntry;
    type IntoIter = std::slice::Iter<'a, JumpEntry>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

#[cfg(test)]
mod tests {
    
    use crate::rat::{rat, ratio};
    use crate::PLFun;

    #[test]
    fn height_product_telescopes_to_the_slope_ratio() {
        let f = PLFun::new(
            rat(0),
            ratio(1, 4),
            vec![(ratio(13, 3), rat(1)), (ratio(31, 6), rat(4))],
            Some(ratio(25, 4)),
        )
        .unwrap();
        let t = f.jump_table(None);
        assert_eq!(t.height_product(), rat(16));
        assert_eq!(t.abscissae(), vec![ratio(13, 3), ratio(31, 6)]);
        assert!(t.at(&ratio(13, 3)).is_some());
        assert!(t.at(&rat(5)).is_none());
    }
}
