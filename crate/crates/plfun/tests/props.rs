//! Property tests for the piecewise-linear algebra.
//!
//! Operations are checked against pointwise oracles: an operation on break
//! data must agree with the corresponding operation on evaluated values at a
//! grid of probe points (breaks, midpoints and endpoints of the common
//! refinement).

use plfun::{rat, ratio, PLFun, Rat};
use proptest::prelude::*;

/// A small positive rational with numerator and denominator in modest range.
fn small_pos_rat() -> impl Strategy<Value = Rat> {
    (1i64..=48, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

/// A small rational of either sign.
fn small_rat() -> impl Strategy<Value = Rat> {
    (-24i64..=24, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

/// Strictly increasing positive abscissae paired with positive slopes.
fn break_data(max_breaks: usize) -> impl Strategy<Value = Vec<(Rat, Rat)>> {
    proptest::collection::vec((small_pos_rat(), small_pos_rat()), 0..=max_breaks).prop_map(
        |pairs| {
            // Accumulate abscissae so they are strictly increasing.
            let mut x = rat(0);
            pairs
                .into_iter()
                .map(|(dx, slope)| {
                    x += dx;
                    (x.clone(), slope)
                })
                .collect()
        },
    )
}

/// An arbitrary canonical function, bounded or not.
fn plfun() -> impl Strategy<Value = PLFun> {
    (
        small_rat(),
        small_pos_rat(),
        break_data(4),
        prop_oneof![Just(None), small_pos_rat().prop_map(Some)],
    )
        .prop_map(|(v0, s0, breaks, extra)| {
            let end = extra.map(|gap| {
                breaks
                    .last()
                    .map(|(x, _)| x + &gap)
                    .unwrap_or_else(|| gap.clone())
            });
            PLFun::new(v0, s0, breaks, end).expect("generated data is valid")
        })
}

/// An arbitrary canonical function on `[0, ∞)`.
fn plfun_unbounded() -> impl Strategy<Value = PLFun> {
    (small_rat(), small_pos_rat(), break_data(4))
        .prop_map(|(v0, s0, breaks)| PLFun::new(v0, s0, breaks, None).expect("valid"))
}

/// A bounded function vanishing at 0 (the shape all inversions use).
fn plfun_through_origin() -> impl Strategy<Value = PLFun> {
    (small_pos_rat(), break_data(4), small_pos_rat()).prop_map(|(s0, breaks, gap)| {
        let end = breaks
            .last()
            .map(|(x, _)| x + &gap)
            .unwrap_or_else(|| gap.clone());
        PLFun::new(rat(0), s0, breaks, Some(end)).expect("generated data is valid")
    })
}

/// Probe points covering every linear piece of `f`: 0, each break, midpoints
/// of consecutive breaks, and the domain end (or a point past the last break
/// when unbounded).
fn probes(f: &PLFun) -> Vec<Rat> {
    let mut xs = vec![rat(0)];
    xs.extend(f.breaks().iter().map(|(x, _)| x.clone()));
    let last = xs.last().cloned().unwrap_or_else(|| rat(0));
    match f.domain_end() {
        Some(end) => xs.push(end.clone()),
        None => xs.push(last + rat(7)),
    }
    let mids: Vec<Rat> = xs
        .windows(2)
        .map(|w| (&w[0] + &w[1]) / rat(2))
        .collect();
    xs.extend(mids);
    xs.sort();
    xs.dedup();
    xs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Oracle: composition of break data agrees with composition of values.
    #[test]
    fn then_matches_pointwise_composition(f in plfun_through_origin(), g in plfun_unbounded()) {
        let h = f.then(&g).expect("unbounded outer domain always fits");
        for x in probes(&f) {
            let via_h = h.eval(&x).unwrap();
            let via_fg = g.eval(&f.eval(&x).unwrap()).unwrap();
            prop_assert_eq!(via_h, via_fg);
        }
    }

    /// Oracle: the inverse agrees with inverse evaluation, and round-trips.
    #[test]
    fn invert_round_trips(f in plfun_through_origin()) {
        let g = f.invert().unwrap();
        for x in probes(&f) {
            let y = f.eval(&x).unwrap();
            prop_assert_eq!(g.eval(&y).unwrap(), x.clone());
            prop_assert_eq!(f.solve(&y).unwrap(), x);
        }
        // f then f⁻¹ is the identity on [0, end].
        let id = f.then(&g).unwrap();
        prop_assert_eq!(id.breaks().len(), 0);
        prop_assert_eq!(id.value_at_zero(), &rat(0));
        prop_assert_eq!(id.initial_slope(), &rat(1));
    }

    /// Oracle: pointwise max of break data agrees with max of values.
    #[test]
    fn pointwise_max_matches_values(
        (f, g) in (small_pos_rat(), small_rat(), small_pos_rat(), break_data(3), break_data(3))
            .prop_map(|(gap, v0, s0, ba, bb)| {
                let top = |b: &Vec<(Rat, Rat)>| b.last().map(|(x, _)| x.clone()).unwrap_or_else(|| rat(0));
                let end = top(&ba).max(top(&bb)) + gap;
                let f = PLFun::new(rat(0), s0.clone(), ba, Some(end.clone())).unwrap();
                let g = PLFun::new(v0, s0, bb, Some(end)).unwrap();
                (f, g)
            })
    ) {
        let m = f.pointwise_max(&g).unwrap();
        let mut xs = probes(&f);
        xs.extend(probes(&g));
        xs.extend(probes(&m));
        xs.sort();
        xs.dedup();
        for x in xs {
            let expected = f.eval(&x).unwrap().max(g.eval(&x).unwrap());
            prop_assert_eq!(m.eval(&x).unwrap(), expected);
        }
        // Max is commutative and idempotent on canonical forms.
        prop_assert_eq!(&m, &g.pointwise_max(&f).unwrap());
        prop_assert_eq!(&m, &m.pointwise_max(&m).unwrap());
    }

    /// Pointwise max of convex functions is convex.
    #[test]
    fn pointwise_max_preserves_convexity(
        (f, g) in (small_pos_rat(), small_rat(), break_data(3), break_data(3))
            .prop_map(|(gap, v0, ba, bb)| {
                // Sort slopes ascending to force convexity.
                let convexify = |v0: Rat, mut b: Vec<(Rat, Rat)>, end: Rat| {
                    let mut slopes: Vec<Rat> =
                        std::iter::once(ratio(1, 7)).chain(b.iter().map(|(_, s)| s.clone())).collect();
                    slopes.sort();
                    let s0 = slopes.remove(0);
                    for (bk, s) in b.iter_mut().zip(slopes) {
                        bk.1 = s;
                    }
                    PLFun::new(v0, s0, b, Some(end)).unwrap()
                };
                let top = |b: &Vec<(Rat, Rat)>| b.last().map(|(x, _)| x.clone()).unwrap_or_else(|| rat(0));
                let end = top(&ba).max(top(&bb)) + gap;
                (convexify(rat(0), ba, end.clone()), convexify(v0, bb, end))
            })
    ) {
        prop_assert!(f.is_convex());
        prop_assert!(g.is_convex());
        prop_assert!(f.pointwise_max(&g).unwrap().is_convex());
    }

    /// Oracle: reflection is the mirrored graph, and reflecting twice gives
    /// back the original function.
    #[test]
    fn reflect_is_an_involution(f in plfun_through_origin()) {
        // The graph must reach height `axis` for the mirror to start at 0;
        // the top value is the largest axis that mirrors the whole graph.
        let axis = f.value_at_end().unwrap();
        let g = f.reflect(&axis).unwrap();
        // Mirrored points of g lie on f.
        for x in probes(&g) {
            let y = g.eval(&x).unwrap();
            prop_assert_eq!(f.eval(&(&axis - &y)).unwrap(), &axis - &x);
        }
        prop_assert_eq!(g.reflect(&axis).unwrap(), f);
    }

    /// The symmetric extension is fixed by reflection and agrees with the
    /// original on the lower half.
    #[test]
    fn extend_symmetric_is_symmetric(f in plfun_through_origin()) {
        let end = f.domain_end().unwrap().clone();
        let top = f.value_at_end().unwrap();
        let axis = &end + &top;
        let g = f.extend_symmetric(&axis).unwrap();
        prop_assert_eq!(g.reflect(&axis).unwrap(), g.clone());
        for x in probes(&f) {
            prop_assert_eq!(g.eval(&x).unwrap(), f.eval(&x).unwrap());
        }
    }

    /// The jump-table heights telescope to the ratio of outer slopes.
    #[test]
    fn jump_heights_telescope(f in plfun()) {
        let jumps = f.jump_table(None);
        prop_assert_eq!(jumps.height_product(), f.final_slope() / f.initial_slope());
        prop_assert_eq!(jumps.len(), f.breaks().len());
    }

    /// solve_sum solves the anti-diagonal equation exactly.
    #[test]
    fn solve_sum_is_exact(f in plfun_through_origin(), t in small_pos_rat()) {
        // Pick a target between the extremes so a solution exists: t is
        // positive, so t mod hi lies in [0, hi).
        let end = f.domain_end().unwrap().clone();
        let hi = &end + f.value_at_end().unwrap();
        let s = &t % &hi;
        let x = f.solve_sum(&s).unwrap();
        prop_assert!(x >= rat(0) && x <= end);
        prop_assert_eq!(&x + f.eval(&x).unwrap(), s);
    }
}
