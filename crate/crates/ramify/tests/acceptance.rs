//! The acceptance suite: ten end-to-end criteria covering the envelope
//! symmetry, the two published golden chains, the height-product and
//! crossing laws, decomposition conformance, the parity laws, the two-jump
//! scenario, and the command-line contract.
//!
//! Every random suite is driven by a fixed-seed generator, so the whole file
//! is deterministic. Each test finishes by printing one `[criterion N]`
//! line.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

use biherbrand::{scenario_97, verify_symmetry, BiError, BiSpec, CrossingReading};
use carayol::{
    herbrand_of_datum, level_range, standardize_target, ultrametric_convert, vary_parameter,
    CarayolDatum, CarayolError, EpsilonCondition, LevelOutcome, LevelRange, StandardCase,
    StandardizeOutcome, UltraDirection,
};
use galois::{analyze_profile, ascend_once, descend_once, GaloisError, GaloisProfile, Inner};
use herbrand::{Layer, RamTower};
use plfun::{floor_int, rat, rat_pow, ratio, PLFun, Rat};

/// Seed of the suite shared by criteria 1 and 4.
const ENVELOPE_SUITE_SEED: u64 = 0x5eed_0001;

/// A random separable tower with `p` in {2, 3, 5} and degree at most `p^4`.
fn random_tower(rng: &mut ChaCha8Rng) -> RamTower {
    let p = [2u32, 3, 5][rng.random_range(0..3)];
    let count = rng.random_range(1usize..=3);
    let mut layers = Vec::with_capacity(count);
    let mut jump = rat(0);
    let mut total_s = 0u32;
    for i in 0..count {
        jump += ratio(rng.random_range(1i64..=8), rng.random_range(1i64..=4));
        let remaining = (count - i - 1) as u32;
        let cap = 4u32.saturating_sub(total_s + remaining).clamp(1, 2);
        let s = rng.random_range(1..=cap);
        total_s += s;
        layers.push(Layer::new(jump.clone(), s));
    }
    RamTower::new(p, layers, 0).unwrap()
}

/// A random tower/exponent pair (the exponent prime to `p`, at most 60).
fn random_spec(rng: &mut ChaCha8Rng) -> BiSpec {
    let tower = random_tower(rng);
    let p = u64::from(tower.p());
    let m = loop {
        let m = rng.random_range(1u64..=60);
        if m % p != 0 {
            break m;
        }
    };
    BiSpec::new(tower, m).unwrap()
}

/// The wild exponent computed independently as the telescoping sum of
/// degree increments times jumps.
fn wild_oracle(t: &RamTower) -> Rat {
    let mut w = rat(0);
    let mut deg = rat(1);
    for layer in t.layers() {
        let next = &deg * rat_pow(t.p(), layer.s as i32);
        w += (&next - &deg) * &layer.jump;
        deg = next;
    }
    w
}

#[test]
fn criterion_01_envelope_symmetry_on_random_specs() {
    let mut rng = ChaCha8Rng::seed_from_u64(ENVELOPE_SUITE_SEED);
    let cases = 500;
    for _ in 0..cases {
        let spec = random_spec(&mut rng);
        let bundle = spec.bundle().unwrap();
        let report = verify_symmetry(&bundle.bi, &spec.sigma());
        assert!(
            report.pass,
            "mirror symmetry failed for p = {}, m = {}, tower {}: {}",
            spec.p(),
            spec.m(),
            spec.tower(),
            report.detail
        );
        assert!(report.witness.is_none());
    }
    println!("[criterion 1] exact mirror symmetry on {cases} random envelopes: PASS");
}

#[test]
fn criterion_02_golden_chain_a() {
    let datum = CarayolDatum::from_parts(2, &[(rat(5), 2)], 25).unwrap();
    let inv = datum.invariants().unwrap();
    assert_eq!(inv.w, rat(15));
    assert_eq!(inv.l, rat(10));
    assert_eq!(inv.lambda, 5);
    assert_eq!(inv.lambda_prime, 4);
    assert_eq!(inv.epsilon, rat(5));
    assert_eq!(inv.c, rat(5));
    assert_eq!(inv.j_infinity, rat(5));
    assert_eq!(inv.case, StandardCase::NotStandard);
    assert!(inv.star_exceptional);

    assert_eq!(level_range(25, &rat(15)), LevelRange::Bounded { max: 12 });
    assert_eq!(
        standardize_target(2, 25, &rat(15)),
        StandardizeOutcome::RaisableTo {
            to_b: 25,
            to_c: rat(16)
        }
    );

    // The twisted function at level 12: two symmetric jumps.
    let twisted = herbrand_of_datum(&datum, 12).unwrap();
    let expected = PLFun::new(
        rat(0),
        ratio(1, 4),
        vec![(ratio(13, 3), rat(1)), (ratio(31, 6), rat(4))],
        Some(ratio(25, 4)),
    )
    .unwrap();
    assert_eq!(twisted, expected);
    let mirrored = ratio(13, 3) + twisted.eval(&ratio(31, 6)).unwrap();
    assert_eq!(mirrored, ratio(25, 4));

    // At the intrinsic level the twist is invisible.
    let at_intrinsic = herbrand_of_datum(&datum, 10).unwrap();
    assert_eq!(at_intrinsic, datum.bundle().unwrap().bi);

    // Levels congruent to m stay uncovered; oversized levels are invalid.
    assert!(matches!(
        herbrand_of_datum(&datum, 11),
        Err(CarayolError::UncoveredCase { .. })
    ));
    assert!(matches!(
        herbrand_of_datum(&datum, 13),
        Err(CarayolError::InvalidDatum { .. })
    ));

    // Twisting at parameter 12 from level 5 drops the level strictly.
    let (rest, outcome) = vary_parameter(2, 25, &rat(15), 5, 12).unwrap();
    assert_eq!(rest, 13);
    assert_eq!(outcome, LevelOutcome::StrictlyBelow(12));

    // The ultrametric conversion attains its ceilings at the crossing.
    let report = ultrametric_convert(&datum, UltraDirection::AToDelta, &ratio(5, 4)).unwrap();
    assert_eq!(report.output, rat(5));
    assert_eq!(report.max_a, ratio(5, 4));
    assert_eq!(report.max_delta, rat(5));
    assert!(report.epsilon_equals_c);
    assert_eq!(report.condition, Some(EpsilonCondition::StarExceptional));

    println!("[criterion 2] golden chain A (p = 2, m = 25, w = 15): PASS");
}

#[test]
fn criterion_03_golden_chain_b_descends_and_ascends_bit_exact() {
    // Chain B: peel the first layer of the three-jump profile.
    let outer = GaloisProfile::from_jumps(
        2,
        2,
        17,
        &[(rat(1), rat(2)), (rat(3), rat(4)), (rat(4), rat(2))],
    )
    .unwrap();
    let d = descend_once(&outer).unwrap();
    assert_eq!(d.layer_jump, rat(1));
    assert_eq!(d.layer_height, 2);
    let inner = match &d.inner {
        Inner::Profile(g) => g.clone(),
        Inner::Character { .. } => panic!("expected an inner profile"),
    };
    assert_eq!(
        inner,
        GaloisProfile::from_jumps(2, 1, 15, &[(rat(5), rat(4))]).unwrap()
    );
    let rebuilt = ascend_once(2, &d.layer_jump, d.layer_height, &d.inner).unwrap();
    assert_eq!(rebuilt, outer);

    // The single-jump inner profile ends the chain.
    assert!(matches!(
        descend_once(&inner),
        Err(GaloisError::TooFewJumps { count: 1 })
    ));

    // After a tame base change of degree 3, chain A descends to a bare
    // character and ascends back bit for bit.
    let lifted = GaloisProfile::from_jumps(
        2,
        2,
        25,
        &[(ratio(13, 3), rat(4)), (ratio(31, 6), rat(4))],
    )
    .unwrap()
    .tame_lift(3)
    .unwrap();
    let d = descend_once(&lifted).unwrap();
    assert_eq!(d.layer_jump, rat(13));
    assert_eq!(d.layer_height, 4);
    assert_eq!(d.inner, Inner::Character { sw: 36 });
    let rebuilt = ascend_once(2, &d.layer_jump, d.layer_height, &d.inner).unwrap();
    assert_eq!(rebuilt, lifted);

    println!("[criterion 3] golden chain B descends and ascends bit-exact: PASS");
}

#[test]
fn criterion_04_height_product_is_the_centric_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(ENVELOPE_SUITE_SEED);
    let cases = 500;
    for _ in 0..cases {
        let spec = random_spec(&mut rng);
        let bundle = spec.bundle().unwrap();
        let product = bundle.bi.jump_table(None).height_product();
        assert_eq!(
            product,
            rat_pow(spec.p(), 2 * spec.r() as i32),
            "height product off for p = {}, m = {}, tower {}",
            spec.p(),
            spec.m(),
            spec.tower()
        );
    }
    println!("[criterion 4] jump heights multiply to p^2r on {cases} random envelopes: PASS");
}

#[test]
fn criterion_05_towers_obey_the_wild_exponent_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let cases = 200;
    for _ in 0..cases {
        let tower = random_tower(&mut rng);
        let w = tower.wild_exponent().finite().cloned().unwrap();

        // Independent oracle: the telescoping sum.
        assert_eq!(w, wild_oracle(&tower), "oracle mismatch for {tower}");

        // Transitivity under splitting: functions compose, exponents
        // combine through the top degree.
        let at = rng.random_range(0..=tower.layers().len());
        let (bottom, top) = tower.split_at(at).unwrap();
        let composed = bottom.build_psi().then(&top.build_psi()).unwrap();
        assert_eq!(composed, tower.build_psi(), "split at {at} broke {tower}");
        let w_bottom = bottom.wild_exponent().finite().cloned().unwrap();
        let w_top = top.wild_exponent().finite().cloned().unwrap();
        let top_degree = rat_pow(tower.p(), top.separable_log() as i32);
        assert_eq!(w, top_degree * w_bottom + w_top);

        // Bounds through the first and last jumps, tight only for a single
        // layer.
        let deg = rat_pow(tower.p(), tower.separable_log() as i32) - rat(1);
        let first = &tower.layers()[0].jump;
        let last = &tower.layers()[tower.layers().len() - 1].jump;
        let single = tower.layers().len() == 1;
        assert!(&deg * first <= w && w <= &deg * last);
        assert_eq!(&deg * first == w, single);
        assert_eq!(w == &deg * last, single);
    }
    println!("[criterion 5] wild exponent oracle, transitivity, and bounds on {cases} random towers: PASS");
}

#[test]
fn criterion_06_crossing_sits_at_or_below_the_midpoint() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let cases = 300;
    let (mut at_midpoint, mut below_midpoint) = (0u32, 0u32);
    for _ in 0..cases {
        let datum = CarayolDatum::new(random_spec(&mut rng));
        let inv = datum.invariants().unwrap();
        let bundle = datum.bundle().unwrap();
        let scale = rat_pow(inv.p, -(inv.r as i32));
        let midpoint = (rat(inv.m as i64) + &inv.w) * &scale / rat(2);
        let half_gap = (rat(inv.m as i64) - &inv.w) * &scale / rat(2);
        let value_at_c = bundle.psi_times.eval(&inv.c).unwrap();
        if inv.j_infinity <= inv.c {
            at_midpoint += 1;
            assert_eq!(inv.c, midpoint, "c off the midpoint for m = {}", inv.m);
            assert_eq!(value_at_c, half_gap);
        } else {
            below_midpoint += 1;
            assert!(inv.c < midpoint, "c not below the midpoint for m = {}", inv.m);
            assert!(value_at_c > half_gap);
        }
    }
    assert!(at_midpoint > 0 && below_midpoint > 0, "both branches must occur");
    println!(
        "[criterion 6] crossing/midpoint law on {cases} random data \
         ({at_midpoint} at the midpoint, {below_midpoint} below): PASS"
    );
}

#[test]
fn criterion_07_decomposition_conforms_to_the_source_tower() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let cases = 100;
    for _ in 0..cases {
        let datum = CarayolDatum::new(random_spec(&mut rng));
        let spec = datum.spec();
        let (p, r, m) = (spec.p(), spec.r(), spec.m());
        let profile = GaloisProfile::new(p, r, m, datum.bundle().unwrap().bi).unwrap();
        let report = analyze_profile(&profile).unwrap();

        // The rescaled lower half of the profile is the function of the
        // decomposition tower.
        let rescaled = profile
            .psi()
            .scale_y(&rat_pow(p, r as i32))
            .unwrap()
            .restrict(&report.c)
            .unwrap();
        let rebuilt = report.l_tower.build_psi().restrict(&report.c).unwrap();
        assert_eq!(rescaled, rebuilt);

        // The decomposition tower is the source tower below the crossing;
        // whatever sits at or above it powers the core dimension.
        let below: Vec<Layer> = spec
            .tower()
            .layers()
            .iter()
            .filter(|layer| layer.jump < report.c)
            .cloned()
            .collect();
        assert_eq!(report.l_tower.layers(), below.as_slice());
        let above: u32 = spec
            .tower()
            .layers()
            .iter()
            .filter(|layer| layer.jump >= report.c)
            .map(|layer| layer.s)
            .sum();
        assert_eq!(report.dim_core, u64::from(p).pow(above));

        // Swan split: sw_core = m - w_L * dim.
        assert_eq!(report.w_l, wild_oracle(&report.l_tower));
        assert_eq!(
            report.sw_core,
            rat(m as i64) - &report.w_l * rat(report.dim_core as i64)
        );
    }
    println!("[criterion 7] decomposition tower and Swan split conform on {cases} random profiles: PASS");
}

#[test]
fn criterion_08_parity_laws_exhaustively() {
    let mut cases = 0u64;
    let mut star_cases = 0u64;
    for p in [2u32, 3, 5] {
        for (jumps, steps) in integer_towers() {
            let layers: Vec<Layer> = jumps
                .iter()
                .zip(&steps)
                .map(|(&j, &s)| Layer::new(rat(j), s))
                .collect();
            let tower = RamTower::new(p, layers, 0).unwrap();
            let j_inf = tower.layers().last().unwrap().jump.clone();
            let w = wild_oracle(&tower);
            for m in 1u64..=60 {
                if m % u64::from(p) == 0 {
                    continue;
                }
                let spec = BiSpec::new(tower.clone(), m).unwrap();
                let bundle = spec.bundle().unwrap();
                cases += 1;

                // Parity law: an even number of jumps exactly when the
                // largest tower jump lies below the crossing.
                let jump_count = bundle.bi.jump_table(None).len();
                assert_eq!(
                    jump_count % 2 == 0,
                    j_inf < bundle.c,
                    "parity law failed for p = {p}, m = {m}, tower {tower}"
                );

                // Star-exceptional data always have an odd count.
                let level = rat(m as i64) - &w;
                let star = j_inf == bundle.c
                    && level > rat(0)
                    && level.is_integer()
                    && num_integer::Integer::is_even(&floor_int(&level));
                if star {
                    star_cases += 1;
                    assert_eq!(jump_count % 2, 1);
                    let inv = CarayolDatum::new(spec).invariants().unwrap();
                    assert!(inv.star_exceptional);
                }
            }
        }
    }
    assert!(star_cases > 0, "the star-exceptional branch must occur");
    println!(
        "[criterion 8] parity laws on {cases} exhaustive envelopes \
         ({star_cases} star-exceptional): PASS"
    );
}

/// All strictly increasing tuples of integer jumps `1..=12` with layer
/// log-degrees summing to at most 3.
fn integer_towers() -> Vec<(Vec<i64>, Vec<u32>)> {
    let mut out = Vec::new();
    for j1 in 1i64..=12 {
        for s1 in 1u32..=3 {
            out.push((vec![j1], vec![s1]));
        }
        for j2 in (j1 + 1)..=12 {
            for (s1, s2) in [(1u32, 1u32), (1, 2), (2, 1)] {
                out.push((vec![j1, j2], vec![s1, s2]));
            }
            for j3 in (j2 + 1)..=12 {
                out.push((vec![j1, j2, j3], vec![1, 1, 1]));
            }
        }
    }
    out
}

#[test]
fn criterion_09_two_jump_scenario_reports_both_readings() {
    let report = scenario_97(1, &rat(6)).unwrap();
    assert_eq!(report.m, 15);
    assert_eq!(report.z, ratio(7, 2));

    let defining = &report.readings[0];
    assert_eq!(defining.reading, CrossingReading::DefiningEquation);
    assert_eq!(defining.c, ratio(8, 3));
    assert!(defining.in_window);
    assert!(defining.jumps_increasing);
    assert!(defining.z_half_not_integral);
    assert!(!defining.three_c_half_not_integral);
    assert!(!defining.passes_diagnostics());

    let formula = &report.readings[1];
    assert_eq!(formula.reading, CrossingReading::PrintedFormula);
    assert_eq!(formula.c, ratio(13, 6));
    assert!(formula.passes_diagnostics());

    // Tight windows leave no admissible exponent at all.
    assert!(matches!(
        scenario_97(1, &rat(2)),
        Err(BiError::NoAdmissibleM { .. })
    ));

    println!("[criterion 9] two-jump scenario finds m = 15 with split readings: PASS");
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ramify"))
}

fn write_doc(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn verify_all(path: &Path) -> Output {
    bin()
        .args(["verify-all", "--in", path.to_str().unwrap()])
        .output()
        .unwrap()
}

#[test]
fn criterion_10_cli_contract() {
    let dir = TempDir::new().unwrap();

    // Exit 0 on golden documents of every kind.
    let goldens = [
        ("tower.json", r#"{"kind":"tower","p":2,"layers":[{"jump":"1"},{"jump":"3"}]}"#),
        ("spec.json", r#"{"kind":"bispec","p":2,"m":7,"layers":[{"jump":"3"}]}"#),
        ("datum.json", r#"{"kind":"datum","p":2,"m":25,"layers":[{"jump":"5","s":2}]}"#),
        (
            "profile.json",
            r#"{"kind":"profile","p":2,"r":2,"sw":25,
                "psi":{"initial_slope":"1/4","breaks":[["13/3","1"],["31/6","4"]]}}"#,
        ),
        ("scenario.json", r#"{"kind":"scenario","a":1,"b":"6"}"#),
        (
            "psifun.json",
            r#"{"kind":"psifun","p":2,"psi":{"initial_slope":"1","breaks":[["1","2"],["3","2"]]}}"#,
        ),
    ];
    for (name, contents) in goldens {
        let path = write_doc(&dir, name, contents);
        let output = verify_all(&path);
        assert_eq!(
            output.status.code(),
            Some(0),
            "{name} should verify:\n{}",
            String::from_utf8_lossy(&output.stdout)
        );
    }

    // Moving one break of the golden profile by 1/1000000 must be caught.
    let nudged = ratio(13, 3) + ratio(1, 1_000_000);
    let perturbed = format!(
        r#"{{"kind":"profile","p":2,"r":2,"sw":25,
            "psi":{{"initial_slope":"1/4","breaks":[["{nudged}","1"],["31/6","4"]]}}}}"#
    );
    let path = write_doc(&dir, "perturbed.json", &perturbed);
    let output = verify_all(&path);
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stdout).contains("FAIL"));

    // CSV and SVG renderings are byte-stable across runs.
    let spec = dir.path().join("spec.json");
    let datum = dir.path().join("datum.json");
    let csv_args = ["bi", "build", "--in", spec.to_str().unwrap(), "--format", "csv"];
    let first = bin().args(csv_args).output().unwrap();
    let second = bin().args(csv_args).output().unwrap();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(
        String::from_utf8(first.stdout).unwrap(),
        "x,left,right,height\n7/3,1/2,2,4\n"
    );

    let svg_args = [
        "carayol",
        "psi",
        "--in",
        datum.to_str().unwrap(),
        "--level",
        "12",
        "--format",
        "svg",
    ];
    let first = bin().args(svg_args).output().unwrap();
    let second = bin().args(svg_args).output().unwrap();
    assert!(first.status.success());
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout);

    println!("[criterion 10] command-line exit codes and byte-stable renderings: PASS");
}
