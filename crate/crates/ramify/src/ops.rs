//! One function per subcommand: reads the parsed document, runs the library
//! operation, and renders the requested encoding.

use anyhow::{anyhow, bail, ensure, Result};
use clap::ValueEnum;
use num_bigint::BigInt;

use biherbrand::{scenario_97, BiError, CrossingReading};
use carayol::{
    herbrand_of_datum, level_range, standardize_target, ultrametric_convert, EpsilonCondition,
    LevelOutcome, LevelRange, StandardizeOutcome, UltraDirection,
};
use galois::{
    analyze_profile, ascend_once, descend_once, h_singular_check, restriction_table,
    GaloisProfile, Inner, RowPosition,
};
use herbrand::elementary_resolution;
use plfun::{parse_rat, PLFun, Rat};

use crate::doc::{descent_doc, profile_doc, tower_doc, DocKind, RawDoc};
use crate::render::{jump_csv, jump_lines, restriction_csv, svg_graph, Format};
use crate::verify::{bundle_check_lines, render_lines};

/// Direction of the ultrametric parameter conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    /// Solve the envelope: carry an `a`-side parameter to the `delta` side.
    AToDelta,
    /// Evaluate the envelope: carry a `delta`-side parameter to the `a` side.
    DeltaToA,
}

impl From<DirectionArg> for UltraDirection {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::AToDelta => UltraDirection::AToDelta,
            DirectionArg::DeltaToA => UltraDirection::DeltaToA,
        }
    }
}

fn expect_kind(doc: &RawDoc, allowed: &[DocKind]) -> Result<()> {
    let kind = doc.kind()?;
    if allowed.contains(&kind) {
        Ok(())
    } else {
        let names = allowed
            .iter()
            .map(|k| k.name())
            .collect::<Vec<_>>()
            .join(" or ");
        bail!("expected a {names} document, got {}", kind.name())
    }
}

const TOWER_KINDS: &[DocKind] = &[DocKind::Tower, DocKind::BiSpec, DocKind::Datum];
const SPEC_KINDS: &[DocKind] = &[DocKind::BiSpec, DocKind::Datum];

/// Renders a bounded function in the requested encoding; `text` is the
/// caller's human-readable version.
fn render_function(f: &PLFun, sigma: &Rat, format: Format, text: String) -> Result<String> {
    match format {
        Format::Text => Ok(text),
        Format::Csv => jump_csv(&f.jump_table(None)),
        Format::Svg => svg_graph(f, sigma),
    }
}

pub fn herb_eval(doc: &RawDoc, x: &str) -> Result<String> {
    expect_kind(doc, TOWER_KINDS)?;
    let tower = doc.to_tower()?;
    let x = parse_rat(x)?;
    let y = tower.build_psi().eval(&x)?;
    Ok(format!("psi({x}) = {y}\n"))
}

pub fn herb_jumps(doc: &RawDoc, format: Format) -> Result<String> {
    expect_kind(doc, TOWER_KINDS)?;
    let table = doc.to_tower()?.build_psi().jump_table(None);
    match format {
        Format::Text => Ok(jump_lines(&table)),
        Format::Csv => jump_csv(&table),
        Format::Svg => bail!("--format svg needs a bounded graph; use `bi build` or `carayol psi`"),
    }
}

pub fn herb_wild(doc: &RawDoc) -> Result<String> {
    expect_kind(doc, TOWER_KINDS)?;
    let tower = doc.to_tower()?;
    let mut out = format!("degree = {}\n", tower.degree());
    out.push_str(&format!("wild exponent = {}\n", tower.wild_exponent()));
    if let Ok(j) = tower.j_infinity() {
        out.push_str(&format!("largest jump = {j}\n"));
    }
    Ok(out)
}

pub fn herb_resolve(doc: &RawDoc) -> Result<String> {
    expect_kind(doc, &[DocKind::PsiFun])?;
    let (p, parts) = doc.psifun_parts()?;
    let tower = elementary_resolution(&parts.build()?, p)?;
    Ok(tower_doc(&tower)? + "\n")
}

pub fn herb_lift(doc: &RawDoc, e: u32) -> Result<String> {
    expect_kind(doc, TOWER_KINDS)?;
    let lifted = doc.to_tower()?.tame_lift(e)?;
    Ok(tower_doc(&lifted)? + "\n")
}

pub fn bi_build(doc: &RawDoc, format: Format) -> Result<String> {
    expect_kind(doc, SPEC_KINDS)?;
    let spec = doc.to_bispec()?;
    let bundle = spec.bundle()?;
    let mut text = format!(
        "p = {}\nr = {}\nm = {}\nsigma = {}\ncrossing = {}\n",
        spec.p(),
        spec.r(),
        spec.m(),
        spec.sigma(),
        bundle.c
    );
    match &bundle.jbar_infinity {
        Some(j) => text.push_str(&format!("mirrored largest jump = {j}\n")),
        None => text.push_str("mirrored largest jump = none\n"),
    }
    text.push_str(&format!("one-sided: {}\n", bundle.psi_times));
    text.push_str(&format!("mirror:    {}\n", bundle.psi_plus));
    text.push_str(&format!("envelope:  {}\n", bundle.bi));
    text.push_str(&jump_lines(&bundle.bi.jump_table(None)));
    render_function(&bundle.bi, &spec.sigma(), format, text)
}

pub fn bi_c(doc: &RawDoc) -> Result<String> {
    expect_kind(doc, SPEC_KINDS)?;
    Ok(format!("c = {}\n", doc.to_bispec()?.crossing_point()?))
}

pub fn bi_check(doc: &RawDoc) -> Result<(String, bool)> {
    expect_kind(doc, SPEC_KINDS)?;
    let spec = doc.to_bispec()?;
    let lines = bundle_check_lines(&spec)?;
    Ok(render_lines(doc.kind()?, &lines))
}

pub fn carayol_invariants(doc: &RawDoc, q: Option<u64>) -> Result<String> {
    expect_kind(doc, SPEC_KINDS)?;
    let inv = doc.to_datum()?.invariants()?;
    let mut out = format!(
        "p = {}\nr = {}\nm = {}\nw = {}\nl = {}\nlambda = {}\nlambda_prime = {}\n\
         epsilon = {}\nc = {}\nj_infinity = {}\ncase = {}\nstar_exceptional = {}\n",
        inv.p,
        inv.r,
        inv.m,
        inv.w,
        inv.l,
        inv.lambda,
        inv.lambda_prime,
        inv.epsilon,
        inv.c,
        inv.j_infinity,
        inv.case,
        inv.star_exceptional
    );
    if let Some(q) = q {
        let power = num_traits::pow(BigInt::from(q), usize::try_from(inv.lambda)?);
        out.push_str(&format!("q^lambda = {power}\n"));
    }
    Ok(out)
}

pub fn carayol_psi(doc: &RawDoc, level: u64, format: Format) -> Result<String> {
    expect_kind(doc, SPEC_KINDS)?;
    let datum = doc.to_datum()?;
    let f = herbrand_of_datum(&datum, level)?;
    let text = format!("twisted at level {level}: {f}\n{}", jump_lines(&f.jump_table(None)));
    render_function(&f, &datum.spec().sigma(), format, text)
}

pub fn carayol_classify(doc: &RawDoc) -> Result<String> {
    expect_kind(doc, SPEC_KINDS)?;
    let inv = doc.to_datum()?.invariants()?;
    let mut out = format!("case = {}\n", inv.case);
    match level_range(inv.m, &inv.w) {
        LevelRange::Forced(level) => out.push_str(&format!("levels = forced to {level}\n")),
        LevelRange::Bounded { max } => out.push_str(&format!("levels = 0 through {max}\n")),
    }
    match standardize_target(inv.p, inv.m, &inv.w) {
        StandardizeOutcome::AlreadyStandard(case) => {
            out.push_str(&format!("standardize = already standard (case {case})\n"));
        }
        StandardizeOutcome::RaisableTo { to_b, to_c } => {
            out.push_str(&format!(
                "standardize = raise the wild exponent to {to_b} (case B) or to {to_c} (case C)\n"
            ));
        }
    }
    Ok(out)
}

pub fn carayol_vary(doc: &RawDoc, level: u64, d: u64) -> Result<String> {
    expect_kind(doc, SPEC_KINDS)?;
    let inv = doc.to_datum()?.invariants()?;
    let (rest, outcome) = carayol::vary_parameter(inv.p, inv.m, &inv.w, level, d)?;
    let outcome = match outcome {
        LevelOutcome::Exactly(v) => format!("exactly {v}"),
        LevelOutcome::StrictlyBelow(v) => format!("strictly below {v}"),
        LevelOutcome::AtMost(v) => format!("at most {v}"),
    };
    Ok(format!("complementary exponent = {rest}\nlevel = {outcome}\n"))
}

pub fn carayol_distance(doc: &RawDoc, direction: DirectionArg, value: &str) -> Result<String> {
    expect_kind(doc, SPEC_KINDS)?;
    let datum = doc.to_datum()?;
    let report = ultrametric_convert(&datum, direction.into(), &parse_rat(value)?)?;
    let direction = match report.direction {
        UltraDirection::AToDelta => "a-to-delta",
        UltraDirection::DeltaToA => "delta-to-a",
    };
    let condition = match report.condition {
        None => "none",
        Some(EpsilonCondition::JInfBelowCrossing) => "largest-jump-below-crossing",
        Some(EpsilonCondition::StarExceptional) => "star-exceptional",
    };
    Ok(format!(
        "direction = {direction}\ninput = {}\noutput = {}\nmax a = {}\nmax delta = {}\n\
         epsilon equals crossing = {}\nclosure condition = {condition}\n",
        report.input, report.output, report.max_a, report.max_delta, report.epsilon_equals_c
    ))
}

fn profile_input(doc: &RawDoc, lift: Option<u64>) -> Result<GaloisProfile> {
    expect_kind(doc, &[DocKind::Profile])?;
    let profile = doc.to_profile()?;
    match lift {
        Some(e) => Ok(profile.tame_lift(e)?),
        None => Ok(profile),
    }
}

pub fn galois_analyze(doc: &RawDoc, lift: Option<u64>) -> Result<String> {
    let profile = profile_input(doc, lift)?;
    let report = analyze_profile(&profile)?;
    let mut out = format!(
        "crossing = {}\ncrossing is jump = {}\ncore dimension = {}\ncentric degree = {}\n",
        report.c, report.crossing_is_jump, report.dim_core, report.centric_degree
    );
    let layers = report
        .l_tower
        .layers()
        .iter()
        .map(|l| format!("jump {} (s = {})", l.jump, l.s))
        .collect::<Vec<_>>();
    if layers.is_empty() {
        out.push_str("decomposition layers = none\n");
    } else {
        out.push_str(&format!("decomposition layers = {}\n", layers.join("; ")));
    }
    out.push_str(&format!("decomposition wild exponent = {}\n", report.w_l));
    out.push_str(&format!("core swan = {}\n", report.sw_core));
    match &report.core_jump {
        Some(j) => out.push_str(&format!("core jump = {j}\n")),
        None => out.push_str("core jump = none\n"),
    }
    Ok(out)
}

pub fn galois_table(doc: &RawDoc, lift: Option<u64>, format: Format) -> Result<String> {
    let profile = profile_input(doc, lift)?;
    let table = restriction_table(&profile)?;
    match format {
        Format::Text => {
            let mut out = String::new();
            for row in &table.rows {
                let position = match row.position {
                    RowPosition::FirstHalf => "first half, multiplicity-free",
                    RowPosition::Midpoint => "midpoint",
                    RowPosition::SecondHalf => "second half, character fission",
                };
                out.push_str(&format!(
                    "jump at {}: {} -> {} (ratio {}) [{position}]\n",
                    row.x, row.d, row.d_plus, row.ratio
                ));
            }
            out.push_str(&format!("ratio product = {}\n", table.ratio_product));
            Ok(out)
        }
        Format::Csv => restriction_csv(&table),
        Format::Svg => bail!("the restriction table has no graph; use --format text or csv"),
    }
}

pub fn galois_descend(doc: &RawDoc, lift: Option<u64>) -> Result<String> {
    let profile = profile_input(doc, lift)?;
    Ok(descent_doc(&descend_once(&profile)?)? + "\n")
}

pub fn galois_ascend(
    doc: Option<RawDoc>,
    layer_jump: &str,
    layer_height: u64,
    character_sw: Option<u64>,
    p_flag: Option<u32>,
) -> Result<String> {
    let jump = parse_rat(layer_jump)?;
    let (p, inner) = match (doc, character_sw) {
        (Some(_), Some(_)) => {
            bail!("give either --in (an inner profile) or --character-sw, not both")
        }
        (Some(doc), None) => {
            expect_kind(&doc, &[DocKind::Profile])?;
            let inner = doc.to_profile()?;
            let p = inner.p();
            if let Some(flag) = p_flag {
                ensure!(flag == p, "--p {flag} conflicts with the inner profile's p = {p}");
            }
            (p, Inner::Profile(inner))
        }
        (None, Some(sw)) => {
            let p = p_flag.ok_or_else(|| anyhow!("--character-sw needs --p"))?;
            (p, Inner::Character { sw })
        }
        (None, None) => bail!("ascending needs an inner datum: --in PROFILE or --character-sw N"),
    };
    let outer = ascend_once(p, &jump, layer_height, &inner)?;
    Ok(profile_doc(&outer)? + "\n")
}

pub fn galois_hsingular(doc: &RawDoc, lift: Option<u64>) -> Result<String> {
    let profile = profile_input(doc, lift)?;
    let report = h_singular_check(&profile)?;
    Ok(format!(
        "jump = {}\ntwist swan = {}\ncentric degree = {}\nslopes = {} then {}\n",
        report.jump,
        report.twist_swan,
        report.centric_degree,
        report.sigma_slopes.0,
        report.sigma_slopes.1
    ))
}

/// Resolves the scenario inputs from flags or a document (flags win).
pub fn scenario_inputs(
    doc: Option<RawDoc>,
    a: Option<u64>,
    b: Option<&str>,
) -> Result<(u64, Rat)> {
    let from_doc = match doc {
        Some(doc) => {
            expect_kind(&doc, &[DocKind::Scenario])?;
            Some(doc.to_scenario()?)
        }
        None => None,
    };
    let a = a.or(from_doc.as_ref().map(|(a, _)| *a));
    let b = match b {
        Some(b) => Some(parse_rat(b)?),
        None => from_doc.map(|(_, b)| b),
    };
    match (a, b) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => bail!("the scenario needs both a and b, from flags or an input document"),
    }
}

pub fn scenario(a: u64, b: &Rat) -> Result<String> {
    let report = match scenario_97(a, b) {
        Ok(report) => report,
        Err(BiError::NoAdmissibleM { a, b }) => {
            return Ok(format!(
                "no admissible exponent for a = {a}, b = {b} below the search bound\n"
            ));
        }
        Err(e) => return Err(e.into()),
    };
    let mut out = format!(
        "a = {}\nb = {}\nm = {}\nshared jump z = {}\n",
        report.a, report.b, report.m, report.z
    );
    for r in &report.readings {
        let name = match r.reading {
            CrossingReading::DefiningEquation => "defining-equation",
            CrossingReading::PrintedFormula => "printed-formula",
        };
        out.push_str(&format!(
            "reading {name}: c = {}, window {}, increasing {}, z-half {}, 3c-half {} => {}\n",
            r.c,
            ok_no(r.in_window),
            ok_no(r.jumps_increasing),
            ok_no(r.z_half_not_integral),
            ok_no(r.three_c_half_not_integral),
            if r.passes_diagnostics() {
                "admissible"
            } else {
                "rejected"
            }
        ));
    }
    Ok(out)
}

fn ok_no(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "no"
    }
}

/// `verify-all`: run and render every supported check.
pub fn verify_all(doc: &RawDoc) -> Result<(String, bool)> {
    let (kind, lines) = crate::verify::verify_doc(doc)?;
    Ok(render_lines(kind, &lines))
}
