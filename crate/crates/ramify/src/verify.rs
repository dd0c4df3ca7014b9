//! The `verify-all` pipeline: every named check a document supports, one
//! PASS/FAIL line per check.
//!
//! Syntax problems (unreadable JSON, unparsable rationals, missing fields)
//! are reported as errors and exit with the usage status. Semantic failures
//! (a document that parses but violates an invariant) become FAIL lines and
//! the verification exit status.

use anyhow::Result;
use num_traits::ToPrimitive;

use biherbrand::{carayol_jump_checks, scenario_97, verify_symmetry, BiError, BiSpec};
use carayol::{classify, level_range, LevelRange, StandardCase};
use galois::{
    analyze_profile, ascend_once, descend_once, h_singular_check, restriction_table,
    GaloisProfile,
};
use herbrand::{elementary_resolution, RamTower};
use plfun::{rat, rat_pow};

use crate::doc::{DocKind, RawDoc};

/// One verification line.
pub struct VerifyLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl VerifyLine {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        VerifyLine {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// Renders the lines plus a final `result:` summary; returns the rendered
/// text and whether everything passed.
pub fn render_lines(kind: DocKind, lines: &[VerifyLine]) -> (String, bool) {
    let mut out = String::new();
    let mut pass = true;
    for line in lines {
        if line.pass {
            out.push_str(&format!("[{}] {}: PASS\n", kind.name(), line.name));
        } else {
            pass = false;
            out.push_str(&format!(
                "[{}] {}: FAIL — {}\n",
                kind.name(),
                line.name,
                line.detail
            ));
        }
    }
    out.push_str(&format!("result: {}\n", if pass { "PASS" } else { "FAIL" }));
    (out, pass)
}

/// Runs every check the document supports.
pub fn verify_doc(doc: &RawDoc) -> Result<(DocKind, Vec<VerifyLine>)> {
    let kind = doc.kind()?;
    let lines = match kind {
        DocKind::Tower => verify_tower(doc)?,
        DocKind::BiSpec => verify_bispec(doc)?,
        DocKind::Datum => verify_datum(doc)?,
        DocKind::Profile => verify_profile(doc)?,
        DocKind::Scenario => verify_scenario(doc)?,
        DocKind::PsiFun => verify_psifun(doc)?,
    };
    Ok((kind, lines))
}

fn verify_tower(doc: &RawDoc) -> Result<Vec<VerifyLine>> {
    let (p, layers, insep_s) = doc.tower_parts()?;
    let mut lines = Vec::new();
    let tower = match RamTower::new(p, layers, insep_s) {
        Ok(t) => t,
        Err(e) => {
            lines.push(VerifyLine::new("construction", false, e.to_string()));
            return Ok(lines);
        }
    };
    lines.push(VerifyLine::new("construction", true, ""));
    lines.push(wild_bounds_line(&tower));
    lines.push(resolution_round_trip_line(&tower));
    Ok(lines)
}

/// `(p^r - 1) j_first <= w <= (p^r - 1) j_last` over the separable part,
/// with equality on the right exactly for single-layer towers.
fn wild_bounds_line(tower: &RamTower) -> VerifyLine {
    let w = match tower.wild_exponent().finite() {
        Some(w) => w.clone(),
        None => {
            return VerifyLine::new("wild-bounds", true, "wild exponent is infinite");
        }
    };
    let layers = tower.layers();
    if layers.is_empty() {
        return VerifyLine::new("wild-bounds", w == rat(0), "trivial tower");
    }
    let deg = rat_pow(tower.p(), tower.separable_log() as i32) - rat(1);
    let lo = &deg * &layers[0].jump;
    let hi = &deg * &layers[layers.len() - 1].jump;
    let tight = layers.len() == 1;
    let pass = lo <= w && w <= hi && ((w == hi) == tight);
    VerifyLine::new(
        "wild-bounds",
        pass,
        format!("need {lo} <= {w} <= {hi}, right equality only for one layer"),
    )
}

/// The Herbrand function determines the tower: resolving it elementarily
/// recovers the separable layers.
fn resolution_round_trip_line(tower: &RamTower) -> VerifyLine {
    match elementary_resolution(&tower.build_psi(), tower.p()) {
        Ok(back) if back.layers() == tower.layers() => {
            VerifyLine::new("resolution-round-trip", true, "")
        }
        Ok(back) => VerifyLine::new(
            "resolution-round-trip",
            false,
            format!("resolved to {:?}", back.layers()),
        ),
        Err(e) => VerifyLine::new("resolution-round-trip", false, e.to_string()),
    }
}

/// The shared bundle checks run by both `bi check` and `verify-all`:
/// the jump-shape report, symmetry, interior positivity, and the crossing.
pub fn bundle_check_lines(spec: &BiSpec) -> Result<Vec<VerifyLine>> {
    let bundle = spec.bundle()?;
    let sigma = spec.sigma();
    let mut lines = Vec::new();
    for check in carayol_jump_checks(&bundle.bi, spec.p(), spec.r(), spec.m()).checks {
        lines.push(VerifyLine::new(check.name, check.pass, check.detail));
    }
    let symmetry = verify_symmetry(&bundle.bi, &sigma);
    lines.push(VerifyLine::new("symmetry", symmetry.pass, symmetry.detail));
    match bundle.interior_bound_witness() {
        None => lines.push(VerifyLine::new("interior-bound", true, "")),
        Some(x) => lines.push(VerifyLine::new(
            "interior-bound",
            false,
            format!("0 < f(x) < x fails at x = {x}"),
        )),
    }
    let on_axis = &bundle.c + bundle.psi_times.eval(&bundle.c)? == sigma;
    let on_envelope = bundle.bi.eval(&bundle.c)? == bundle.psi_times.eval(&bundle.c)?;
    lines.push(VerifyLine::new(
        "crossing-on-graph",
        on_axis && on_envelope,
        format!("c = {}", bundle.c),
    ));
    Ok(lines)
}

fn verify_bispec(doc: &RawDoc) -> Result<Vec<VerifyLine>> {
    let (p, layers, insep_s) = doc.tower_parts()?;
    let m = doc.require_m()?;
    let mut lines = Vec::new();
    let spec = match RamTower::new(p, layers, insep_s)
        .map_err(BiError::from)
        .and_then(|t| BiSpec::new(t, m))
    {
        Ok(s) => s,
        Err(e) => {
            lines.push(VerifyLine::new("construction", false, e.to_string()));
            return Ok(lines);
        }
    };
    lines.push(VerifyLine::new("construction", true, ""));
    lines.extend(bundle_check_lines(&spec)?);
    Ok(lines)
}

fn verify_datum(doc: &RawDoc) -> Result<Vec<VerifyLine>> {
    let mut lines = verify_bispec(doc)?;
    if lines.iter().any(|l| l.name == "construction" && !l.pass) {
        return Ok(lines);
    }
    let datum = doc.to_datum().expect("construction already checked");
    let inv = datum.invariants()?;
    let bundle = datum.bundle()?;

    lines.push(VerifyLine::new(
        "epsilon-range",
        inv.epsilon <= inv.c,
        format!("epsilon = {}, c = {}", inv.epsilon, inv.c),
    ));

    // Crossing vs. the midpoint (m + w) / 2p^r: equality on both identities
    // when the largest jump is at most the crossing, strict inequalities
    // otherwise.
    let scale = rat_pow(inv.p, -(inv.r as i32));
    let mid = (rat(inv.m as i64) + &inv.w) * &scale / rat(2);
    let half_gap = (rat(inv.m as i64) - &inv.w) * &scale / rat(2);
    let at_c = bundle.psi_times.eval(&inv.c)?;
    let pass = if inv.j_infinity <= inv.c {
        inv.c == mid && at_c == half_gap
    } else {
        inv.c < mid && at_c > half_gap
    };
    lines.push(VerifyLine::new(
        "crossing-midpoint",
        pass,
        format!("c = {}, midpoint = {mid}", inv.c),
    ));

    let forced = level_range(inv.m, &inv.w);
    let case_a = classify(inv.p, inv.m, &inv.w) == StandardCase::A;
    let pass = match &forced {
        LevelRange::Forced(level) => case_a && *level == inv.l,
        LevelRange::Bounded { .. } => !case_a,
    };
    lines.push(VerifyLine::new(
        "level-consistency",
        pass,
        format!("case = {}, intrinsic level = {}", inv.case, inv.l),
    ));

    let jump_count = bundle.bi.jump_table(None).len();
    lines.push(VerifyLine::new(
        "star-parity",
        !inv.star_exceptional || jump_count % 2 == 1,
        format!("star-exceptional with {jump_count} jumps"),
    ));
    Ok(lines)
}

fn verify_profile(doc: &RawDoc) -> Result<Vec<VerifyLine>> {
    let (p, r, sw, parts) = doc.profile_parts()?;
    let mut lines = Vec::new();
    let psi = match parts.build() {
        Ok(f) => f,
        Err(e) => {
            lines.push(VerifyLine::new("function-data", false, e.to_string()));
            return Ok(lines);
        }
    };
    lines.push(VerifyLine::new("function-data", true, ""));
    let report = GaloisProfile::validation_report(p, r, sw, &psi);
    let all_pass = report.pass();
    for check in report.checks {
        lines.push(VerifyLine::new(check.name, check.pass, check.detail));
    }
    if !all_pass {
        return Ok(lines);
    }
    let profile = GaloisProfile::new(p, r, sw, psi).expect("report already passed");

    match analyze_profile(&profile) {
        Ok(report) => lines.push(VerifyLine::new(
            "decomposition",
            true,
            format!("core dimension {}", report.dim_core),
        )),
        Err(e) => lines.push(VerifyLine::new("decomposition", false, e.to_string())),
    }

    lines.push(match restriction_table(&profile) {
        Ok(table) => {
            let centric = rat_pow(p, 2 * r as i32);
            let chained = table
                .rows
                .windows(2)
                .all(|w| w[0].d_plus == w[1].d)
                && table.rows.first().map_or(true, |row| row.d == rat(1))
                && table.rows.last().map_or(true, |row| row.d_plus == centric);
            VerifyLine::new(
                "restriction-product",
                table.ratio_product == centric && chained,
                format!("ratio product = {}", table.ratio_product),
            )
        }
        Err(e) => VerifyLine::new("restriction-product", false, e.to_string()),
    });

    let jumps = profile.jumps();
    if jumps.len() >= 2 && jumps.first().map_or(false, |e| e.x.is_integer()) {
        let line = match descend_once(&profile).and_then(|d| {
            ascend_once(p, &d.layer_jump, d.layer_height, &d.inner)
        }) {
            Ok(rebuilt) if rebuilt == profile => VerifyLine::new("layer-round-trip", true, ""),
            Ok(_) => VerifyLine::new(
                "layer-round-trip",
                false,
                "descending and ascending changed the profile".to_string(),
            ),
            Err(e) => VerifyLine::new("layer-round-trip", false, e.to_string()),
        };
        lines.push(line);
    } else {
        lines.push(VerifyLine::new(
            "layer-round-trip",
            true,
            "not applicable: needs two jumps with an integral first jump",
        ));
    }

    if jumps.len() == 1 {
        lines.push(match h_singular_check(&profile) {
            Ok(report) => VerifyLine::new(
                "single-jump-form",
                true,
                format!("jump = {}", report.jump),
            ),
            Err(e) => VerifyLine::new("single-jump-form", false, e.to_string()),
        });
    } else {
        lines.push(VerifyLine::new(
            "single-jump-form",
            true,
            "not applicable: more than one jump",
        ));
    }
    Ok(lines)
}

fn verify_scenario(doc: &RawDoc) -> Result<Vec<VerifyLine>> {
    let (a, b) = doc.to_scenario()?;
    let mut lines = Vec::new();
    let report = match scenario_97(a, &b) {
        Ok(r) => r,
        Err(e) => {
            lines.push(VerifyLine::new("search", false, e.to_string()));
            return Ok(lines);
        }
    };
    lines.push(VerifyLine::new(
        "search",
        true,
        format!("m = {}", report.m),
    ));
    lines.push(VerifyLine::new(
        "shared-jump",
        report.readings.iter().all(|r| r.z_half_not_integral),
        format!("z = {}", report.z),
    ));
    lines.push(VerifyLine::new(
        "admissible-reading",
        report.readings.iter().any(|r| r.passes_diagnostics()),
        "no crossing reading passes all diagnostics".to_string(),
    ));
    Ok(lines)
}

fn verify_psifun(doc: &RawDoc) -> Result<Vec<VerifyLine>> {
    let (p, parts) = doc.psifun_parts()?;
    let mut lines = Vec::new();
    let f = match parts.build() {
        Ok(f) => f,
        Err(e) => {
            lines.push(VerifyLine::new("function-data", false, e.to_string()));
            return Ok(lines);
        }
    };
    lines.push(VerifyLine::new("function-data", true, ""));
    let tower = match elementary_resolution(&f, p) {
        Ok(t) => t,
        Err(e) => {
            lines.push(VerifyLine::new("herbrand-shape", false, e.to_string()));
            return Ok(lines);
        }
    };
    let degree = tower
        .degree()
        .to_u64()
        .map(|d| d.to_string())
        .unwrap_or_else(|| tower.degree().to_string());
    lines.push(VerifyLine::new(
        "herbrand-shape",
        true,
        format!("tower of degree {degree}"),
    ));
    let rebuilt = tower.build_psi();
    let round_trip = match f.domain_end() {
        Some(end) => rebuilt.restrict(end).map(|g| g == f).unwrap_or(false),
        None => rebuilt == f,
    };
    lines.push(VerifyLine::new(
        "resolution-round-trip",
        round_trip,
        "the resolved tower rebuilds the input function".to_string(),
    ));
    Ok(lines)
}
