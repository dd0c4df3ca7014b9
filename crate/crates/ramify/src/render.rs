//! Output encodings: plain text, exact-rational CSV, and SVG graphs.
//!
//! Every renderer is a pure function of its input, so repeated runs over the
//! same document produce byte-identical output.

use anyhow::{anyhow, Result};
use clap::ValueEnum;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use plfun::{JumpTable, PLFun, Rat};

use galois::RestrictionTable;

/// The selectable output encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable lines.
    Text,
    /// `x,left,right,height` rows with exact rational entries.
    Csv,
    /// An SVG graph of the function.
    Svg,
}

/// Renders a jump table as CSV: one row per jump, columns `x` (abscissa),
/// `left`/`right` (one-sided slopes), and `height` (their ratio).
pub fn jump_csv(table: &JumpTable) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(["x", "left", "right", "height"])?;
    for e in table.iter() {
        w.write_record([
            e.x.to_string(),
            e.left_slope.to_string(),
            e.right_slope.to_string(),
            e.height.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| anyhow!("{e}"))?;
    Ok(String::from_utf8(bytes)?)
}

/// Renders a restriction table as CSV with the same column layout: `left` and
/// `right` are the dimensions on either side of each jump and `height` their
/// ratio.
pub fn restriction_csv(table: &RestrictionTable) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(["x", "left", "right", "height"])?;
    for row in &table.rows {
        w.write_record([
            row.x.to_string(),
            row.d.to_string(),
            row.d_plus.to_string(),
            row.ratio.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| anyhow!("{e}"))?;
    Ok(String::from_utf8(bytes)?)
}

/// One text line per jump of a table.
pub fn jump_lines(table: &JumpTable) -> String {
    if table.is_empty() {
        return "no jumps\n".into();
    }
    let mut out = String::new();
    for e in table.iter() {
        out.push_str(&format!(
            "jump at {}: slope {} -> {} (height {})\n",
            e.x, e.left_slope, e.right_slope, e.height
        ));
    }
    out
}

/// Renders a bounded function on `[0, sigma]` as an SVG graph: the polyline
/// through its vertices, the symmetry axis `x + y = sigma`, and one labeled
/// marker per jump.
///
/// All coordinates are multiplied by the least common multiple of the
/// denominators in play, so the emitted numbers are exact integers and the
/// output is stable byte for byte.
pub fn svg_graph(f: &PLFun, sigma: &Rat) -> Result<String> {
    let verts = f.vertices();
    if verts.len() < 2 {
        return Err(anyhow!("nothing to draw: the function has no extent"));
    }
    let mut l: BigInt = sigma.denom().clone();
    for (x, y) in &verts {
        l = l.lcm(x.denom());
        l = l.lcm(y.denom());
    }
    let scale = Rat::from_integer(l);
    let frame = (sigma * &scale).to_integer();
    let to_x = |v: &Rat| (v * &scale).to_integer();
    let to_y = |v: &Rat| &frame - (v * &scale).to_integer();

    let pad = std::cmp::max(BigInt::one(), &frame / 10);
    let marker = std::cmp::max(BigInt::one(), &frame / 60);
    let font = std::cmp::max(BigInt::one(), &frame / 18);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">\n",
        -&pad,
        -&pad,
        &frame + 2 * &pad,
        &frame + 2 * &pad,
    ));
    // The symmetry axis x + y = sigma runs from (0, sigma) to (sigma, 0),
    // which is the main diagonal once the y axis is flipped for SVG.
    out.push_str(&format!(
        "  <line x1=\"0\" y1=\"0\" x2=\"{frame}\" y2=\"{frame}\" stroke=\"#999999\" \
         stroke-width=\"{marker}\" stroke-dasharray=\"{font}\"/>\n"
    ));
    let points = verts
        .iter()
        .map(|(x, y)| format!("{},{}", to_x(x), to_y(y)))
        .collect::<Vec<_>>()
        .join(" ");
    out.push_str(&format!(
        "  <polyline points=\"{points}\" fill=\"none\" stroke=\"#0066cc\" stroke-width=\"{marker}\"/>\n"
    ));
    for e in f.jump_table(None).iter() {
        let x = to_x(&e.x);
        let y = to_y(&f.eval(&e.x)?);
        let tx = &x + 2 * &marker;
        let ty = &y - 2 * &marker;
        out.push_str(&format!(
            "  <circle cx=\"{x}\" cy=\"{y}\" r=\"{marker}\" fill=\"#cc2222\"/>\n"
        ));
        out.push_str(&format!(
            "  <text x=\"{tx}\" y=\"{ty}\" font-size=\"{font}\" fill=\"#333333\">x = {}</text>\n",
            e.x
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}
