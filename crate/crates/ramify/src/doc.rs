//! JSON documents read and written by the command line: towers, tower/exponent
//! pairs, ramification data, symmetric profiles, scenario searches, and bare
//! piecewise-linear functions.
//!
//! All rationals travel as strings (`"13/3"`, `"5"`) so every value stays
//! exact. A document usually names its `kind`; when it does not, the kind is
//! inferred from which fields are present.

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use biherbrand::BiSpec;
use carayol::CarayolDatum;
use galois::GaloisProfile;
use herbrand::{Layer, RamTower};
use plfun::{parse_rat, rat, rat_pow, PLFun, PlError, Rat};

/// One tower layer: the ramification jump and the log-degree of the layer.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LayerDoc {
    /// The ramification jump, an exact rational string.
    pub jump: String,
    /// The log-degree of the layer (the layer has degree `p^s`); defaults to 1.
    #[serde(default = "default_s")]
    pub s: u32,
}

fn default_s() -> u32 {
    1
}

/// A piecewise-linear function: value at zero, initial slope, and the list of
/// `(x, slope after x)` breaks, with an optional right end of the domain.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PsiDoc {
    /// Value at the origin; defaults to `0`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value_at_zero: Option<String>,
    /// Slope on the first piece.
    pub initial_slope: String,
    /// Break abscissae with the slope taking over after each.
    #[serde(default)]
    pub breaks: Vec<(String, String)>,
    /// Right end of the domain; unbounded (or implied by context) if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain_end: Option<String>,
}

/// The union of all recognized input fields. Each command reads one kind out
/// of it; unknown fields are rejected so typos surface as parse errors.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDoc {
    /// `tower`, `bispec`, `datum`, `profile`, `scenario`, or `psifun`.
    #[serde(default)]
    pub kind: Option<String>,
    #[serde(default)]
    pub p: Option<u32>,
    #[serde(default)]
    pub r: Option<u32>,
    #[serde(default)]
    pub m: Option<u64>,
    #[serde(default)]
    pub sw: Option<u64>,
    #[serde(default)]
    pub layers: Option<Vec<LayerDoc>>,
    #[serde(default)]
    pub insep_s: Option<u32>,
    #[serde(default)]
    pub psi: Option<PsiDoc>,
    /// Jump abscissa/height pairs, an alternative way to give a profile's
    /// function.
    #[serde(default)]
    pub jumps: Option<Vec<(String, String)>>,
    #[serde(default)]
    pub a: Option<u64>,
    #[serde(default)]
    pub b: Option<String>,
}

/// The document kinds the commands dispatch on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocKind {
    Tower,
    BiSpec,
    Datum,
    Profile,
    Scenario,
    PsiFun,
}

impl DocKind {
    /// The name used in the `kind` field.
    pub fn name(self) -> &'static str {
        match self {
            DocKind::Tower => "tower",
            DocKind::BiSpec => "bispec",
            DocKind::Datum => "datum",
            DocKind::Profile => "profile",
            DocKind::Scenario => "scenario",
            DocKind::PsiFun => "psifun",
        }
    }
}

/// The numeric fields of a piecewise-linear function, parsed but not yet
/// assembled, so shape validation can be reported separately from parsing.
#[derive(Debug, Clone)]
pub struct FunParts {
    pub value_at_zero: Rat,
    pub initial_slope: Rat,
    pub breaks: Vec<(Rat, Rat)>,
    pub domain_end: Option<Rat>,
}

impl FunParts {
    /// Assembles the function, validating the break list.
    pub fn build(&self) -> Result<PLFun, PlError> {
        PLFun::new(
            self.value_at_zero.clone(),
            self.initial_slope.clone(),
            self.breaks.clone(),
            self.domain_end.clone(),
        )
    }
}

impl RawDoc {
    /// Parses a JSON document.
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("malformed input document")
    }

    /// The declared kind, or the kind inferred from the fields present.
    pub fn kind(&self) -> Result<DocKind> {
        if let Some(kind) = &self.kind {
            return match kind.as_str() {
                "tower" => Ok(DocKind::Tower),
                "bispec" => Ok(DocKind::BiSpec),
                "datum" => Ok(DocKind::Datum),
                "profile" => Ok(DocKind::Profile),
                "scenario" => Ok(DocKind::Scenario),
                "psifun" => Ok(DocKind::PsiFun),
                other => Err(anyhow!("unknown document kind {other:?}")),
            };
        }
        if self.a.is_some() || self.b.is_some() {
            Ok(DocKind::Scenario)
        } else if self.sw.is_some() {
            Ok(DocKind::Profile)
        } else if self.m.is_some() {
            Ok(DocKind::Datum)
        } else if self.layers.is_some() {
            Ok(DocKind::Tower)
        } else if self.psi.is_some() {
            Ok(DocKind::PsiFun)
        } else {
            Err(anyhow!(
                "cannot infer the document kind: no identifying fields present"
            ))
        }
    }

    fn require_p(&self) -> Result<u32> {
        self.p.ok_or_else(|| anyhow!("missing field: p"))
    }

    /// The tower fields with all rationals parsed: `(p, layers, insep_s)`.
    pub fn tower_parts(&self) -> Result<(u32, Vec<Layer>, u32)> {
        let p = self.require_p()?;
        let docs = self
            .layers
            .as_ref()
            .ok_or_else(|| anyhow!("missing field: layers"))?;
        let layers = docs
            .iter()
            .map(|l| Ok(Layer::new(parse_rat(&l.jump)?, l.s)))
            .collect::<Result<Vec<_>>>()?;
        Ok((p, layers, self.insep_s.unwrap_or(0)))
    }

    /// Builds and validates the ramification tower.
    pub fn to_tower(&self) -> Result<RamTower> {
        let (p, layers, insep_s) = self.tower_parts()?;
        Ok(RamTower::new(p, layers, insep_s)?)
    }

    /// The exponent `m` of a tower/exponent document.
    pub fn require_m(&self) -> Result<u64> {
        self.m.ok_or_else(|| anyhow!("missing field: m"))
    }

    /// Builds and validates the tower/exponent pair.
    pub fn to_bispec(&self) -> Result<BiSpec> {
        Ok(BiSpec::new(self.to_tower()?, self.require_m()?)?)
    }

    /// Wraps the tower/exponent pair as a ramification datum.
    pub fn to_datum(&self) -> Result<CarayolDatum> {
        Ok(CarayolDatum::new(self.to_bispec()?))
    }

    /// The profile fields with the function parsed but not validated:
    /// `(p, r, sw, function parts)`. The function may be given directly
    /// under `psi`, or as jump/height pairs under `jumps`, in which case the
    /// slopes cascade up from `p^{-r}`.
    pub fn profile_parts(&self) -> Result<(u32, u32, u64, FunParts)> {
        let p = self.require_p()?;
        let r = self.r.ok_or_else(|| anyhow!("missing field: r"))?;
        let sw = self.sw.ok_or_else(|| anyhow!("missing field: sw"))?;
        let sigma = rat(sw as i64) * rat_pow(p, -(r as i32));
        let parts = if let Some(psi) = &self.psi {
            fun_parts(psi, Some(sigma))?
        } else if let Some(jumps) = &self.jumps {
            let initial = rat_pow(p, -(r as i32));
            let mut slope = initial.clone();
            let mut breaks = Vec::with_capacity(jumps.len());
            for (x, h) in jumps {
                slope *= parse_rat(h)?;
                breaks.push((parse_rat(x)?, slope.clone()));
            }
            FunParts {
                value_at_zero: rat(0),
                initial_slope: initial,
                breaks,
                domain_end: Some(sigma),
            }
        } else {
            bail!("a profile document needs either psi or jumps");
        };
        Ok((p, r, sw, parts))
    }

    /// Builds and validates the symmetric profile.
    pub fn to_profile(&self) -> Result<GaloisProfile> {
        let (p, r, sw, parts) = self.profile_parts()?;
        Ok(GaloisProfile::new(p, r, sw, parts.build()?)?)
    }

    /// The scenario search inputs `(a, b)`.
    pub fn to_scenario(&self) -> Result<(u64, Rat)> {
        let a = self.a.ok_or_else(|| anyhow!("missing field: a"))?;
        let b = self.b.as_ref().ok_or_else(|| anyhow!("missing field: b"))?;
        Ok((a, parse_rat(b)?))
    }

    /// The prime and function of a bare piecewise-linear document.
    pub fn psifun_parts(&self) -> Result<(u32, FunParts)> {
        let p = self.require_p()?;
        let psi = self.psi.as_ref().ok_or_else(|| anyhow!("missing field: psi"))?;
        Ok((p, fun_parts(psi, None)?))
    }
}

fn fun_parts(doc: &PsiDoc, default_end: Option<Rat>) -> Result<FunParts> {
    let value_at_zero = match &doc.value_at_zero {
        Some(s) => parse_rat(s)?,
        None => rat(0),
    };
    let initial_slope = parse_rat(&doc.initial_slope)?;
    let breaks = doc
        .breaks
        .iter()
        .map(|(x, s)| Ok((parse_rat(x)?, parse_rat(s)?)))
        .collect::<Result<Vec<_>>>()?;
    let domain_end = match &doc.domain_end {
        Some(s) => Some(parse_rat(s)?),
        None => default_end,
    };
    Ok(FunParts {
        value_at_zero,
        initial_slope,
        breaks,
        domain_end,
    })
}

#[derive(Serialize)]
struct TowerDocOut {
    kind: &'static str,
    p: u32,
    layers: Vec<LayerDoc>,
    insep_s: u32,
}

/// Serializes a tower as an input-compatible JSON document.
pub fn tower_doc(t: &RamTower) -> Result<String> {
    let doc = TowerDocOut {
        kind: "tower",
        p: t.p(),
        layers: t
            .layers()
            .iter()
            .map(|l| LayerDoc {
                jump: l.jump.to_string(),
                s: l.s,
            })
            .collect(),
        insep_s: t.insep_s(),
    };
    Ok(serde_json::to_string(&doc)?)
}

/// Converts a function into its document form.
pub fn psi_doc(f: &PLFun) -> PsiDoc {
    PsiDoc {
        value_at_zero: Some(f.value_at_zero().to_string()),
        initial_slope: f.initial_slope().to_string(),
        breaks: f
            .breaks()
            .iter()
            .map(|(x, s)| (x.to_string(), s.to_string()))
            .collect(),
        domain_end: f.domain_end().map(|d| d.to_string()),
    }
}

#[derive(Serialize)]
struct ProfileDocOut {
    kind: &'static str,
    p: u32,
    r: u32,
    sw: u64,
    psi: PsiDoc,
}

fn profile_out(g: &GaloisProfile) -> ProfileDocOut {
    ProfileDocOut {
        kind: "profile",
        p: g.p(),
        r: g.r(),
        sw: g.sw(),
        psi: psi_doc(g.psi()),
    }
}

/// Serializes a profile as an input-compatible JSON document.
pub fn profile_doc(g: &GaloisProfile) -> Result<String> {
    Ok(serde_json::to_string(&profile_out(g))?)
}

#[derive(Serialize)]
#[serde(untagged)]
enum InnerDocOut {
    Profile(ProfileDocOut),
    Character { kind: &'static str, sw: u64 },
}

#[derive(Serialize)]
struct DescentDocOut {
    layer_jump: String,
    layer_height: u64,
    inner: InnerDocOut,
}

/// Serializes a peeled layer. The inner profile is emitted in input form, so
/// it can be fed back to `galois ascend --in`; a bare character is emitted
/// with `kind: "character"` and is passed back via `--character-sw` instead.
pub fn descent_doc(d: &galois::Descent) -> Result<String> {
    let inner = match &d.inner {
        galois::Inner::Profile(g) => InnerDocOut::Profile(profile_out(g)),
        galois::Inner::Character { sw } => InnerDocOut::Character {
            kind: "character",
            sw: *sw,
        },
    };
    let doc = DescentDocOut {
        layer_jump: d.layer_jump.to_string(),
        layer_height: d.layer_height,
        inner,
    };
    Ok(serde_json::to_string(&doc)?)
}
