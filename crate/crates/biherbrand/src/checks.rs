use num_traits::Zero;
use plfun::{rat, rat_pow, PLFun, Rat};

/// One named verification step with its outcome and a human-readable detail.
#[derive(Debug, Clone)]
pub struct NamedCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// A batch of named checks; passes only if every member passes.
#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub checks: Vec<NamedCheck>,
}

impl CheckReport {
    pub fn push(&mut self, name: &'static str, pass: bool, detail: String) {
        self.checks.push(NamedCheck { name, pass, detail });
    }

    /// True when every check passed.
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// The names of the failing checks.
    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect()
    }
}

/// Outcome of a symmetry verification: whether the graph of `f` is fixed by
/// reflection across the axis `x + y = sigma`, and if not, a witness point
/// `(x, f(x), mirror(x))` where the two sides differ.
#[derive(Debug, Clone)]
pub struct SymmetryReport {
    pub pass: bool,
    pub witness: Option<(Rat, Rat, Rat)>,
    pub detail: String,
}

impl SymmetryReport {
    fn ok() -> Self {
        SymmetryReport {
            pass: true,
            witness: None,
            detail: "graph is fixed by reflection across the axis".into(),
        }
    }

    fn fail(detail: String, witness: Option<(Rat, Rat, Rat)>) -> Self {
        SymmetryReport {
            pass: false,
            witness,
            detail,
        }
    }
}

/// Verifies that `f`, defined on `[0, sigma]`, has a graph symmetric about
/// the line `x + y = sigma`. The endpoints must satisfy `f(0) = 0` and
/// `f(sigma) = sigma`.
///
/// # Example
///
/// ```
/// use biherbrand::{verify_symmetry, BiSpec};
/// use herbrand::{Layer, RamTower};
/// use plfun::rat;
///
/// let tower = RamTower::new(2, vec![Layer::new(rat(1), 1)], 0).unwrap();
/// let spec = BiSpec::new(tower, 7).unwrap();
/// let bi = spec.bundle().unwrap().bi;
/// assert!(verify_symmetry(&bi, &spec.sigma()).pass);
/// ```
pub fn verify_symmetry(f: &PLFun, sigma: &Rat) -> SymmetryReport {
    if f.domain_end() != Some(sigma) {
        return SymmetryReport::fail(
            format!("domain must be [0, {sigma}]"),
            None,
        );
    }
    let at_zero = f.value_at_zero();
    if !at_zero.is_zero() {
        return SymmetryReport::fail(
            format!("f(0) = {at_zero}, expected 0"),
            Some((Rat::zero(), at_zero.clone(), Rat::zero())),
        );
    }
    let top = f.value_at_end().expect("bounded domain");
    if top != *sigma {
        return SymmetryReport::fail(
            format!("f({sigma}) = {top}, expected {sigma}"),
            Some((sigma.clone(), top, sigma.clone())),
        );
    }
    let mirrored = match f.reflect(sigma) {
        Ok(g) => g,
        Err(e) => return SymmetryReport::fail(format!("reflection failed: {e}"), None),
    };
    if mirrored == *f {
        return SymmetryReport::ok();
    }
    // Hunt a witness among the breaks of both graphs and piece midpoints.
    let mut edges: Vec<Rat> = vec![Rat::zero()];
    edges.extend(f.breaks().iter().map(|(x, _)| x.clone()));
    edges.extend(mirrored.breaks().iter().map(|(x, _)| x.clone()));
    edges.push(sigma.clone());
    edges.sort();
    edges.dedup();
    let mut probes = edges.clone();
    for pair in edges.windows(2) {
        probes.push((&pair[0] + &pair[1]) / rat(2));
    }
    probes.sort();
    for x in probes {
        let lhs = f.eval(&x).expect("probe inside domain");
        let rhs = mirrored.eval(&x).expect("probe inside domain");
        if lhs != rhs {
            return SymmetryReport::fail(
                format!("f({x}) = {lhs} but the mirrored graph gives {rhs}"),
                Some((x, lhs, rhs)),
            );
        }
    }
    SymmetryReport::fail(
        "graphs differ in slope data but agree at all probes".into(),
        None,
    )
}

/// Runs the battery of shape checks a bi-Herbrand function of parameters
/// `(p, r, m)` must satisfy on `[0, sigma]`, `sigma = m / p^r`:
///
/// * endpoints `f(0) = 0`, `f(sigma) = sigma`;
/// * extreme slopes `p^{-r}` and `p^r`;
/// * convexity;
/// * jump-height product `p^{2r}`;
/// * the first and last jumps `a`, `z` are mirror images: `z = sigma - a/p^r`;
/// * the jump count is odd exactly when the axis crossing is itself a jump,
///   and in the odd case the crossing is the middle jump.
pub fn carayol_jump_checks(f: &PLFun, p: u32, r: u32, m: u64) -> CheckReport {
    let mut report = CheckReport::default();
    let sigma: Rat = rat(m as i64) * rat_pow(p, -(r as i32));
    let inv = rat_pow(p, -(r as i32));
    let pr = rat_pow(p, r as i32);

    if f.domain_end() != Some(&sigma) {
        report.push(
            "domain",
            false,
            format!("expected domain [0, {sigma}]"),
        );
        return report;
    }
    report.push("domain", true, format!("domain is [0, {sigma}]"));

    let v0 = f.value_at_zero();
    report.push("origin", v0.is_zero(), format!("f(0) = {v0}"));
    let top = f.value_at_end().expect("bounded domain");
    report.push(
        "endpoint",
        top == sigma,
        format!("f({sigma}) = {top}, expected {sigma}"),
    );

    let first = f.initial_slope();
    report.push(
        "initial-slope",
        *first == inv,
        format!("initial slope {first}, expected {inv}"),
    );
    let last = f.final_slope();
    report.push(
        "final-slope",
        *last == pr,
        format!("final slope {last}, expected {pr}"),
    );
    report.push(
        "convexity",
        f.is_convex(),
        "slopes must be nondecreasing".into(),
    );

    let jumps = f.jump_table(None);
    let product = jumps.height_product();
    let expected = rat_pow(p, 2 * r as i32);
    report.push(
        "height-product",
        product == expected,
        format!("jump heights multiply to {product}, expected {expected}"),
    );

    match (jumps.first(), jumps.last()) {
        (Some(a), Some(z)) => {
            let mirrored = &sigma - &a.x * &inv;
            report.push(
                "jump-relation",
                z.x == mirrored,
                format!(
                    "last jump {} with first jump {}: expected {} = {sigma} - {}/{}",
                    z.x, a.x, mirrored, a.x, pr
                ),
            );
        }
        _ => report.push("jump-relation", false, "no jumps present".into()),
    }

    match f.solve_sum(&sigma) {
        Ok(c) => {
            let crossing_is_jump = jumps.at(&c).is_some();
            let odd = jumps.len() % 2 == 1;
            let parity_ok = odd == crossing_is_jump;
            let middle_ok = if odd {
                jumps.get(jumps.len() / 2).map(|e| e.x == c).unwrap_or(false)
            } else {
                true
            };
            report.push(
                "middle-jump-parity",
                parity_ok && middle_ok,
                format!(
                    "{} jumps with axis crossing {c} ({} a jump)",
                    jumps.len(),
                    if crossing_is_jump { "which is" } else { "not" }
                ),
            );
        }
        Err(e) => report.push("middle-jump-parity", false, format!("no crossing: {e}")),
    }

    report
}
