//! Command layer: `check`, `cohomology`, `exists`, `construct`, `verify`.
//!
//! Every command produces a JSON report. Exit codes: 0 when a verdict was
//! computed (including negative ones), 1 for invalid input, 2 when an
//! internal cross-check fails.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::derham::TwoPlecticForm;
use crate::error::{Error, Result};
use crate::existence::{decide, ExistenceReport, OmegaOrigin, OmegaThreeP, Verdict};
use crate::io::{self, MomentMapFile, ProblemFile};
use crate::kernel::{format_vec, parse_rational, Rational};
use crate::lie::{class_is_zero, cohomology_dim, Cochain, LieAlgebra, Representation, ThreeCocycle};
use crate::lie2::MinimalLie2Algebra;
use crate::momentmap::{
    build_phi_eta, inner_equivalence, omega_3p, restrict_to_star, verify_moment_map, verify_via_dtot, HamiltonianAction,
    MomentMapCandidate,
};

#[derive(Debug, Parser)]
#[command(name = "lie2mm", version, about = "Homotopy moment maps for minimal Lie 2-algebras, in exact arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the Lie algebra, representation, cocycle and geometry.
    Check(CommonArgs),
    /// Cohomology dimensions and classes of the problem's cocycles.
    Cohomology(CommonArgs),
    /// Decide whether a moment map exists.
    Exists(CommonArgs),
    /// Build and verify a moment map on the problem's geometry.
    Construct(CommonArgs),
    /// Verify a moment map against the problem.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Problem file (JSON, or TOML with a `.toml` extension).
    #[arg(long)]
    pub input: PathBuf,
    /// Also write the report here.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Polynomial degree bound for the inner-equivalence search.
    #[arg(long)]
    pub degree_bound: Option<u32>,
    /// Extra points for the nondegeneracy check, e.g. `1,0,0;0,1/2,3`.
    #[arg(long)]
    pub witness_points: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Moment-map file, or a report written by `construct`.
    #[arg(long)]
    pub moment_map: PathBuf,
}

impl Command {
    pub fn common(&self) -> &CommonArgs {
        match self {
            Command::Check(a) | Command::Cohomology(a) | Command::Exists(a) | Command::Construct(a) => a,
            Command::Verify(v) => &v.common,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Check(_) => "check",
            Command::Cohomology(_) => "cohomology",
            Command::Exists(_) => "exists",
            Command::Construct(_) => "construct",
            Command::Verify(_) => "verify",
        }
    }
}

/// A finished command: the report and the exit code it calls for.
#[derive(Debug)]
pub struct Outcome {
    pub report: Value,
    pub summary: String,
    pub exit_code: i32,
}

#[derive(Serialize)]
struct Toolchain {
    package: &'static str,
    version: &'static str,
}

const TOOLCHAIN: Toolchain = Toolchain { package: env!("CARGO_PKG_NAME"), version: env!("CARGO_PKG_VERSION") };

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Internal(_) => 2,
        _ => 1,
    }
}

/// Run one command. Errors are folded into a report with the matching
/// exit code.
pub fn run(cmd: &Command) -> Outcome {
    let start = Instant::now();
    let common = cmd.common();
    let result = match cmd {
        Command::Check(a) => cmd_check(a),
        Command::Cohomology(a) => cmd_cohomology(a),
        Command::Exists(a) => cmd_exists(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(v) => cmd_verify(v),
    };
    let (body, summary, code) = match result {
        Ok(o) => (o.report, o.summary, o.exit_code),
        Err(e) => (json!({ "error": { "kind": error_kind(&e), "message": e.to_string() } }), format!("error: {e}"), exit_code(&e)),
    };
    let mut report = json!({
        "command": cmd.name(),
        "input": common.input.display().to_string(),
        "toolchain": TOOLCHAIN,
        "elapsed_ms": start.elapsed().as_millis() as u64,
        "exit_code": code,
    });
    if let (Value::Object(r), Value::Object(b)) = (&mut report, body) {
        r.extend(b);
    }
    Outcome { report, summary, exit_code: code }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } | Error::ShapeMismatch { .. } | Error::Io(_) => "invalid-input",
        Error::OutOfGeometricScope(_) => "out-of-geometric-scope",
        Error::Internal(_) => "internal",
        _ => "invalid-input",
    }
}

/// Parsed and validated problem.
pub struct Problem {
    pub file: ProblemFile,
    pub lie2: MinimalLie2Algebra,
    pub omega3_direct: Option<Cochain>,
    pub action: Option<HamiltonianAction>,
}

fn parse_witnesses(s: &str, n: usize) -> Result<Vec<Vec<Rational>>> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let v = p.split(',').map(parse_rational).collect::<Result<Vec<_>>>().map_err(|e| Error::parse("--witness-points", e.to_string()))?;
            if v.len() != n {
                return Err(Error::parse("--witness-points", format!("point {p:?} has {} coordinates, expected {n}", v.len())));
            }
            Ok(v)
        })
        .collect()
}

fn build_lie2(file: &ProblemFile, g: LieAlgebra) -> Result<MinimalLie2Algebra> {
    let n = g.dim();
    let (h_dim, mats) = match &file.representation {
        Some(r) => (r.dim, r.matrices(n)?),
        None => {
            if file.cocycle_c.is_some() {
                return Err(Error::parse("cocycle_c", "cocycle_c requires a representation (c takes values in h)"));
            }
            (0, Representation::trivial(&g, 0).matrices().to_vec())
        }
    };
    let c = match &file.cocycle_c {
        Some(entries) => io::vector_cochain(entries, n, h_dim, "cocycle_c")?,
        None => Cochain::zero(n, h_dim, 3),
    };
    MinimalLie2Algebra::build(g, h_dim, mats, c)
}

fn build_action(file: &ProblemFile, g: &LieAlgebra, witness_arg: Option<&str>) -> Result<Option<HamiltonianAction>> {
    let Some(geo) = &file.geometry else { return Ok(None) };
    let n = geo.n;
    let p = io::point_from_spec(&geo.point_p, n, "geometry.point_p")?;
    let mut witnesses = geo
        .witness_points
        .iter()
        .enumerate()
        .map(|(i, w)| io::point_from_spec(w, n, &format!("geometry.witness_points[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    if let Some(s) = witness_arg {
        witnesses.extend(parse_witnesses(s, n)?);
    }
    let form = io::form_from_spec(&geo.omega, n, "geometry.omega")?;
    let fields = io::fields_from_spec(geo, g.dim())?;
    let omega = TwoPlecticForm::new(n, form, p, witnesses)?;
    let action = HamiltonianAction::build(g.clone(), fields, omega)?;
    let action = match &geo.coordinates {
        Some(names) => action.with_coordinates(names.clone()).map_err(|e| Error::parse("geometry.coordinates", e.to_string()))?,
        None => action,
    };
    Ok(Some(action))
}

pub fn load_problem(args: &CommonArgs) -> Result<Problem> {
    let file: ProblemFile = io::load(&args.input)?;
    let spec = &file.lie_algebra;
    let g = LieAlgebra::new(spec.names(), spec.dense()?)?;
    let lie2 = build_lie2(&file, g.clone())?;
    let omega3_direct = file.omega3_direct.as_ref().map(|e| io::scalar_cochain(e, g.dim(), "omega3_direct")).transpose()?;
    let action = build_action(&file, &g, args.witness_points.as_deref())?;
    Ok(Problem { file, lie2, omega3_direct, action })
}

#[derive(Serialize)]
struct CheckItem {
    name: &'static str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

fn cmd_check(args: &CommonArgs) -> Result<Outcome> {
    let file: ProblemFile = io::load(&args.input)?;
    let spec = &file.lie_algebra;
    let mut items = Vec::new();
    let mut record = |name: &'static str, r: Option<Result<()>>| {
        let (status, detail) = match r {
            None => ("skipped", None),
            Some(Ok(())) => ("pass", None),
            Some(Err(e)) => ("fail", Some(e.to_string())),
        };
        items.push(CheckItem { name, status, detail });
        status == "pass"
    };

    // structural problems are input errors before any check runs
    let sc = spec.dense()?;
    if file.cocycle_c.is_some() && file.representation.is_none() {
        return Err(Error::parse("cocycle_c", "cocycle_c requires a representation (c takes values in h)"));
    }
    let (g, res) = split(LieAlgebra::new(spec.names(), sc));
    record("lie_algebra", res);

    let rep = match (&g, &file.representation) {
        (Some(g), Some(r)) => {
            let (rep, res) = split(r.matrices(g.dim()).and_then(|m| Representation::new(g, r.dim, m)));
            record("representation", res);
            rep
        }
        _ => {
            record("representation", None);
            None
        }
    };
    match (&g, &rep, &file.cocycle_c) {
        (Some(g), Some(rep), Some(c)) => {
            let r = io::vector_cochain(c, g.dim(), rep.dim(), "cocycle_c").and_then(|c| ThreeCocycle::new(g, rep, c)).map(|_| ());
            record("cocycle_c", Some(r));
        }
        _ => {
            record("cocycle_c", None);
        }
    }
    match (&g, &file.omega3_direct) {
        (Some(g), Some(w)) => {
            let r = io::scalar_cochain(w, g.dim(), "omega3_direct").and_then(|c| OmegaThreeP::new(g, c, OmegaOrigin::Direct)).map(|_| ());
            record("omega3_direct", Some(r));
        }
        _ => {
            record("omega3_direct", None);
        }
    }
    match (&g, &file.geometry) {
        (Some(g), Some(_)) => {
            let r = build_action(&file, g, args.witness_points.as_deref()).map(|_| ());
            record("geometry", Some(r));
        }
        _ => {
            record("geometry", None);
        }
    }
    let failed: Vec<&str> = items.iter().filter(|i| i.status == "fail").map(|i| i.name).collect();
    let summary = if failed.is_empty() { "all checks pass".to_string() } else { format!("failed: {}", failed.join(", ")) };
    Ok(Outcome {
        report: json!({ "passed": failed.is_empty(), "checks": items }),
        summary,
        exit_code: if failed.is_empty() { 0 } else { 1 },
    })
}

fn split<T>(r: Result<T>) -> (Option<T>, Option<Result<()>>) {
    match r {
        Ok(v) => (Some(v), Some(Ok(()))),
        Err(e) => (None, Some(Err(e))),
    }
}

fn cmd_cohomology(args: &CommonArgs) -> Result<Outcome> {
    let pb = load_problem(args)?;
    let l = &pb.lie2;
    let g = l.g();
    let triv = Representation::trivial(g, 1);
    let h_trivial: Vec<usize> = (0..=g.dim()).map(|k| cohomology_dim(g, &triv, k)).collect();
    let h_rep: Option<Vec<usize>> = (l.dim_h() > 0).then(|| (0..=g.dim()).map(|k| cohomology_dim(g, l.h(), k)).collect());
    let ce_l: Vec<usize> = (0..=3)
        .map(|d| {
            let dim = l.basis(d).len();
            let out = if dim == 0 { 0 } else { l.diff_matrix(d).rank() };
            let inc = if d == 0 || l.basis(d - 1).is_empty() || dim == 0 { 0 } else { l.diff_matrix(d - 1).rank() };
            dim - out - inc
        })
        .collect();
    let c_class_zero = class_is_zero(g, l.h(), l.c().cochain())?.is_zero();
    let reduced = l.reduce()?;
    let c_red_zero = crate::existence::c_red_class_is_zero(l)?;
    let mut omega = Value::Null;
    if let Some(w) = pb.omega3_direct.as_ref().map(|c| (c.clone(), OmegaOrigin::Direct)).or(match &pb.action {
        Some(a) => Some((omega_3p(a)?.values, OmegaOrigin::EvaluatedAtPoint)),
        None => None,
    }) {
        let w3 = OmegaThreeP::new(g, w.0, w.1)?;
        omega = json!({
            "values": format_vec(&w3.values.flatten()),
            "origin": w3.origin,
            "class_zero_in_g": class_is_zero(g, &triv, &w3.values)?.is_zero(),
        });
    }
    let summary = format!("H^k(g) = {h_trivial:?}; [c_red] {}", if c_red_zero { "= 0" } else { "!= 0" });
    Ok(Outcome {
        report: json!({
            "lie_algebra_cohomology": h_trivial,
            "cohomology_with_coefficients": h_rep,
            "ce_l_cohomology_up_to_3": ce_l,
            "c_class_zero": c_class_zero,
            "h_reduced_dim": reduced.dim_h_red(),
            "c_red_class_zero": c_red_zero,
            "omega_3p": omega,
        }),
        summary,
        exit_code: 0,
    })
}

/// `ω_3p` from exactly one of `omega3_direct` and `geometry`, and whether
/// `H¹(M) = 0` holds.
fn existence_input(pb: &Problem) -> Result<(OmegaThreeP, bool)> {
    let g = pb.lie2.g();
    match (&pb.omega3_direct, &pb.action) {
        (Some(_), Some(_)) => Err(Error::parse("problem", "give exactly one of omega3_direct and geometry")),
        (None, None) => Err(Error::parse("problem", "existence needs omega3_direct or geometry")),
        (Some(w), None) => Ok((OmegaThreeP::new(g, w.clone(), OmegaOrigin::Direct)?, pb.file.assume_h1_zero)),
        (None, Some(a)) => Ok((omega_3p(a)?, true)),
    }
}

fn verdict_line(r: &ExistenceReport, algebraic_only: bool) -> String {
    let base = match r.verdict {
        Verdict::Exists => "exists",
        Verdict::NotExists => "does not exist",
        Verdict::UndecidedGeometric => "undecided (class vanishes algebraically; H^1(M) = 0 not asserted)",
    };
    let scope = if algebraic_only && r.verdict == Verdict::Exists { " (algebraic certificate; geometric synthesis out of polynomial scope)" } else { "" };
    format!("moment map {base}{scope}; criterion {:?}", r.criterion)
}

fn cmd_exists(args: &CommonArgs) -> Result<Outcome> {
    let pb = load_problem(args)?;
    let (w, h1) = existence_input(&pb)?;
    let report = decide(&pb.lie2, &w, h1)?;
    let algebraic_only = pb.action.is_none();
    let summary = verdict_line(&report, algebraic_only);
    Ok(Outcome {
        report: json!({
            "omega_3p": { "values": format_vec(&w.values.flatten()), "origin": w.origin },
            "scope": if algebraic_only { "algebraic" } else { "geometric" },
            "verdict_line": summary,
            "existence": report,
        }),
        summary,
        exit_code: 0,
    })
}

/// `φ^η` checked by both verifiers and by `r(φ^η) = η`.
pub fn construct_verified(action: &HamiltonianAction, l: &MinimalLie2Algebra, report: &ExistenceReport) -> Result<Option<MomentMapCandidate>> {
    let Some(eta) = report.certificate.solution() else { return Ok(None) };
    let mu = build_phi_eta(action, l, eta)?;
    let five = verify_moment_map(action, l, &mu)?;
    let dtot = verify_via_dtot(action, l, &mu)?;
    if !five.passed || !dtot.passed {
        return Err(Error::Internal(format!("constructed moment map fails verification (five equations: {}, d_tot: {})", five.passed, dtot.passed)));
    }
    if restrict_to_star(l, &mu, action.base_point()).as_ce() != eta.as_ce() {
        return Err(Error::Internal("r(phi^eta) != eta".into()));
    }
    Ok(Some(mu))
}

fn readable(mu: &MomentMapCandidate, action: &HamiltonianAction, g: &LieAlgebra) -> Value {
    let names = action.coordinates();
    let b = g.basis_names();
    let mut m = serde_json::Map::new();
    for (i, a) in mu.mu1_g.iter().enumerate() {
        m.insert(format!("mu1({})", b[i]), Value::String(a.render(names)));
    }
    for (a, f) in mu.mu1_h.iter().enumerate() {
        m.insert(format!("mu1(h{})", a + 1), Value::String(f.render(names)));
    }
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            m.insert(format!("mu2({},{})", b[i], b[j]), Value::String(mu.mu2(i, j).render(names)));
        }
    }
    Value::Object(m)
}

fn cmd_construct(args: &CommonArgs) -> Result<Outcome> {
    let pb = load_problem(args)?;
    let Some(action) = &pb.action else {
        // report the algebraic witness alongside the scope error
        let algebraic = match existence_input(&pb) {
            Ok((w, h1)) => serde_json::to_value(decide(&pb.lie2, &w, h1)?).map_err(|e| Error::Internal(e.to_string()))?,
            Err(_) => Value::Null,
        };
        let err = Error::OutOfGeometricScope("no polynomial geometry in the problem; only the algebraic certificate is available".into());
        return Ok(Outcome {
            summary: format!("error: {err}"),
            report: json!({ "error": { "kind": error_kind(&err), "message": err.to_string() }, "algebraic_witness": algebraic }),
            exit_code: exit_code(&err),
        });
    };
    let (w, h1) = existence_input(&pb)?;
    let report = decide(&pb.lie2, &w, h1)?;
    let summary = verdict_line(&report, false);
    let Some(mu) = construct_verified(action, &pb.lie2, &report)? else {
        return Ok(Outcome { report: json!({ "verdict_line": summary, "existence": report, "moment_map": null }), summary, exit_code: 0 });
    };
    let five = verify_moment_map(action, &pb.lie2, &mu)?;
    let dtot = verify_via_dtot(action, &pb.lie2, &mu)?;
    Ok(Outcome {
        report: json!({
            "verdict_line": summary,
            "existence": report,
            "moment_map": MomentMapFile::from_candidate(&mu, action.omega().n()),
            "moment_map_readable": readable(&mu, action, pb.lie2.g()),
            "verification": { "five_equations": five, "d_tot": dtot, "restriction_equals_eta": true },
        }),
        summary: format!("{summary}; moment map constructed and verified"),
        exit_code: 0,
    })
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome> {
    let pb = load_problem(&args.common)?;
    let Some(action) = &pb.action else {
        return Err(Error::OutOfGeometricScope("verification needs the problem's geometry".into()));
    };
    let l = &pb.lie2;
    let mm = io::load_moment_map(&args.moment_map)?;
    let mu = mm.to_candidate(l.dim_g(), l.dim_h(), action.omega().n())?;
    let five = verify_moment_map(action, l, &mu)?;
    let dtot = verify_via_dtot(action, l, &mu)?;
    if five.passed != dtot.passed {
        return Err(Error::Internal(format!("verifiers disagree: five equations {}, d_tot {}", five.passed, dtot.passed)));
    }
    let inner = if five.passed { Some(inner_equivalence_report(action, l, &mu, args.common.degree_bound)?) } else { None };
    let summary = match five.first_failed() {
        None => "moment map verified by both routes".to_string(),
        Some(eq) => format!("not a moment map: first failing equation {eq:?}"),
    };
    Ok(Outcome {
        report: json!({
            "passed": five.passed,
            "routes_agree": true,
            "five_equations": five,
            "d_tot": dtot,
            "inner_equivalence_to_phi_r": inner,
        }),
        summary,
        exit_code: 0,
    })
}

fn inner_equivalence_report(action: &HamiltonianAction, l: &MinimalLie2Algebra, mu: &MomentMapCandidate, bound: Option<u32>) -> Result<Value> {
    let eta = restrict_to_star(l, mu, action.base_point());
    let phi = build_phi_eta(action, l, &eta)?;
    Ok(match inner_equivalence(action, l, mu, &phi, bound) {
        Ok(found) => json!({
            "found": true,
            "degree_bound": found.degree_bound,
            "alpha": found.alpha.iter().map(|p| io::poly_to_spec(p, action.omega().n())).collect::<Vec<_>>(),
        }),
        Err(Error::NotFoundWithinBound { bound }) => json!({ "found": false, "degree_bound": bound }),
        Err(e) => return Err(e),
    })
}

/// Write the report as pretty JSON.
pub fn write_report(path: &Path, report: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(report).map_err(|e| Error::Internal(e.to_string()))?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}
