//! The `wsc` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::category_o::{kac_multiplicity_table, load_multiplicity_table, table_to_json};
use crate::character::DEFAULT_DEPTH;
use crate::error::{Error, Result};
use crate::kl::{fmt_poly, Descent, KlTable};
use crate::levi::{Levi, LeviDatum};
use crate::nilpotent::{NilpotentDatum, PartitionPair};
use crate::pipeline::{self, CharacterReport, Job, ModuleKind};
use crate::structure::{battery, build_battery_datum, verify_datum, DatumReport};
use crate::superalgebra::{Algebra, TorusWeight, Weight};
use crate::weyl::{Perm, WeylGroup};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "wsc", version, about = "Characters of simple modules over finite W-superalgebras of type I")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grading, centralizer and symplectic data of a nilpotent orbit.
    Orbit(OrbitArgs),
    /// Character of a simple W̃- or W-module.
    Char(CharArgs),
    /// Parabolic Verma multiplicities of a typical simple module.
    KacChar(KacArgs),
    /// Graded-dimension checks over all orbits of small gl(m|n).
    Verify(VerifyArgs),
    /// Kazhdan–Lusztig polynomials of a symmetric group.
    Kl(KlArgs),
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[arg(long)]
    pub algebra: String,
    /// Jordan types "p1,p2,...|q1,...".
    #[arg(long)]
    pub nilpotent: String,
    /// Block composition "a1+a2|b1".
    #[arg(long)]
    pub levi: Option<String>,
    /// θ on the block identities, e.g. "1/3,-2/3,0".
    #[arg(long)]
    pub theta: Option<String>,
    #[arg(long)]
    pub swap_lagrangian: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Wtilde,
    W,
    W0Reference,
}

impl From<KindArg> for ModuleKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Wtilde => ModuleKind::WTilde,
            KindArg::W => ModuleKind::W,
            KindArg::W0Reference => ModuleKind::W0Reference,
        }
    }
}

#[derive(Debug, Args)]
pub struct CharArgs {
    #[arg(long, required_unless_present = "batch")]
    pub algebra: Option<String>,
    #[arg(long, required_unless_present = "batch")]
    pub nilpotent: Option<String>,
    #[arg(long)]
    pub levi: Option<String>,
    #[arg(long)]
    pub theta: Option<String>,
    /// Highest weight "a1,...,am|b1,...,bn".
    #[arg(long)]
    pub lambda: Option<String>,
    /// Multiplicity table (JSON) for weights without a computed table.
    #[arg(long)]
    pub table: Option<PathBuf>,
    #[arg(long, env = "WSC_DEPTH", default_value_t = DEFAULT_DEPTH)]
    pub depth: u32,
    #[arg(long, value_enum, default_value = "w")]
    pub kind: KindArg,
    /// |I_λ|; defaults to 1 for gl(m|n).
    #[arg(long)]
    pub orbit_size: Option<u64>,
    #[arg(long)]
    pub swap_lagrangian: bool,
    /// JSON array of jobs, run concurrently; results keep input order.
    #[arg(long, conflicts_with_all = ["algebra", "nilpotent", "lambda", "table"])]
    pub batch: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct KacArgs {
    #[arg(long)]
    pub algebra: String,
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub levi: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest m + n in the battery.
    #[arg(long, default_value_t = 4)]
    pub max_size: usize,
    #[arg(long, default_value_t = 16)]
    pub truncation: u32,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DescentArg {
    Left,
    Right,
}

#[derive(Debug, Args)]
pub struct KlArgs {
    /// Lower element, one-line notation.
    #[arg(long, requires = "w")]
    pub x: Option<String>,
    /// Upper element, one-line notation.
    #[arg(long)]
    pub w: Option<String>,
    /// Print P_{x,w} for all Bruhat pairs of S_n instead.
    #[arg(long, conflicts_with_all = ["x", "w"])]
    pub table: Option<usize>,
    #[arg(long, value_enum, default_value = "left")]
    pub descent: DescentArg,
}

/// Output text and process exit code.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn envelope(command: &str, result: Value) -> Value {
    json!({"schema": SCHEMA, "command": command, "result": result})
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn error_value(e: &Error) -> Value {
    json!({"name": e.name(), "message": e.to_string(), "exit_code": e.exit_code()})
}

pub fn execute(cli: &Cli) -> Outcome {
    let command = match &cli.command {
        Command::Orbit(_) => "orbit",
        Command::Char(_) => "char",
        Command::KacChar(_) => "kac-char",
        Command::Verify(_) => "verify",
        Command::Kl(_) => "kl",
    };
    let result = match &cli.command {
        Command::Orbit(a) => cmd_orbit(a).map(|r| (to_json(&r), orbit_text(&r), 0)),
        Command::Char(a) => cmd_char(a),
        Command::KacChar(a) => cmd_kac(a).map(|v| {
            let text = kac_text(&v);
            (v, text, 0)
        }),
        Command::Verify(a) => Ok(cmd_verify(a)),
        Command::Kl(a) => cmd_kl(a),
    };
    match result {
        Ok((value, text, code)) => Outcome {
            stdout: if cli.json { pretty(&envelope(command, value)) } else { text },
            stderr: String::new(),
            code,
        },
        Err(e) if cli.json => Outcome {
            stdout: pretty(&json!({"schema": SCHEMA, "command": command, "error": error_value(&e)})),
            stderr: String::new(),
            code: e.exit_code(),
        },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {}: {e}\n", e.name()), code: e.exit_code() },
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
pub struct PieceDim {
    pub degree: i64,
    pub parity: &'static str,
    pub dim: usize,
}

#[derive(Debug, Serialize)]
pub struct OrbitReport {
    pub algebra: String,
    pub nilpotent: String,
    pub h: Vec<String>,
    pub grading: Vec<PieceDim>,
    pub centralizer: Vec<PieceDim>,
    pub dim_centralizer_even: usize,
    pub dim_centralizer_odd: usize,
    pub dim_v_even: usize,
    pub dim_v_odd: usize,
    pub dim_u1: usize,
    pub levi: String,
    pub theta: Vec<String>,
    pub denominator_weights: Vec<Vec<String>>,
    pub clifford_weights: Vec<Vec<String>>,
    pub component_group: String,
    pub dimension_factor: u64,
}

fn parity(odd: bool) -> &'static str {
    if odd {
        "odd"
    } else {
        "even"
    }
}

pub fn cmd_orbit(a: &OrbitArgs) -> Result<OrbitReport> {
    let alg = Algebra::parse(&a.algebra)?;
    let nd = NilpotentDatum::build(&alg, &PartitionPair::parse(&a.nilpotent)?)?;
    let ld = LeviDatum::parse(&alg, a.levi.as_deref(), a.theta.as_deref())?;
    let v = nd.symplectic_space()?;
    let lag = nd.lagrangian_odd()?;
    let grading = nd
        .grading
        .pieces
        .iter()
        .rev()
        .map(|(&(d, odd), v)| PieceDim { degree: d, parity: parity(odd), dim: v.len() })
        .collect();
    let centralizer = nd
        .centralizer(None, None)
        .iter()
        .rev()
        .map(|p| PieceDim { degree: p.degree, parity: parity(p.odd), dim: p.basis.len() })
        .collect();
    let strings = |ws: Vec<TorusWeight>| ws.iter().map(TorusWeight::strings).collect();
    Ok(OrbitReport {
        algebra: alg.datum.name(),
        nilpotent: nd.partitions.to_string(),
        h: (0..alg.size()).map(|i| nd.h().get(i, i).to_string()).collect(),
        grading,
        centralizer,
        dim_centralizer_even: nd.centralizer_dim(Some(false)),
        dim_centralizer_odd: nd.centralizer_dim(Some(true)),
        dim_v_even: v.dim(false),
        dim_v_odd: v.dim(true),
        dim_u1: lag.u.len(),
        levi: ld.levi.to_string(),
        theta: ld.theta_strings(),
        denominator_weights: strings(nd.denominator_weights(&ld)?),
        clifford_weights: strings(nd.clifford_weights(&ld, a.swap_lagrangian)?),
        component_group: "C_e is trivial for gl(m|n); |I_lambda| = 1".into(),
        dimension_factor: nd.module_dimension_factor()?,
    })
}

fn orbit_text(r: &OrbitReport) -> String {
    let mut s = format!("{} nilpotent {}\nh = diag({})\n", r.algebra, r.nilpotent, r.h.join(","));
    s += "grading (degree parity dim):\n";
    for p in &r.grading {
        s += &format!("  {:>3} {:<4} {}\n", p.degree, p.parity, p.dim);
    }
    s += "centralizer g^e (degree parity dim):\n";
    for p in &r.centralizer {
        s += &format!("  {:>3} {:<4} {}\n", p.degree, p.parity, p.dim);
    }
    let ws = |v: &[Vec<String>]| v.iter().map(|w| format!("({})", w.join(","))).collect::<Vec<_>>().join(" ");
    s += &format!(
        "dim g^e = {}|{}\ndim V = {}|{}\ndim u1 = {}\nLevi {} theta ({})\ndenominator weights: {}\nclifford weights: {}\n{}\ndimension factor = {}\n",
        r.dim_centralizer_even,
        r.dim_centralizer_odd,
        r.dim_v_even,
        r.dim_v_odd,
        r.dim_u1,
        r.levi,
        r.theta.join(","),
        ws(&r.denominator_weights),
        ws(&r.clifford_weights),
        r.component_group,
        r.dimension_factor
    );
    s
}

fn load_table(path: &std::path::Path, algebra: &str, levi: Option<&str>) -> Result<crate::category_o::MultiplicityTable> {
    let alg = Algebra::parse(algebra)?;
    let (m, n) = (alg.datum.m, alg.datum.n);
    let l = match levi {
        Some(s) => Levi::parse(s, m, n)?,
        None => Levi::full(m, n),
    };
    load_multiplicity_table(path, m, n, &l)
}

fn job_from_args(a: &CharArgs) -> Result<Job> {
    let algebra = a.algebra.clone().expect("required by clap");
    let table = a.table.as_deref().map(|p| load_table(p, &algebra, a.levi.as_deref())).transpose()?;
    Ok(Job {
        algebra,
        nilpotent: a.nilpotent.clone().expect("required by clap"),
        levi: a.levi.clone(),
        theta: a.theta.clone(),
        lambda: a.lambda.clone(),
        table,
        depth: a.depth,
        kind: a.kind.into(),
        orbit_size: a.orbit_size,
        swap_lagrangian: a.swap_lagrangian,
    })
}

/// One entry of a `--batch` file.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatchJob {
    pub algebra: String,
    pub nilpotent: String,
    pub levi: Option<String>,
    pub theta: Option<String>,
    pub lambda: Option<String>,
    pub table: Option<PathBuf>,
    pub depth: Option<u32>,
    pub kind: Option<String>,
    pub orbit_size: Option<u64>,
    #[serde(default)]
    pub swap_lagrangian: bool,
}

fn run_batch_job(b: &BatchJob, default_depth: u32) -> Result<CharacterReport> {
    let table = b.table.as_deref().map(|p| load_table(p, &b.algebra, b.levi.as_deref())).transpose()?;
    let job = Job {
        algebra: b.algebra.clone(),
        nilpotent: b.nilpotent.clone(),
        levi: b.levi.clone(),
        theta: b.theta.clone(),
        lambda: b.lambda.clone(),
        table,
        depth: b.depth.unwrap_or(default_depth),
        kind: b.kind.as_deref().map(str::parse).transpose()?.unwrap_or_default(),
        orbit_size: b.orbit_size,
        swap_lagrangian: b.swap_lagrangian,
    };
    pipeline::run(&job)
}

fn cmd_char(a: &CharArgs) -> Result<(Value, String, i32)> {
    if let Some(path) = &a.batch {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let jobs: Vec<BatchJob> =
            serde_json::from_str(&text).map_err(|e| Error::ParseError(format!("batch file: {e}")))?;
        let results: Vec<Result<CharacterReport>> = jobs.par_iter().map(|j| run_batch_job(j, a.depth)).collect();
        let code = results.iter().find_map(|r| r.as_ref().err().map(Error::exit_code)).unwrap_or(0);
        let mut out_text = String::new();
        let values: Vec<Value> = results
            .iter()
            .enumerate()
            .map(|(i, r)| match r {
                Ok(rep) => {
                    out_text += &format!("# job {}\n{}", i + 1, char_text(rep));
                    json!({"ok": rep})
                }
                Err(e) => {
                    out_text += &format!("# job {}\nerror: {}: {e}\n", i + 1, e.name());
                    json!({"error": error_value(e)})
                }
            })
            .collect();
        return Ok((Value::Array(values), out_text, code));
    }
    let rep = pipeline::run(&job_from_args(a)?)?;
    Ok((to_json(&rep), char_text(&rep), 0))
}

fn char_text(r: &CharacterReport) -> String {
    let mut s = format!(
        "{} nilpotent {} Levi {} theta ({}) lambda {}\n",
        r.algebra,
        r.nilpotent,
        r.levi,
        r.theta.join(","),
        r.lambda.as_deref().unwrap_or("-")
    );
    s += &format!("torus basis: {}\n", r.torus_basis.join(" "));
    if let Some(f) = &r.truncation_floor {
        s += &format!("truncated below pairing {f} (depth {})\n", r.depth.unwrap_or(0));
    }
    for (c, raw) in r.characters.iter().zip(&r.raw) {
        s += &format!("{}: {raw}\n", c.label);
        if let Some(v) = &c.value_at_one {
            s += &format!("  dimension {v}\n");
        }
    }
    s
}

fn cmd_kac(a: &KacArgs) -> Result<Value> {
    let alg = Algebra::parse(&a.algebra)?;
    let (m, n) = (alg.datum.m, alg.datum.n);
    let levi = match &a.levi {
        Some(s) => Levi::parse(s, m, n)?,
        None => Levi::full(m, n),
    };
    let lambda = Weight::parse(&a.lambda, m, n)?;
    let t = kac_multiplicity_table(&alg.datum, &lambda, &levi)?;
    let mut v = table_to_json(&t);
    v["algebra"] = json!(alg.datum.name());
    v["levi"] = json!(levi.to_string());
    Ok(v)
}

fn kac_text(v: &Value) -> String {
    let mut s = format!(
        "{} Levi {} lambda {}\n",
        v["algebra"].as_str().unwrap_or(""),
        v["levi"].as_str().unwrap_or(""),
        v["lambda"].as_str().unwrap_or("")
    );
    for e in v["entries"].as_array().into_iter().flatten() {
        s += &format!("  {:>4} x Delta({})\n", e["coeff"], e["weight"].as_str().unwrap_or(""));
    }
    s
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    max_size: usize,
    truncation: u32,
    assumptions: Vec<&'static str>,
    count: usize,
    failed: usize,
    pass: bool,
    data: Vec<Value>,
}

fn cmd_verify(a: &VerifyArgs) -> (Value, String, i32) {
    let cases = battery(a.max_size);
    let results: Vec<(String, String, Result<DatumReport>)> = cases
        .par_iter()
        .map(|(alg, p)| {
            let r = build_battery_datum(alg, p).and_then(|nd| verify_datum(&nd, a.truncation));
            (alg.clone(), p.to_string(), r)
        })
        .collect();
    let mut text = String::new();
    let mut failed = 0;
    let data: Vec<Value> = results
        .iter()
        .map(|(alg, p, r)| match r {
            Ok(rep) => {
                if !rep.pass {
                    failed += 1;
                }
                text += &format!("{} {alg} {p}\n", if rep.pass { "PASS" } else { "FAIL" });
                to_json(rep)
            }
            Err(e) => {
                failed += 1;
                text += &format!("FAIL {alg} {p}: {}\n", e.name());
                json!({"algebra": alg, "nilpotent": p, "pass": false, "error": error_value(e)})
            }
        })
        .collect();
    text += &format!("{} of {} orbits pass\n", results.len() - failed, results.len());
    let report = VerifyReport {
        max_size: a.max_size,
        truncation: a.truncation,
        assumptions: vec![
            "Kazhdan degree of x in g(i) is i + 2, odd generators included",
            "Lambda(V_1) stands in for Cl(V_1) at the associated-graded level",
        ],
        count: results.len(),
        failed,
        pass: failed == 0,
        data,
    };
    (to_json(&report), text, if failed == 0 { 0 } else { 1 })
}

fn cmd_kl(a: &KlArgs) -> Result<(Value, String, i32)> {
    let descent = match a.descent {
        DescentArg::Left => Descent::Left,
        DescentArg::Right => Descent::Right,
    };
    let group_of = |n: usize| WeylGroup::of_levi(&Levi::full(n, 0));
    if let Some(n) = a.table {
        let g = group_of(n)?;
        let mut t = KlTable::new(&g, descent);
        let mut rows = Vec::new();
        let mut text = String::new();
        for w in 0..g.order() {
            for x in 0..g.order() {
                if t.le(x, w) {
                    let p = t.p(x, w);
                    text += &format!("P[{}, {}] = {}\n", g.elements[x].one_line(), g.elements[w].one_line(), fmt_poly(&p));
                    rows.push(json!({"x": g.elements[x].one_line(), "w": g.elements[w].one_line(), "coefficients": p}));
                }
            }
        }
        return Ok((json!({"n": n, "pairs": rows}), text, 0));
    }
    let (Some(xs), Some(ws)) = (&a.x, &a.w) else {
        return Err(Error::ParseError("give --x and --w, or --table n".into()));
    };
    let (x, w) = (Perm::parse(xs)?, Perm::parse(ws)?);
    if x.len() != w.len() {
        return Err(Error::SizeMismatch(format!("{xs} and {ws} have different sizes")));
    }
    let g = group_of(x.len())?;
    let p = KlTable::new(&g, descent).polynomial(&x, &w)?;
    let text = format!("P[{}, {}] = {}\n", x.one_line(), w.one_line(), fmt_poly(&p));
    Ok((json!({"x": x.one_line(), "w": w.one_line(), "coefficients": p}), text, 0))
}

/// Parses arguments, runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let out = execute(&cli);
    // a closed pipe on the reader side is not an error of ours
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    out.code
}
