//! The `zomega` command line. `run` is the whole program; `main` only forwards
//! argv and the exit code.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::expsums::bias::bias_rows;
use crate::expsums::gauss::{gauss_direct_capped, gauss_fast};
use crate::expsums::kloosterman::{weil_bound, Cusp, KloostermanKernel, DEFAULT_KLOOSTERMAN_CAP};
use crate::expsums::ramanujan::{ramanujan_closed, ramanujan_direct};
use crate::largesieve::run_cell;
use crate::ring::{elements_with_norm_in, gcd, DualElement, Zw};
use crate::sieve::{
    type1_pointwise, type2_bilinear, vaughan_decomposition_check, vaughan_terms, CoefficientSource, DyadicPartition,
    ProgressionConstraint, SmoothWeight,
};
use crate::symbol::cubic_symbol;
use crate::verify::{verify_all, VerifyConfig, DEFAULT_CAP_NORM};

const EXIT_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "zomega", version, about = "Cubic symbols and exponential sums over Z[ω]")]
struct Cli {
    /// key=value file; flags given on the command line win
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Worker threads for the parallel reductions (default: all cores)
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run every invariant suite and report per-suite results as JSON
    VerifyAll(VerifyArgs),
    /// Cubic residue symbol (a/b)₃
    Symbol {
        #[arg(long, allow_hyphen_values = true)]
        a: Zw,
        #[arg(long, allow_hyphen_values = true)]
        b: Zw,
    },
    /// Gauss sum g(μ, c)
    Gauss {
        /// Shift, "x" or "x/l^k" for x/λ^k
        #[arg(long, allow_hyphen_values = true)]
        mu: DualElement,
        #[arg(long, allow_hyphen_values = true)]
        c: Zw,
        /// Sum directly instead of through the factorization
        #[arg(long)]
        direct: bool,
    },
    /// Kloosterman sum K(m, n, c) with its Weil bound
    Kloosterman {
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        m: DualElement,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        n: DualElement,
        #[arg(long, allow_hyphen_values = true)]
        c: Zw,
    },
    /// Normalised Ramanujan sum, closed form and direct
    Ramanujan {
        #[arg(long, allow_hyphen_values = true)]
        r: Zw,
        #[arg(long, allow_hyphen_values = true)]
        k: Zw,
    },
    /// Vaughan's identity for all primary ν up to a norm, or the smoothed
    /// decomposition at one (X, R, S)
    VaughanCheck(VaughanArgs),
    /// Type-I sum at one a and a flat Type-II sum on dyadic ranges
    TypeSums(TypeArgs),
    /// Large sieve grid as CSV: M,N,seed,lhs,ratio
    LargeSieve(LargeSieveArgs),
    /// Partial sums of g̃(ϖ) over primes as CSV: X,count,sumRe,sumIm,ratio
    Bias(BiasArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = DEFAULT_CAP_NORM)]
    cap_norm: i64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Test hook: corrupt one suite ("cuberel" negates g(ϖ))
    #[arg(long, hide = true)]
    inject_fault: Option<String>,
}

#[derive(Args, Debug)]
struct VaughanArgs {
    #[arg(long, default_value_t = 1000)]
    max_norm: i64,
    /// R values of the identity grid
    #[arg(long, value_delimiter = ',', default_value = "1,10,100")]
    r_grid: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "1,10,100")]
    s_grid: Vec<f64>,
    /// Check the smoothed decomposition at this X instead
    #[arg(long)]
    x: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long)]
    s: Option<f64>,
    #[arg(long, default_value = "const:1")]
    src: CoefficientSource,
    #[command(flatten)]
    progression: ProgressionArgs,
}

#[derive(Args, Debug)]
struct ProgressionArgs {
    /// Progression modulus v
    #[arg(long, allow_hyphen_values = true, default_value = "3")]
    v: Zw,
    /// Progression class u, ≡ 1 (mod 3)
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    u: Zw,
}

impl ProgressionArgs {
    fn constraint(&self) -> Result<ProgressionConstraint> {
        ProgressionConstraint::new(self.v, self.u)
    }
}

#[derive(Args, Debug)]
struct TypeArgs {
    #[arg(long)]
    x: f64,
    /// Modulus of the Type-I sum
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    a: Zw,
    /// Type-II ranges N(a) ∼ A, N(b) ∼ B with unit coefficients
    #[arg(long)]
    a_scale: Option<f64>,
    #[arg(long)]
    b_scale: Option<f64>,
    #[arg(long, default_value = "gauss")]
    src: CoefficientSource,
    #[command(flatten)]
    progression: ProgressionArgs,
}

#[derive(Args, Debug)]
struct LargeSieveArgs {
    #[arg(long, value_delimiter = ',', default_value = "8,16,32")]
    m_list: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "8,16,32")]
    n_list: Vec<f64>,
    #[arg(long, default_value_t = 5)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BiasArgs {
    /// X values; an empty list gives a header-only CSV
    #[arg(long, default_value = "1000,10000,100000")]
    schedule: Schedule,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Comma-separated X values where "" is the empty schedule.
#[derive(Clone, Debug)]
struct Schedule(Vec<f64>);

impl std::str::FromStr for Schedule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<f64>().map_err(|e| format!("{:?}: {}", t, e)))
            .collect::<std::result::Result<_, _>>()
            .map(Schedule)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Variant {
    Ss,
    Sx,
}

/// Reads `key=value` lines; blank lines and `#` comments are skipped.
fn read_config(path: &PathBuf) -> Result<BTreeMap<String, String>> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {}", path.display(), e)))?;
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("{}:{}: expected key=value", path.display(), i + 1)))?;
        out.insert(k.trim().replace('_', "-"), v.trim().to_string());
    }
    Ok(out)
}

/// Appends `--key=value` for every config key not already given as a flag.
fn merge_config(args: &[String], cfg: &BTreeMap<String, String>) -> Vec<String> {
    let given = |k: &str| {
        let flag = format!("--{}", k);
        args.iter().any(|a| *a == flag || a.starts_with(&format!("{}=", flag)))
    };
    let mut out = args.to_vec();
    for (k, v) in cfg {
        if k == "config" || given(k) {
            continue;
        }
        match v.as_str() {
            "true" => out.push(format!("--{}", k)),
            "false" => {}
            _ => out.push(format!("--{}={}", k, v)),
        }
    }
    out
}

fn config_path(args: &[String]) -> Option<PathBuf> {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(PathBuf::from(p));
        }
    }
    None
}

/// Decimal with at most 12 fractional digits, trailing zeros and "-0" removed.
pub fn fmt_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{:.12}", x);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

/// "a+bi" / "a-bi"
pub fn fmt_complex(z: Complex64) -> String {
    let (re, im) = (fmt_real(z.re), fmt_real(z.im));
    match im.strip_prefix('-') {
        Some(m) => format!("{}-{}i", re, m),
        None => format!("{}+{}i", re, im),
    }
}

fn cplx(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn emit(out: &mut dyn Write, json_mode: bool, v: Value, text: &[String]) -> std::io::Result<()> {
    if json_mode {
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))
    } else {
        for line in text {
            writeln!(out, "{}", line)?;
        }
        Ok(())
    }
}

fn write_csv<R: AsRef<[String]>>(path: &Option<PathBuf>, out: &mut dyn Write, header: &[&str], rows: &[R]) -> Result<()> {
    let io = |e: std::io::Error| Error::Resource(e.to_string());
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).map_err(|e| Error::Resource(e.to_string()))?;
    for r in rows {
        w.write_record(r.as_ref()).map_err(|e| Error::Resource(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Resource(e.to_string()))?;
    match path {
        Some(p) => fs::write(p, &bytes).map_err(io),
        None => out.write_all(&bytes).map_err(io),
    }
}

enum Outcome {
    Ok,
    Failed(String),
}

/// Runs the program on `args` (without the binary name) and returns the exit
/// code. Usage errors print to `err` and return 2.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let merged = match config_path(&args).map(|p| read_config(&p)) {
        Some(Ok(cfg)) => merge_config(&args, &cfg),
        Some(Err(e)) => {
            let _ = writeln!(err, "error: {}", e);
            return EXIT_USAGE;
        }
        None => args,
    };
    let cli = match Cli::try_parse_from(std::iter::once("zomega".to_string()).chain(merged)) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e);
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    if let Some(n) = cli.workers {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match dispatch(&cli, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed(msg)) => {
            let _ = writeln!(err, "{}", msg);
            EXIT_FAIL
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let io = |e: std::io::Error| Error::Resource(e.to_string());
    let j = cli.json;
    match &cli.cmd {
        Cmd::VerifyAll(a) => {
            if a.cap_norm < 10 {
                return Err(Error::Domain(format!("--cap-norm must be at least 10, got {}", a.cap_norm)));
            }
            let cfg = VerifyConfig { cap_norm: a.cap_norm, seed: a.seed, fault: a.inject_fault.clone() };
            let rep = verify_all(&cfg);
            let text = serde_json::to_string_pretty(&rep).expect("json") + "\n";
            match &a.output {
                Some(p) => fs::write(p, &text).map_err(io)?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            if rep.passed {
                Ok(Outcome::Ok)
            } else {
                Ok(Outcome::Failed(format!("failing suites: {}", rep.failing().join(", "))))
            }
        }
        Cmd::Symbol { a, b } => {
            let v = cubic_symbol(a, b)?;
            emit(out, j, json!({ "a": a.to_string(), "b": b.to_string(), "symbol": v.name() }), &[v.to_string()])
                .map_err(io)?;
            Ok(Outcome::Ok)
        }
        Cmd::Gauss { mu, c, direct } => {
            let g = if *direct { gauss_direct_capped(*mu, *c, DEFAULT_KLOOSTERMAN_CAP)? } else { gauss_fast(*mu, *c)? };
            let (v, tol) = (g.value(), g.value.tolerance());
            emit(
                out,
                j,
                json!({ "mu": mu.to_string(), "c": c.to_string(), "value": cplx(v), "error_budget": tol }),
                &[fmt_complex(v), format!("error budget: {:.3e}", tol)],
            )
            .map_err(io)?;
            Ok(Outcome::Ok)
        }
        Cmd::Kloosterman { variant, m, n, c } => {
            let cusp = match variant {
                Variant::Ss => Cusp::SigmaSigma,
                Variant::Sx => Cusp::SigmaXi,
            };
            let k = KloostermanKernel::new(cusp, *c, DEFAULT_KLOOSTERMAN_CAP)?.eval(*m, *n)?;
            let bound = weil_bound(*m, *n, *c)?;
            let v = k.value();
            let ratio = v.norm() / bound;
            emit(
                out,
                j,
                json!({
                    "variant": format!("{:?}", variant).to_lowercase(),
                    "m": m.to_string(), "n": n.to_string(), "c": c.to_string(),
                    "value": cplx(v), "error_budget": k.tolerance(),
                    "weil_bound": bound, "ratio": ratio,
                }),
                &[
                    fmt_complex(v),
                    format!("error budget: {:.3e}", k.tolerance()),
                    format!("weil bound: {} (|K|/bound = {})", fmt_real(bound), fmt_real(ratio)),
                ],
            )
            .map_err(io)?;
            Ok(Outcome::Ok)
        }
        Cmd::Ramanujan { r, k } => {
            let exact = ramanujan_closed(*r, *k)?;
            let direct = ramanujan_direct(*r, *k)?;
            let approx = *exact.numer() as f64 / *exact.denom() as f64;
            let diff = (direct - Complex64::new(approx, 0.0)).norm();
            emit(
                out,
                j,
                json!({
                    "r": r.to_string(), "k": k.to_string(),
                    "exact": exact.to_string(), "direct": cplx(direct), "difference": diff,
                }),
                &[exact.to_string(), format!("direct: {}", fmt_complex(direct)), format!("difference: {:.3e}", diff)],
            )
            .map_err(io)?;
            Ok(Outcome::Ok)
        }
        Cmd::VaughanCheck(a) => vaughan_check(a, j, out),
        Cmd::TypeSums(a) => {
            let constraint = a.progression.constraint()?;
            let w = SmoothWeight::default();
            let t1 = type1_pointwise(a.a, a.x, &constraint, &a.src, &w)?;
            let mut v = json!({ "x": a.x, "a": a.a.to_string(), "src": a.src.to_string(), "type1": cplx(t1) });
            let mut text = vec![format!("type I at a = {}: {}", a.a, fmt_complex(t1))];
            if let (Some(sa), Some(sb)) = (a.a_scale, a.b_scale) {
                let shell = |s: f64| -> Vec<(Zw, Complex64)> {
                    elements_with_norm_in(s.floor() as i64, (2.0 * s).floor() as i64)
                        .into_iter()
                        .filter(|x| x.is_primary())
                        .map(|x| (x, Complex64::new(1.0, 0.0)))
                        .collect()
                };
                // Type-II moduli must be coprime to v
                let modulus = constraint.modulus();
                let alpha: Vec<_> =
                    shell(sa).into_iter().filter(|(x, _)| gcd(x, &modulus).map(|g| g.is_one()).unwrap_or(false)).collect();
                let t2 = type2_bilinear(&alpha, &shell(sb), a.x, &constraint, &a.src, &w)?;
                v["type2"] = cplx(t2);
                text.push(format!("type II at A = {}, B = {}: {}", sa, sb, fmt_complex(t2)));
            }
            emit(out, j, v, &text).map_err(io)?;
            Ok(Outcome::Ok)
        }
        Cmd::LargeSieve(a) => {
            let mut rows = Vec::new();
            for &m in &a.m_list {
                for &n in &a.n_list {
                    let cell = run_cell(m, n, a.seed..a.seed + a.seeds)?;
                    for r in cell.rows {
                        let opt = |x: Option<f64>| x.map(|v| format!("{:e}", v)).unwrap_or_default();
                        rows.push(vec![
                            fmt_real(r.m),
                            fmt_real(r.n),
                            r.seed.to_string(),
                            opt(r.lhs),
                            opt(r.ratio),
                        ]);
                    }
                }
            }
            write_csv(&a.output, out, &["M", "N", "seed", "lhs", "ratio"], &rows)?;
            Ok(Outcome::Ok)
        }
        Cmd::Bias(a) => {
            let rows: Vec<Vec<String>> = bias_rows(&a.schedule.0)?
                .into_iter()
                .map(|r| {
                    vec![fmt_real(r.x), r.count.to_string(), format!("{:e}", r.sum.re), format!("{:e}", r.sum.im), format!("{:e}", r.ratio)]
                })
                .collect();
            write_csv(&a.output, out, &["X", "count", "sumRe", "sumIm", "ratio"], &rows)?;
            Ok(Outcome::Ok)
        }
    }
}

fn vaughan_check(a: &VaughanArgs, j: bool, out: &mut dyn Write) -> Result<Outcome> {
    let io = |e: std::io::Error| Error::Resource(e.to_string());
    if let Some(x) = a.x {
        let (Some(r), Some(s)) = (a.r, a.s) else {
            return Err(Error::Domain("--x needs both --r and --s".into()));
        };
        let rep = vaughan_decomposition_check(
            x,
            r,
            s,
            &a.progression.constraint()?,
            &a.src,
            &SmoothWeight::default(),
            &DyadicPartition,
        )?;
        let ok = rep.residual <= 1e-6 * rep.lhs.norm().max(1.0);
        emit(
            out,
            j,
            json!({
                "mode": "decomposition", "x": x, "r": r, "s": s, "src": a.src.to_string(),
                "lhs": cplx(rep.lhs), "p1": cplx(rep.p1), "p2": cplx(rep.p2_total),
                "cells": rep.p2_cells.len(), "residual": rep.residual, "passed": ok,
            }),
            &[
                format!("lhs: {}", fmt_complex(rep.lhs)),
                format!("P1: {}", fmt_complex(rep.p1)),
                format!("P2: {} over {} cells", fmt_complex(rep.p2_total), rep.p2_cells.len()),
                format!("residual: {:.3e}", rep.residual),
            ],
        )
        .map_err(io)?;
        return Ok(if ok { Outcome::Ok } else { Outcome::Failed(format!("decomposition residual {:e}", rep.residual)) });
    }
    let nus: Vec<Zw> = elements_with_norm_in(0, a.max_norm).into_iter().filter(|x| x.is_primary()).collect();
    let (mut total, mut exact) = (0u64, 0u64);
    let mut first_bad = None;
    for &nu in &nus {
        let lam = crate::arith::von_mangoldt(&nu)?;
        for &r in &a.r_grid {
            for &s in &a.s_grid {
                let want = if nu.norm() as f64 > s { lam } else { 0.0 };
                let got = vaughan_terms(nu, r, s)?.combined();
                total += 1;
                if (got - want).abs() <= 1e-9 * want.abs().max(1.0) {
                    exact += 1;
                } else if first_bad.is_none() {
                    first_bad = Some(format!("ν = {}, R = {}, S = {}: {} vs {}", nu, r, s, got, want));
                }
            }
        }
    }
    let pct = if total == 0 { 100.0 } else { 100.0 * exact as f64 / total as f64 };
    emit(
        out,
        j,
        json!({ "mode": "identity", "max_norm": a.max_norm, "checks": total, "exact": exact, "percent": pct }),
        &[format!("exact matches: {}% ({} of {})", fmt_real((pct * 100.0).round() / 100.0), exact, total)],
    )
    .map_err(io)?;
    Ok(match first_bad {
        None => Outcome::Ok,
        Some(m) => Outcome::Failed(m),
    })
}
