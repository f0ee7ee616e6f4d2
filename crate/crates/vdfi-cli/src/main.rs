//! vdfi: vertex-degree-function indices on connected graphs with maximum
//! degree at most 4, their sharp (n, m)-bounds, extremal witnesses, and
//! exhaustive verification at small orders.

mod cache;
mod report;

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::Value;
use vdfi_core::degfn::DEFAULT_TOLERANCE;
use vdfi_core::verify::{MRule, VERIFY_TOLERANCE};
use vdfi_core::{
    construct_extremal, gamma_f, gamma_separation, h_f, hf_bound, sweep, ti_pair, ti_sum_bound,
    verify_bound_with, BoundReport, ChemGraph, DegreeFunction, FunctionFamily, SweepConfig,
};

#[derive(Parser)]
#[command(
    name = "vdfi",
    version,
    about = "Vertex-degree-function indices on chemical graphs: values, sharp bounds, \
             extremal witnesses, exhaustive verification"
)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for enumeration cache files, created on first use. The
    /// VDFI_CACHE_DIR environment variable takes precedence.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads for enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Index values of one graph: H_f, Gamma_f, TI and its coindex.
    Index {
        /// A graph6 record, or a path to a file holding one graph6 record
        /// or an edge list (one "u v" pair per line, 0-based).
        #[arg(long)]
        graph: String,
        /// Function spec: power:A, sei:A, sli:A, lnpi1:A, lnpi2:A, fbar:N,
        /// or table:F1,F2,F3,F4.
        #[arg(long)]
        f: String,
    },
    /// Classify a function by the signs and chain of (xi1, xi2).
    Classify {
        #[arg(long)]
        f: String,
    },
    /// Sharp bound on H_f over connected chemical (n,m)-graphs.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        f: String,
        /// Bound TI + TIbar = (n-1) H_f instead of H_f.
        #[arg(long)]
        thm3: bool,
    },
    /// The degree counts forced at (n, m), with a witness graph attaining
    /// the bounds, or the reason no graph does.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Check the bound against every connected chemical (n,m)-graph.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        f: String,
    },
    /// Bounds for a whole family over a grid of orders and sizes.
    Sweep {
        /// Family tag: power, sei, sli, lnpi1, lnpi2 or fbar.
        #[arg(long)]
        family: String,
        /// Comma-separated member parameters. The fbar member is fixed by
        /// the order; give it one placeholder value.
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        /// Inclusive order range LO..HI (LO..=HI and a single order also
        /// accepted).
        #[arg(long)]
        n_range: String,
        /// Sizes per order: all, 2n, n, n+K, n-K, or a fixed integer.
        #[arg(long, default_value = "all")]
        m_rule: String,
    },
    /// Brute-force the Gamma separation over the (n2, n3) lattice.
    Lemma1 {
        #[arg(long, allow_negative_numbers = true)]
        xi1: f64,
        #[arg(long, allow_negative_numbers = true)]
        xi2: f64,
        #[arg(long, default_value_t = 100)]
        max_total: usize,
    },
}

struct Failure {
    message: String,
    code: u8,
}

fn precondition(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: 2,
    }
}

fn pre<E: Display>(e: E) -> Failure {
    precondition(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(output)) => emit(&output),
        Ok(Err(failure)) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
        Err(_) => {
            eprintln!("error: internal invariant failed");
            ExitCode::from(1)
        }
    }
}

/// Writes the report to stdout. A closed pipe is a normal way for a
/// consumer to stop reading, so it counts as success.
fn emit(output: &str) -> ExitCode {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut handle = stdout.lock();
    match writeln!(handle, "{output}").and_then(|()| handle.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: cannot write report: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    let cache_dir = std::env::var_os("VDFI_CACHE_DIR")
        .map(PathBuf::from)
        .or(cli.cache_dir);
    let workers = cli.workers.max(1);
    let value = match cli.command {
        Command::Index { graph, f } => index_value(&graph, &f)?,
        Command::Classify { f } => classify_value(&f)?,
        Command::Bound { n, m, f, thm3 } => bound_command(n, m, &f, thm3)?,
        Command::Extremal { n, m } => extremal_value(n, m)?,
        Command::Verify { n, m, f } => verify_value(n, m, &f, cache_dir, workers)?,
        Command::Sweep {
            family,
            params,
            n_range,
            m_rule,
        } => sweep_value(&family, &params, &n_range, &m_rule, cache_dir, workers)?,
        Command::Lemma1 {
            xi1,
            xi2,
            max_total,
        } => lemma1_value(xi1, xi2, max_total)?,
    };
    Ok(match format {
        Format::Json => report::json(&value),
        Format::Csv => report::csv(&value),
        Format::Text => report::text(&value),
    })
}

fn parse_function(spec: &str) -> Result<DegreeFunction, Failure> {
    DegreeFunction::parse(spec).map_err(pre)
}

/// Inline graph6, or a file. File contents are sniffed: a first meaningful
/// line with two or more whitespace-separated tokens is an edge list,
/// anything else is a graph6 record (graph6 never contains spaces).
fn load_graph(spec: &str) -> Result<ChemGraph, Failure> {
    let path = Path::new(spec);
    if !path.is_file() {
        return ChemGraph::parse_graph6(spec.trim()).map_err(pre);
    }
    let text = fs::read_to_string(path)
        .map_err(|e| precondition(format!("cannot read {}: {e}", path.display())))?;
    let first = text
        .lines()
        .map(|l| l.find('#').map_or(l, |p| &l[..p]).trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| precondition(format!("{} holds no graph", path.display())))?;
    if first.split_whitespace().count() >= 2 {
        ChemGraph::parse_edge_list(&text).map_err(pre)
    } else {
        ChemGraph::parse_graph6(first).map_err(pre)
    }
}

fn index_value(graph: &str, spec: &str) -> Result<Value, Failure> {
    let f = parse_function(spec)?;
    let g = load_graph(graph)?;
    let h = h_f(&g, &f).map_err(pre)?;
    let gamma = gamma_f(&g, &f).map_err(pre)?;
    let (ti, tibar) = ti_pair(&g, &f).map_err(pre)?;
    let code = g.canonical_code().map_err(pre)?;
    Ok(Value::Record(vec![
        ("function", Value::Str(f.describe())),
        ("graph6", Value::Str(code.into_string())),
        ("n", Value::Int(g.n() as i64)),
        ("m", Value::Int(g.m() as i64)),
        ("h", Value::Num(h.value)),
        ("h_exact", Value::opt_int(h.exact)),
        ("gamma", Value::Num(gamma)),
        ("ti", Value::Num(ti.value)),
        ("ti_exact", Value::opt_int(ti.exact)),
        ("tibar", Value::Num(tibar.value)),
        ("tibar_exact", Value::opt_int(tibar.exact)),
    ]))
}

fn classify_value(spec: &str) -> Result<Value, Failure> {
    let f = parse_function(spec)?;
    let class = f.classify(DEFAULT_TOLERANCE).map_err(pre)?;
    Ok(Value::Record(vec![
        ("function", Value::Str(f.describe())),
        ("xi1", Value::Num(class.xi1)),
        ("xi2", Value::Num(class.xi2)),
        ("verdict", Value::Str(class.verdict.to_string())),
    ]))
}

fn bound_command(n: usize, m: usize, spec: &str, thm3: bool) -> Result<Value, Failure> {
    let f = parse_function(spec)?;
    let bound = if thm3 {
        ti_sum_bound(n, m, &f)
    } else {
        hf_bound(n, m, &f)
    }
    .map_err(pre)?;
    Ok(bound_value(&f, &bound))
}

fn bound_value(f: &DegreeFunction, b: &BoundReport) -> Value {
    Value::Record(vec![
        ("total", Value::Num(b.total)),
        ("residue", Value::Int(b.residue as i64)),
        ("direction", Value::Str(b.direction.to_string())),
        ("n", Value::Int(b.n as i64)),
        ("m", Value::Int(b.m as i64)),
        ("function", Value::Str(f.describe())),
        ("base", Value::Num(b.base)),
        ("correction", Value::Num(b.correction)),
        ("equality_degree_set", Value::Str(b.equality_degree_set.to_string())),
        ("total_thirds", Value::opt_int(b.exact.map(|e| e.total_thirds))),
    ])
}

fn extremal_value(n: usize, m: usize) -> Result<Value, Failure> {
    let solution = construct_extremal(n, m).map_err(pre)?;
    let witness = match &solution.witness {
        Some(g) => Value::Str(g.canonical_code().map_err(pre)?.into_string()),
        None => Value::Null,
    };
    let count = |pick: fn(&vdfi_core::DegreeVector) -> usize| {
        Value::opt_int(solution.counts.as_ref().map(|c| pick(c) as i64))
    };
    Ok(Value::Record(vec![
        ("n", Value::Int(n as i64)),
        ("m", Value::Int(m as i64)),
        ("feasible", Value::Bool(solution.feasible())),
        ("n1", count(|c| c.n1)),
        ("n2", count(|c| c.n2)),
        ("n3", count(|c| c.n3)),
        ("n4", count(|c| c.n4)),
        ("witness", witness),
        (
            "reason",
            match solution.reason {
                Some(r) => Value::Str(r.to_string()),
                None => Value::Null,
            },
        ),
    ]))
}

fn verify_value(
    n: usize,
    m: usize,
    spec: &str,
    cache_dir: Option<PathBuf>,
    workers: usize,
) -> Result<Value, Failure> {
    let f = parse_function(spec)?;
    let mut source = cache::CachedSource::new(cache_dir, workers);
    let report = verify_bound_with(&mut source, n, m, &f, VERIFY_TOLERANCE).map_err(pre)?;
    let attaining: Vec<String> = report
        .attaining
        .iter()
        .map(|c| c.as_str().to_string())
        .collect();
    Ok(Value::Record(vec![
        ("n", Value::Int(n as i64)),
        ("m", Value::Int(m as i64)),
        ("function", Value::Str(report.function.clone())),
        ("direction", Value::Str(report.bound.direction.to_string())),
        ("bound", Value::Num(report.bound.total)),
        (
            "extremal",
            Value::opt_num((report.graph_count > 0).then_some(report.extremum)),
        ),
        ("attained", Value::Bool(!report.attaining.is_empty())),
        ("graph_count", Value::Int(report.graph_count as i64)),
        ("attaining", Value::strings(attaining)),
        ("violations", Value::Int(report.violations.len() as i64)),
        (
            "equality_counts_verified",
            Value::Bool(report.equality_counts_verified),
        ),
        (
            "attainment_matches_prediction",
            Value::Bool(report.attainment_matches_prediction),
        ),
    ]))
}

fn sweep_value(
    family: &str,
    params: &str,
    n_range: &str,
    m_rule: &str,
    cache_dir: Option<PathBuf>,
    workers: usize,
) -> Result<Value, Failure> {
    let family = FunctionFamily::from_tag(family)
        .ok_or_else(|| precondition(format!("unknown family tag {family:?}")))?;
    let params = params
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| precondition(format!("bad parameter {t:?} in --params")))
        })
        .collect::<Result<Vec<f64>, Failure>>()?;
    let config = SweepConfig {
        family,
        params,
        orders: parse_n_range(n_range)?,
        sizes: parse_m_rule(m_rule)?,
        tolerance: VERIFY_TOLERANCE,
        exhaustive_upto: 8,
    };
    let mut source = cache::CachedSource::new(cache_dir, workers);
    let rows = sweep(&mut source, &config).map_err(pre)?;
    Ok(Value::List(
        rows.into_iter()
            .map(|row| {
                Value::Record(vec![
                    ("family", Value::Str(row.family.tag().to_string())),
                    ("parameter", Value::Num(row.param)),
                    ("n", Value::Int(row.n as i64)),
                    ("m", Value::Int(row.m as i64)),
                    ("residue", Value::Int(row.residue as i64)),
                    ("verdict", Value::Str(row.verdict.to_string())),
                    ("bound", Value::opt_num(row.bound)),
                    ("extremal", Value::opt_num(row.extremal)),
                    ("attained", Value::opt_bool(row.attained)),
                    (
                        "violations",
                        Value::opt_int(row.violations.map(|v| v as i64)),
                    ),
                ])
            })
            .collect(),
    ))
}

fn parse_n_range(s: &str) -> Result<(usize, usize), Failure> {
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| precondition(format!("bad order {t:?} in --n-range")))
    };
    match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            Ok((parse(lo)?, parse(hi)?))
        }
        None => {
            let n = parse(s)?;
            Ok((n, n))
        }
    }
}

fn parse_m_rule(s: &str) -> Result<MRule, Failure> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("all") {
        return Ok(MRule::All);
    }
    if t.eq_ignore_ascii_case("2n") {
        return Ok(MRule::TwiceN);
    }
    if t.eq_ignore_ascii_case("n") {
        return Ok(MRule::Offset(0));
    }
    let offset = |k: &str, sign: i64| {
        k.parse::<i64>()
            .map(|k| MRule::Offset(sign * k))
            .map_err(|_| precondition(format!("bad offset {k:?} in --m-rule")))
    };
    if let Some(k) = t.strip_prefix("n+") {
        return offset(k, 1);
    }
    if let Some(k) = t.strip_prefix("n-") {
        return offset(k, -1);
    }
    if let Ok(k) = t.parse::<usize>() {
        return Ok(MRule::Fixed(k));
    }
    Err(precondition(format!(
        "bad --m-rule {s:?}: expected all, 2n, n, n+K, n-K or an integer"
    )))
}

fn lemma1_value(xi1: f64, xi2: f64, max_total: usize) -> Result<Value, Failure> {
    let sep = gamma_separation(xi1, xi2, max_total).map_err(pre)?;
    Ok(Value::Record(vec![
        ("xi1", Value::Num(sep.xi1)),
        ("xi2", Value::Num(sep.xi2)),
        ("case", Value::Str(sep.case.to_string())),
        ("max_total", Value::Int(max_total as i64)),
        ("checked_pairs", Value::Int(sep.checked_pairs as i64)),
        ("verified", Value::Bool(sep.verified)),
        ("worst_margin", Value::Num(sep.worst_margin)),
        (
            "worst_pair",
            Value::List(vec![
                Value::Int(sep.worst_pair.0 as i64),
                Value::Int(sep.worst_pair.1 as i64),
            ]),
        ),
    ]))
}
