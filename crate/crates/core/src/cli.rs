//! Command-line front end: `gen`, `query`, `verify` and `bench`.
//!
//! Exit codes are 0 on success, 1 on runtime or verification failure and 2
//! on usage errors. Reachability answers go to stdout.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::engine::{reach, EngineConfig};
use crate::error::Error;
use crate::format::{emit_lgg, parse_lgg};
use crate::generate::{gen_family, gen_random, Family};
use crate::grid::{LayeredGridGraph, Vertex};
use crate::metrics::{check_bounds, predicted_calls, predicted_words, Bounds};
use crate::oracle::oracle_reach;

#[derive(Parser, Debug)]
#[command(
    name = "gridreach",
    version,
    about = "Reachability in layered grid graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated graph in LGG v1 format.
    Gen(GenArgs),
    /// Answer one reachability query.
    Query(QueryArgs),
    /// Compare the engine against the BFS oracle on random instances.
    Verify(VerifyArgs),
    /// Run corner-to-corner queries and report metrics against the bounds.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    /// full, empty, staircase, single-path or random.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0.5)]
    p_north: f64,
    #[arg(long, default_value_t = 0.5)]
    p_east: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short = 'o', long = "output")]
    output: PathBuf,
}

#[derive(Args, Debug)]
struct QueryArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_parser = parse_vertex)]
    s: Vertex,
    #[arg(long, value_parser = parse_vertex)]
    t: Vertex,
    #[arg(long, conflicts_with = "k")]
    epsilon: Option<f64>,
    /// Use this divisor at every level instead of one derived from epsilon.
    #[arg(long)]
    k: Option<usize>,
    /// Append a JSON object with counters.
    #[arg(long)]
    metrics: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    n_list: Vec<usize>,
    /// Trials per configuration (side, epsilon, edge probability).
    #[arg(long)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_delimiter = ',', required = true)]
    epsilon_list: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "0.3,0.5,0.7")]
    p_list: Vec<f64>,
    /// Directory for the counterexample files.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    #[arg(long, hide = true)]
    mutate_late_target_check: bool,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    n_list: Vec<usize>,
    #[arg(long, default_value_t = 1.0)]
    epsilon: f64,
    #[arg(long, default_value = "full")]
    family: String,
    /// Divisor for every level; overrides epsilon.
    #[arg(long)]
    fixed_k: Option<usize>,
    /// Edge probability for the random family.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_vertex(s: &str) -> Result<Vertex, String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected x,y, got {s:?}"))?;
    let x = x
        .trim()
        .parse()
        .map_err(|e| format!("bad x in {s:?}: {e}"))?;
    let y = y
        .trim()
        .parse()
        .map_err(|e| format!("bad y in {s:?}: {e}"))?;
    Ok(Vertex::new(x, y))
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::OutOfView { .. }
            | Error::InvalidConfig(_)
            | Error::InvalidParams { .. }
            | Error::UnknownFamily(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Runtime(format!("{}: {e}", path.display()))
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut out = String::new();
    let r = match cli.command {
        Command::Gen(a) => cmd_gen(&a, &mut out),
        Command::Query(a) => cmd_query(&a, &mut out),
        Command::Verify(a) => cmd_verify(&a, &mut out),
        Command::Bench(a) => cmd_bench(&a, &mut out),
    };
    print!("{out}");
    match r {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            1
        }
    }
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    Ok(())
}

fn check_p(name: &str, p: f64) -> Result<(), Failure> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Failure::Usage(format!(
            "{name} must lie in [0, 1], got {p}"
        )));
    }
    Ok(())
}

fn make_graph(
    family: &str,
    n: usize,
    pn: f64,
    pe: f64,
    seed: u64,
) -> Result<LayeredGridGraph, Failure> {
    if family == "random" {
        return Ok(gen_random(n, pn, pe, seed));
    }
    let f: Family = family.parse()?;
    Ok(gen_family(f, n))
}

fn cmd_gen(a: &GenArgs, out: &mut String) -> Result<i32, Failure> {
    check_n(a.n)?;
    check_p("p-north", a.p_north)?;
    check_p("p-east", a.p_east)?;
    let g = make_graph(&a.family, a.n, a.p_north, a.p_east, a.seed)?;
    std::fs::write(&a.output, emit_lgg(&g)).map_err(|e| io_err(&a.output, e))?;
    writeln!(out, "{} {}", a.output.display(), g.edge_count()).unwrap();
    Ok(0)
}

#[derive(Serialize)]
struct QueryReport {
    reachable: bool,
    n: usize,
    k_top: usize,
    pushes: u64,
    pops: u64,
    edge_queries: u64,
    peak_stack: usize,
    peak_tracked_words: usize,
    wall_ms: f64,
}

fn cmd_query(a: &QueryArgs, out: &mut String) -> Result<i32, Failure> {
    let cfg = match (a.epsilon, a.k) {
        (_, Some(k)) => EngineConfig::explicit_k(k),
        (Some(e), None) => EngineConfig::epsilon(e),
        (None, None) => EngineConfig::epsilon(1.0),
    };
    cfg.validate()?;
    let text = std::fs::read_to_string(&a.graph).map_err(|e| io_err(&a.graph, e))?;
    let g = parse_lgg(&text)?;
    let start = Instant::now();
    let ans = reach(&g, a.s, a.t, &cfg)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    writeln!(out, "{}", if ans.reachable { "YES" } else { "NO" }).unwrap();
    if a.metrics {
        let m = &ans.metrics;
        let report = QueryReport {
            reachable: ans.reachable,
            n: m.n,
            k_top: m.k_top,
            pushes: m.pushes,
            pops: m.pops,
            edge_queries: m.edge_queries,
            peak_stack: m.peak_stack(),
            peak_tracked_words: m.peak_tracked_words,
            wall_ms,
        };
        writeln!(out, "{}", serde_json::to_string(&report).unwrap()).unwrap();
    }
    let m = &ans.metrics;
    if m.stack_bound_violations + m.visit_once_violations + m.push_bound_violations > 0 {
        return Err(Failure::Runtime("internal invariant violated".into()));
    }
    Ok(0)
}

/// A query `s <= t` drawn uniformly: `s` anywhere, `t` in the quadrant above
/// and right of `s`.
pub fn random_query(rng: &mut impl Rng, n: usize) -> (Vertex, Vertex) {
    let s = Vertex::new(rng.random_range(0..=n), rng.random_range(0..=n));
    let t = Vertex::new(rng.random_range(s.x..=n), rng.random_range(s.y..=n));
    (s, t)
}

fn cmd_verify(a: &VerifyArgs, out: &mut String) -> Result<i32, Failure> {
    for &n in &a.n_list {
        check_n(n)?;
    }
    for &p in &a.p_list {
        check_p("p", p)?;
    }
    for &e in &a.epsilon_list {
        EngineConfig::epsilon(e).validate()?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut comparisons = 0u64;
    for &n in &a.n_list {
        for &eps in &a.epsilon_list {
            for &p in &a.p_list {
                let mut cfg = EngineConfig::epsilon(eps).with_audit(true);
                cfg.lggr.late_target_check = a.mutate_late_target_check;
                for _ in 0..a.trials {
                    let graph_seed: u64 = rng.random();
                    let g = gen_random(n, p, p, graph_seed);
                    let (s, t) = random_query(&mut rng, n);
                    let ans = reach(&g, s, t, &cfg)?;
                    let truth = oracle_reach(&g.view(), s, t)?;
                    comparisons += 1;
                    let m = &ans.metrics;
                    let violations = m.stack_bound_violations
                        + m.visit_once_violations
                        + m.push_bound_violations;
                    if ans.reachable != truth || violations > 0 {
                        let (gp, qp) = write_counterexample(&a.out_dir, &g, s, t, eps)?;
                        writeln!(
                            out,
                            "MISMATCH n={n} epsilon={eps} p={p} graph_seed={graph_seed} s={s} t={t} \
                             engine={} oracle={truth} violations={violations}",
                            ans.reachable
                        )
                        .unwrap();
                        writeln!(out, "counterexample: {} {}", gp.display(), qp.display()).unwrap();
                        writeln!(out, "comparisons: {comparisons} mismatches: 1").unwrap();
                        return Ok(1);
                    }
                }
            }
        }
    }
    writeln!(out, "comparisons: {comparisons} mismatches: 0").unwrap();
    Ok(0)
}

fn write_counterexample(
    dir: &Path,
    g: &LayeredGridGraph,
    s: Vertex,
    t: Vertex,
    eps: f64,
) -> Result<(PathBuf, PathBuf), Failure> {
    std::fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    let gp = dir.join("counterexample.lgg");
    let qp = dir.join("counterexample.query");
    std::fs::write(&gp, emit_lgg(g)).map_err(|e| io_err(&gp, e))?;
    let query = format!("--s {s} --t {t} --epsilon {eps}\n");
    std::fs::write(&qp, query).map_err(|e| io_err(&qp, e))?;
    Ok((gp, qp))
}

#[derive(Serialize)]
struct BenchLine {
    family: String,
    n: usize,
    k_top: usize,
    reachable: bool,
    pushes: u64,
    pops: u64,
    edge_queries: u64,
    recursive_calls: u64,
    work: u64,
    peak_stack: usize,
    peak_tracked_words: usize,
    predicted_calls: u128,
    predicted_words: u128,
    calls_ratio: f64,
    words_ratio: f64,
    pass: bool,
    wall_ms: f64,
}

fn cmd_bench(a: &BenchArgs, out: &mut String) -> Result<i32, Failure> {
    check_p("p", a.p)?;
    let base = match a.fixed_k {
        Some(k) => EngineConfig::explicit_k(k),
        None => EngineConfig::fixed_epsilon(a.epsilon),
    };
    base.validate()?;
    if a.family != "random" {
        a.family.parse::<Family>()?;
    }
    for &n in &a.n_list {
        check_n(n)?;
    }
    let bounds = Bounds::CALIBRATED;
    for &n in &a.n_list {
        let g = make_graph(&a.family, n, a.p, a.p, a.seed)?;
        let start = Instant::now();
        let ans = reach(&g, Vertex::new(0, 0), Vertex::new(n, n), &base)?;
        let wall_ms = start.elapsed().as_secs_f64() * 1e3;
        let m = &ans.metrics;
        let report = check_bounds(m, &bounds);
        let line = BenchLine {
            family: a.family.clone(),
            n,
            k_top: m.k_top,
            reachable: ans.reachable,
            pushes: m.pushes,
            pops: m.pops,
            edge_queries: m.edge_queries,
            recursive_calls: m.total_recursive_calls(),
            work: m.work(),
            peak_stack: m.peak_stack(),
            peak_tracked_words: m.peak_tracked_words,
            predicted_calls: predicted_calls(n.div_ceil(report.k) * report.k, report.k, bounds.c_t),
            predicted_words: predicted_words(n.div_ceil(report.k) * report.k, report.k, bounds.c_s),
            calls_ratio: report.calls_ratio,
            words_ratio: report.words_ratio,
            pass: report.pass,
            wall_ms,
        };
        writeln!(out, "{}", serde_json::to_string(&line).unwrap()).unwrap();
    }
    Ok(0)
}
