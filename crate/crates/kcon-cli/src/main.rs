//! Command-line front end: thin adapters over the library operations.

use clap::{Args, Parser, Subcommand, ValueEnum};
use kcon::bounds::{
    min_forcing_edge_count, normalized, render_rational, threshold, BoundKind, Rational, Reading,
};
use kcon::connectivity::{
    has_k_plus_1_connected_subgraph, max_k_connected_pieces, vertex_connectivity,
};
use kcon::constructions::mader_graph;
use kcon::graph::Graph;
use kcon::io::{from_edge_list_text, from_graph6, to_edge_list, to_graph6};
use kcon::ledger::{run_checks, standard_checks, CheckStatus, LedgerReport};
use kcon::search::{
    max_edges_without, verify_forcing, SearchConfig, SearchError, SearchMode, SearchReport,
    DEFAULT_BUDGET,
};
use num::bigint::BigInt;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "kcon",
    about = "Extremal bounds and decision procedures for (k+1)-connected subgraphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    MaderConjecture,
    YusterThm,
    NewThm,
    MatulaLemma,
    MatulaNormalized,
    ConjectureNormalized,
    NewNormalized,
}

impl From<KindArg> for BoundKind {
    fn from(k: KindArg) -> BoundKind {
        match k {
            KindArg::MaderConjecture => BoundKind::MaderConjecture,
            KindArg::YusterThm => BoundKind::YusterThm,
            KindArg::NewThm => BoundKind::NewThm,
            KindArg::MatulaLemma => BoundKind::MatulaLemma,
            KindArg::MatulaNormalized => BoundKind::MatulaNormalized,
            KindArg::ConjectureNormalized => BoundKind::ConjectureNormalized,
            KindArg::NewNormalized => BoundKind::NewNormalized,
        }
    }
}

/// Graph input: graph6 on stdin by default, or a file whose extension
/// selects the format (`.g6` / `.edges`), overridable with `--format`.
#[derive(Args)]
struct GraphInput {
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    #[arg(long)]
    format: Option<GraphFormat>,
}

impl GraphInput {
    fn read(&self) -> Result<Graph, String> {
        let (text, format) = match &self.input {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                let format = self.format.unwrap_or_else(|| sniff(path));
                (text, format)
            }
            None => {
                let mut text = String::new();
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| format!("cannot read stdin: {e}"))?;
                (text, self.format.unwrap_or(GraphFormat::Graph6))
            }
        };
        match format {
            GraphFormat::Graph6 => from_graph6(&text).map_err(|e| e.to_string()),
            GraphFormat::Edges => from_edge_list_text(&text).map_err(|e| e.to_string()),
        }
    }
}

fn sniff(path: &Path) -> GraphFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("edges") => GraphFormat::Edges,
        _ => GraphFormat::Graph6,
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named construction
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Vertex connectivity and a minimum cut, if any
    Kappa {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Decide whether the graph contains a (k+1)-connected subgraph
    HasKsub {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        graph: GraphInput,
        /// Also print the witness vertex set
        #[arg(long)]
        witness: bool,
    },
    /// List all inclusion-maximal (k+1)-connected pieces
    Decompose {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Exact edge threshold of a bound, raw or normalized
    Bound {
        #[arg(long)]
        kind: KindArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Evaluate the normalized form at --gamma instead of (n, k)
        #[arg(long)]
        normalized: bool,
        /// Rational gamma as P/Q or an integer
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Exhaustively verify a forcing bound at its minimum forcing edge count
    VerifyTheorem {
        #[arg(long)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        override_domain: bool,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Shorthand for verify-theorem with the classical lemma bound
    VerifyMatula {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Maximum edges of an n-vertex graph with no (k+1)-connected subgraph
    SearchMax {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Run the exact algebra check table
    Ledger {
        /// Comma-separated check ids to run (default: all)
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Independent k-set joined to a union of cliques; no (k+1)-connected
    /// subgraph, with the extremal edge count
    Mader {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = GenFormat::Graph6)]
        format: GenFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Greedy,
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    let parse_int =
        |s: &str| s.trim().parse::<BigInt>().map_err(|e| format!("bad rational {text:?}: {e}"));
    match text.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den == BigInt::from(0) {
                return Err(format!("bad rational {text:?}: zero denominator"));
            }
            Ok(Rational::new(parse_int(num)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(text)?)),
    }
}

fn budget_config(jobs: usize, seed: u64, budget: Option<u64>, override_domain: bool) -> SearchConfig {
    let env_budget = std::env::var("KCON_BUDGET").ok().and_then(|v| v.parse().ok());
    SearchConfig {
        jobs,
        seed,
        budget: budget.or(env_budget).unwrap_or(DEFAULT_BUDGET),
        override_domain,
    }
}

const EXIT_OK: u8 = 0;
const EXIT_PROPERTY_FAILS: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    std::fs::write(path, text + "\n").map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn print_search_report(r: &SearchReport) {
    println!("mode: {}", r.mode);
    if let Some(kind) = &r.kind {
        println!("kind: {kind:?}");
    }
    println!("n: {}  k: {}", r.n, r.k);
    if let Some(t) = &r.threshold {
        println!("threshold: {t}");
    }
    if let Some(m) = r.edge_count {
        println!("edge count tested: {m}");
    }
    println!("graphs examined: {}", r.graphs_examined);
    if let Some(v) = r.verified {
        println!("verified: {v}");
    }
    for cx in &r.counterexamples {
        println!("counterexample: {}", cx.trim_end());
    }
    if let Some(best) = &r.best {
        println!("best: {} edges, {}", best.edges, best.graph6.trim_end());
    }
    if let Some(m) = r.max_edges {
        println!("max edges: {m}");
    }
    println!("exhaustive: {}", r.exhaustive);
    if r.exploratory {
        println!("exploratory: true (outside the bound's validity domain)");
    }
    eprintln!("wall time: {:?}", r.wall_time);
}

fn search_error_exit(e: SearchError) -> ExitCode {
    fail(e)
}

fn run_verify(
    kind: BoundKind,
    n: usize,
    k: usize,
    config: SearchConfig,
    json: Option<PathBuf>,
) -> ExitCode {
    match verify_forcing(kind, n, k, &config) {
        Ok(report) => {
            print_search_report(&report);
            if let Some(path) = &json {
                if let Err(e) = write_json(path, &report) {
                    return fail(e);
                }
            }
            if report.verified == Some(true) {
                ExitCode::from(EXIT_OK)
            } else {
                ExitCode::from(EXIT_PROPERTY_FAILS)
            }
        }
        Err(e) => search_error_exit(e),
    }
}

fn ledger_report(only: &[String]) -> Result<LedgerReport, String> {
    let table = standard_checks();
    if only.is_empty() {
        return Ok(run_checks(&table));
    }
    let known: Vec<&str> = table.iter().map(|c| c.id).collect();
    for id in only {
        if !known.contains(&id.as_str()) {
            return Err(format!("unknown check id {id:?}; known ids: {}", known.join(", ")));
        }
    }
    let filtered: Vec<_> =
        table.into_iter().filter(|c| only.iter().any(|id| id == c.id)).collect();
    Ok(run_checks(&filtered))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen { family: GenFamily::Mader { n, k, format } } => {
            match mader_graph(n, k) {
                Ok(mg) => {
                    match format {
                        GenFormat::Graph6 => print!("{}", to_graph6(&mg.graph)),
                        GenFormat::Edges => print!("{}", to_edge_list(&mg.graph)),
                    }
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => fail(e),
            }
        }
        Command::Kappa { graph } => {
            let g = match graph.read() {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            match vertex_connectivity(&g) {
                Ok((kappa, cert)) => {
                    println!("kappa: {kappa}");
                    match cert {
                        Some(cert) => println!("min cut: {}", cert.separator),
                        None => println!("min cut: none (complete graph)"),
                    }
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => fail(e),
            }
        }
        Command::HasKsub { k, graph, witness } => {
            if k < 1 {
                return fail("has-ksub requires --k >= 1");
            }
            let g = match graph.read() {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            let (found, w) = has_k_plus_1_connected_subgraph(&g, k);
            println!("{found}");
            if witness {
                if let Some(w) = w {
                    println!("witness: {}", w.vertices);
                }
            }
            ExitCode::from(if found { EXIT_OK } else { EXIT_PROPERTY_FAILS })
        }
        Command::Decompose { k, graph } => {
            if k < 1 {
                return fail("decompose requires --k >= 1");
            }
            let g = match graph.read() {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            let pieces = max_k_connected_pieces(&g, k);
            println!("pieces: {}", pieces.len());
            for w in &pieces {
                println!("piece size={}: {}", w.vertices.len(), w.vertices);
            }
            ExitCode::from(EXIT_OK)
        }
        Command::Bound { kind, n, k, normalized: use_norm, gamma } => {
            let kind: BoundKind = kind.into();
            if use_norm || gamma.is_some() {
                let Some(gamma) = gamma else {
                    return fail("--normalized requires --gamma P/Q");
                };
                let gamma = match parse_rational(&gamma) {
                    Ok(g) => g,
                    Err(e) => return fail(e),
                };
                match normalized(&gamma, kind) {
                    Ok(value) => {
                        println!("normalized threshold: {}", render_rational(&value));
                        ExitCode::from(EXIT_OK)
                    }
                    Err(e) => fail(e),
                }
            } else {
                let (Some(n), Some(k)) = (n, k) else {
                    return fail("bound requires --n and --k (or --normalized --gamma)");
                };
                match threshold(kind, n, k) {
                    Ok(t) => {
                        let reading = match t.reading {
                            Reading::Forcing => "forcing (|E| > B yields a (k+1)-connected subgraph)",
                            Reading::AttainableMax => "attainable maximum of subgraph-free graphs",
                        };
                        println!("threshold: {}", render_rational(&t.value));
                        println!("reading: {reading}");
                        println!("in validity domain: {}", t.in_domain);
                        if kind.is_forcing() {
                            let m = min_forcing_edge_count(kind, n, k).expect("forcing kind");
                            println!("min forcing edge count: {m}");
                        }
                        ExitCode::from(EXIT_OK)
                    }
                    Err(e) => fail(e),
                }
            }
        }
        Command::VerifyTheorem { kind, n, k, jobs, override_domain, budget, json } => {
            run_verify(kind.into(), n, k, budget_config(jobs, 0, budget, override_domain), json)
        }
        Command::VerifyMatula { n, k, jobs, budget, json } => {
            run_verify(BoundKind::MatulaLemma, n, k, budget_config(jobs, 0, budget, false), json)
        }
        Command::SearchMax { n, k, mode, seed, budget, json } => {
            let mode = match mode {
                ModeArg::Exhaustive => SearchMode::Exhaustive,
                ModeArg::Greedy => SearchMode::Greedy,
            };
            match max_edges_without(n, k, mode, &budget_config(1, seed, budget, false)) {
                Ok(report) => {
                    print_search_report(&report);
                    if let Some(path) = &json {
                        if let Err(e) = write_json(path, &report) {
                            return fail(e);
                        }
                    }
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => search_error_exit(e),
            }
        }
        Command::Ledger { only, json } => {
            let report = match ledger_report(&only) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            for check in &report.checks {
                match &check.status {
                    CheckStatus::Pass => println!("CHECK {}: pass", check.id),
                    CheckStatus::Fail { step, detail } => {
                        println!("CHECK {}: FAIL at step {step}: {detail}", check.id)
                    }
                }
            }
            if let Some(path) = &json {
                if let Err(e) = write_json(path, &report) {
                    return fail(e);
                }
            }
            if report.all_passed {
                println!("checks: all passed");
                ExitCode::from(EXIT_OK)
            } else {
                println!("checks: {} failed of {}", report.failed, report.checks.len());
                ExitCode::from(EXIT_PROPERTY_FAILS)
            }
        }
    }
}
