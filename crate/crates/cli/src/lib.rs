//! Command-line orchestration for solvable-graph analysis: the `analyze`,
//! `verify`, `bounds` and `export` subcommands.

pub mod checks;
pub mod pipeline;
pub mod report;

use std::fs;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use solvgraph_core::invariants::DEFAULT_CLIQUE_BUDGET;
use solvgraph_core::topology::{euler_crosscap_lower_bound, euler_genus_lower_bound};
use solvgraph_core::{GroupError, DEFAULT_ORDER_CAP};

use checks::{Status, TheoremRow};
use pipeline::{analyze_spec, AnalyzeOptions, GroupAnalysis, PipelineError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_THEOREM_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SOLVABLE: i32 = 3;
pub const EXIT_CAP: i32 = 4;

/// The groups the default verification suite runs over.
pub const DEFAULT_SUITE_GROUPS: [&str; 8] = [
    "A5", "S5", "A5xC2", "SL(2,5)", "PSL(3,2)", "GL(2,4)", "A6", "S6",
];

#[derive(Parser)]
#[command(
    name = "solvgraph",
    version,
    about = "Solvable graphs of finite groups: construction, invariants, genus bounds, solvability degree"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Maximum group order accepted before aborting enumeration.
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    cap: usize,
    /// Worker threads for the pair-matrix build (default: available
    /// parallelism; 1 gives a fully serial run).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis pipeline for one group spec.
    Analyze {
        /// Group spec, e.g. "A5", "A5xC2", "SL(2,5)", "perm:(1 2 3);(1 2)".
        spec: String,
        /// Write the JSON report to PATH, or to stdout with "-".
        #[arg(long)]
        json: Option<String>,
        /// Write a DOT rendering of the solvable graph to PATH.
        #[arg(long)]
        dot: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
        /// Node-expansion budget for the exact clique search.
        #[arg(long, default_value_t = DEFAULT_CLIQUE_BUDGET)]
        clique_budget: u64,
    },
    /// Run the theorem suite over a list of groups.
    Verify {
        /// Suite name; only "paper" is defined.
        #[arg(long, default_value = "paper")]
        suite: String,
        /// Comma-separated group specs (defaults to the suite list).
        #[arg(long)]
        groups: Option<String>,
        /// Only run checks whose name contains this string.
        #[arg(long)]
        check: Option<String>,
        /// Per-group timeout in seconds; groups over budget are skipped.
        #[arg(long)]
        timeout: Option<u64>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Euler-formula genus and crosscap lower bounds for raw (V, E) counts.
    Bounds { v: u64, e: u64 },
    /// Export the solvable graph as DOT or JSON adjacency.
    Export {
        spec: String,
        /// Write DOT to PATH.
        #[arg(long)]
        dot: Option<String>,
        /// Write JSON adjacency to PATH.
        #[arg(long)]
        adj: Option<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
}

impl CommonOpts {
    fn to_options(&self) -> AnalyzeOptions {
        AnalyzeOptions {
            cap: self.cap,
            workers: self
                .workers
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())),
            ..AnalyzeOptions::default()
        }
    }
}

pub fn run() -> i32 {
    run_from(std::env::args())
}

/// Entry point shared by `main` and the tests; returns the exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Analyze {
            spec,
            json,
            dot,
            common,
            clique_budget,
        } => cmd_analyze(&spec, json.as_deref(), dot.as_deref(), common, clique_budget),
        Command::Verify {
            suite,
            groups,
            check,
            timeout,
            common,
        } => cmd_verify(&suite, groups.as_deref(), check.as_deref(), timeout, common),
        Command::Bounds { v, e } => cmd_bounds(v, e),
        Command::Export {
            spec,
            dot,
            adj,
            common,
        } => cmd_export(&spec, dot.as_deref(), adj.as_deref(), common),
    }
}

fn pipeline_exit(err: &PipelineError) -> i32 {
    match err {
        PipelineError::Parse(_) => EXIT_USAGE,
        PipelineError::Group(GroupError::CapExceeded { .. }) => EXIT_CAP,
        PipelineError::Group(_) => EXIT_USAGE,
        PipelineError::Timeout => EXIT_THEOREM_FAILURE,
    }
}

fn write_output(path: &str, content: &str) -> Result<(), i32> {
    if path == "-" {
        print!("{content}");
        return Ok(());
    }
    fs::write(path, content).map_err(|e| {
        eprintln!("error: cannot write {path}: {e}");
        EXIT_USAGE
    })
}

fn cmd_analyze(
    spec: &str,
    json: Option<&str>,
    dot: Option<&str>,
    common: CommonOpts,
    clique_budget: u64,
) -> i32 {
    let mut opts = common.to_options();
    opts.clique_budget = clique_budget;
    let analysis = match analyze_spec(spec, &opts) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return pipeline_exit(&e);
        }
    };
    let report = report::build_report(&analysis);
    let json_to_stdout = json == Some("-");
    if let Some(path) = json {
        let rendered = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
        if let Err(code) = write_output(path, &rendered) {
            return code;
        }
    }
    if let Some(path) = dot {
        match &analysis.graph {
            Some(sg) => {
                if let Err(code) = write_output(path, &sg.to_dot(&analysis.group)) {
                    return code;
                }
            }
            None => eprintln!("note: no graph to export for a solvable group"),
        }
    }
    if !json_to_stdout {
        print_summary(&analysis);
    }
    if analysis.solvable() {
        eprintln!(
            "note: {} is solvable; the solvable graph is undefined (exit 3)",
            analysis.group.name()
        );
        return EXIT_SOLVABLE;
    }
    if analysis
        .theorems
        .iter()
        .any(|r| r.gating && r.status == Status::Fail)
    {
        return EXIT_THEOREM_FAILURE;
    }
    EXIT_OK
}

fn print_summary(a: &GroupAnalysis) {
    println!(
        "group {}  order {}  degree {}  |Sol(G)| = {}{}",
        a.group.name(),
        a.group.order(),
        a.group.degree(),
        a.radical.order(),
        if a.solvable() { "  (solvable)" } else { "" }
    );
    if let Some(sg) = &a.graph {
        println!(
            "graph: {} vertices, {} edges",
            sg.vertex_count(),
            sg.edge_count()
        );
    }
    if let Some(inv) = &a.invariants {
        println!(
            "invariants: girth {:?}, components {}, diameter {:?}, degrees {}..{}, clique {}{}",
            inv.girth,
            inv.components,
            inv.diameter,
            inv.degrees.min,
            inv.degrees.max,
            inv.clique.size,
            if inv.clique.exact { " (exact)" } else { " (lower bound)" },
        );
    }
    if let Some(cert) = &a.certificate {
        println!(
            "genus: lower bound {} (euler {}, clique {}, packing {}); crosscap euler {}, disjoint 2K5 {}",
            cert.best_lower_bound,
            cert.euler_bound,
            cert.clique_bound,
            cert.packing_bound,
            cert.crosscap_euler_bound,
            cert.has_disjoint_2k5,
        );
    }
    println!(
        "degrees: P_s = {} ({}), Pr = {} ({})",
        a.degrees.ps,
        a.degrees.ps.approx_decimal(6),
        a.degrees.pr,
        a.degrees.pr.approx_decimal(6),
    );
    let (mut pass, mut fail) = (0usize, 0usize);
    for r in &a.theorems {
        match r.status {
            Status::Pass => pass += 1,
            Status::Fail => fail += 1,
            Status::Skipped => {}
        }
    }
    println!("checks: {pass} passed, {fail} failed");
    for r in a.theorems.iter().filter(|r| r.status == Status::Fail) {
        println!("  FAIL [{}] {} :: {}", r.group, r.anchor, r.detail);
    }
}

fn print_row(r: &TheoremRow) {
    let status = match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    };
    let info = if r.gating { "" } else { " (info)" };
    let detail = if r.detail.is_empty() {
        String::new()
    } else {
        format!(" :: {}", r.detail)
    };
    println!("{status}{info} [{}] {} — {}{detail}", r.group, r.key, r.anchor);
}

fn cmd_verify(
    suite: &str,
    groups: Option<&str>,
    check: Option<&str>,
    timeout: Option<u64>,
    common: CommonOpts,
) -> i32 {
    if suite != "paper" {
        eprintln!("error: unknown suite '{suite}' (only \"paper\" is defined)");
        return EXIT_USAGE;
    }
    let group_list: Vec<String> = match groups {
        Some(csv) => csv.split(',').map(|s| s.trim().to_string()).collect(),
        None => DEFAULT_SUITE_GROUPS.iter().map(|s| s.to_string()).collect(),
    };
    let full_default_run = groups.is_none() && check.is_none();

    let mut opts = common.to_options();
    opts.timeout = timeout.map(Duration::from_secs);

    let mut rows: Vec<TheoremRow> = checks::global_rows();
    for spec in &group_list {
        match analyze_spec(spec, &opts) {
            Ok(analysis) => {
                if analysis.solvable() {
                    eprintln!(
                        "error: the suite requires non-solvable groups; {} is solvable",
                        analysis.group.name()
                    );
                    return EXIT_SOLVABLE;
                }
                rows.extend(analysis.theorems.iter().cloned());
            }
            Err(PipelineError::Timeout) => {
                rows.push(TheoremRow {
                    key: "group-analysis",
                    anchor: "analysis within the per-group timeout",
                    group: spec.clone(),
                    status: Status::Skipped,
                    gating: false,
                    detail: format!("skipped after {}s timeout", timeout.unwrap_or(0)),
                });
            }
            Err(e) => {
                eprintln!("error: {spec}: {e}");
                return pipeline_exit(&e);
            }
        }
    }

    if full_default_run {
        rows.extend(checks::audit_rows(&rows));
    }

    if let Some(filter) = check {
        let filtered: Vec<TheoremRow> = rows
            .into_iter()
            .filter(|r| r.key.contains(filter))
            .collect();
        if filtered.is_empty() {
            eprintln!("error: no check matches '{filter}'");
            return EXIT_USAGE;
        }
        rows = filtered;
    }

    let (mut pass, mut fail, mut skip, mut info) = (0usize, 0usize, 0usize, 0usize);
    for r in &rows {
        print_row(r);
        if !r.gating {
            info += 1;
        }
        match r.status {
            Status::Pass => pass += 1,
            Status::Fail => fail += 1,
            Status::Skipped => skip += 1,
        }
    }
    let gating_failures = rows
        .iter()
        .filter(|r| r.gating && r.status == Status::Fail)
        .count();
    println!(
        "verify: {} checks, {pass} passed, {fail} failed ({gating_failures} gating), {skip} skipped, {info} informational",
        rows.len()
    );
    if gating_failures > 0 {
        EXIT_THEOREM_FAILURE
    } else {
        EXIT_OK
    }
}

fn cmd_bounds(v: u64, e: u64) -> i32 {
    if v < 1 {
        eprintln!("error: v must be at least 1");
        return EXIT_USAGE;
    }
    if e > v * (v - 1) / 2 {
        eprintln!("error: a simple graph on {v} vertices has at most {} edges", v * (v - 1) / 2);
        return EXIT_USAGE;
    }
    println!("v = {v}, e = {e}");
    println!(
        "genus lower bound (Euler formula): {}",
        euler_genus_lower_bound(v, e)
    );
    println!(
        "crosscap lower bound (Euler formula): {}",
        euler_crosscap_lower_bound(v, e)
    );
    EXIT_OK
}

fn cmd_export(spec: &str, dot: Option<&str>, adj: Option<&str>, common: CommonOpts) -> i32 {
    if dot.is_none() && adj.is_none() {
        eprintln!("error: export needs --dot PATH or --adj PATH");
        return EXIT_USAGE;
    }
    let opts = common.to_options();
    let analysis = match analyze_spec(spec, &opts) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return pipeline_exit(&e);
        }
    };
    let Some(sg) = &analysis.graph else {
        eprintln!(
            "error: {} is solvable; the solvable graph is undefined",
            analysis.group.name()
        );
        return EXIT_SOLVABLE;
    };
    if let Some(path) = dot {
        if let Err(code) = write_output(path, &sg.to_dot(&analysis.group)) {
            return code;
        }
    }
    if let Some(path) = adj {
        let export = report::build_adjacency(&analysis).expect("graph present");
        let rendered = serde_json::to_string_pretty(&export).expect("export serializes") + "\n";
        if let Err(code) = write_output(path, &rendered) {
            return code;
        }
    }
    EXIT_OK
}
