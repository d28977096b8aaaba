//! Per-group analysis pipeline: build, pair matrix (optionally parallel),
//! radical, graph, invariants, certificates, degrees, theorem checks.

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use solvgraph_core::degrees::{degree_report, DegreeReport};
use solvgraph_core::groupspec::GroupSpec;
use solvgraph_core::invariants::{invariant_report, InvariantReport};
use solvgraph_core::topology::{certify, check_structural_bounds, GenusCertificate, StructuralBoundsReport};
use solvgraph_core::{
    build_group, parse_group_spec, radical_from_matrix, Bitset, GroupError, PairMatrix, ParseError,
    PermGroup, SolvCache, SolvableGraph, Subgroup,
};

use crate::checks::{self, TheoremRow};

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub cap: usize,
    pub workers: usize,
    pub clique_budget: u64,
    pub timeout: Option<Duration>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            cap: solvgraph_core::DEFAULT_ORDER_CAP,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            clique_budget: solvgraph_core::invariants::DEFAULT_CLIQUE_BUDGET,
            timeout: None,
        }
    }
}

#[derive(Debug)]
pub enum PipelineError {
    Parse(ParseError),
    Group(GroupError),
    Timeout,
}

impl fmt::Display for PipelineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PipelineError::Parse(e) => write!(f, "invalid group spec: {e}"),
            PipelineError::Group(e) => write!(f, "{e}"),
            PipelineError::Timeout => write!(f, "analysis exceeded the timeout"),
        }
    }
}

impl From<ParseError> for PipelineError {
    fn from(e: ParseError) -> Self {
        PipelineError::Parse(e)
    }
}

impl From<GroupError> for PipelineError {
    fn from(e: GroupError) -> Self {
        PipelineError::Group(e)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Timing {
    pub total_ms: u64,
    pub matrix_ms: u64,
    pub invariants_ms: u64,
    pub certificate_ms: u64,
    pub degrees_ms: u64,
    pub checks_ms: u64,
}

#[derive(Clone, Debug)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub entries: usize,
    pub spot_checked: usize,
}

/// Everything computed for one group.
pub struct GroupAnalysis {
    pub spec_text: String,
    pub spec: GroupSpec,
    pub group: PermGroup,
    pub radical: Subgroup,
    pub matrix: PairMatrix,
    pub graph: Option<SolvableGraph>,
    pub invariants: Option<InvariantReport>,
    pub certificate: Option<GenusCertificate>,
    pub structural_bounds: Option<StructuralBoundsReport>,
    pub degrees: DegreeReport,
    pub theorems: Vec<TheoremRow>,
    pub timing: Timing,
    pub cache: CacheStats,
}

impl GroupAnalysis {
    pub fn solvable(&self) -> bool {
        self.radical.order() == self.group.order()
    }
}

/// Builds the pair matrix, farming rows out to `workers` threads with
/// worker-private caches merged afterwards. Row contents do not depend on
/// the partition, so the result is bit-identical for any worker count.
fn build_matrix(
    group: &PermGroup,
    workers: usize,
    deadline: Option<Instant>,
) -> Result<(PairMatrix, SolvCache), PipelineError> {
    let n = group.order();
    let expired = || deadline.is_some_and(|d| Instant::now() > d);
    if workers <= 1 || n < 64 {
        let mut cache = SolvCache::new();
        let mut rows = Vec::with_capacity(n);
        for u in 0..n {
            if u % 16 == 0 && expired() {
                return Err(PipelineError::Timeout);
            }
            rows.push(PairMatrix::build_row_upper(group, u, &mut cache));
        }
        return Ok((PairMatrix::assemble(n, rows), cache));
    }

    let next = AtomicUsize::new(0);
    let timed_out = AtomicBool::new(false);
    let rows: Mutex<Vec<Option<Bitset>>> = Mutex::new(vec![None; n]);
    let caches: Mutex<Vec<SolvCache>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                let mut cache = SolvCache::new();
                loop {
                    if timed_out.load(Ordering::Relaxed) || expired() {
                        timed_out.store(true, Ordering::Relaxed);
                        break;
                    }
                    let u = next.fetch_add(1, Ordering::Relaxed);
                    if u >= n {
                        break;
                    }
                    let row = PairMatrix::build_row_upper(group, u, &mut cache);
                    rows.lock().unwrap()[u] = Some(row);
                }
                caches.lock().unwrap().push(cache);
            });
        }
    });
    if timed_out.load(Ordering::Relaxed) {
        return Err(PipelineError::Timeout);
    }
    let rows: Vec<Bitset> = rows
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("all rows computed"))
        .collect();
    let mut merged = SolvCache::new();
    for cache in caches.into_inner().unwrap() {
        merged.merge(cache);
    }
    Ok((PairMatrix::assemble(n, rows), merged))
}

pub fn analyze_spec(spec_text: &str, opts: &AnalyzeOptions) -> Result<GroupAnalysis, PipelineError> {
    let t0 = Instant::now();
    let deadline = opts.timeout.map(|t| t0 + t);
    let spec = parse_group_spec(spec_text)?;
    let group = build_group(&spec, opts.cap)?;

    let t_matrix = Instant::now();
    let (matrix, cache) = build_matrix(&group, opts.workers, deadline)?;
    let matrix_ms = t_matrix.elapsed().as_millis() as u64;
    let spot_checked = cache
        .spot_check(&group)
        .expect("cache verdicts must survive recomputation");

    let radical = radical_from_matrix(&group, &matrix);
    let expired = || deadline.is_some_and(|d| Instant::now() > d);

    let (graph, invariants, certificate, structural_bounds, inv_ms, cert_ms) =
        if radical.order() < group.order() {
            let sg = SolvableGraph::from_matrix(&group, &matrix, &radical)
                .expect("non-solvable group has a graph");
            if expired() {
                return Err(PipelineError::Timeout);
            }
            let t_inv = Instant::now();
            let inv = invariant_report(sg.graph(), opts.clique_budget);
            let inv_ms = t_inv.elapsed().as_millis() as u64;
            if expired() {
                return Err(PipelineError::Timeout);
            }
            let t_cert = Instant::now();
            let cert = certify(sg.graph(), opts.clique_budget);
            let s3 = check_structural_bounds(&group, &sg, &radical, &cert, cert.best_lower_bound);
            let cert_ms = t_cert.elapsed().as_millis() as u64;
            (Some(sg), Some(inv), Some(cert), Some(s3), inv_ms, cert_ms)
        } else {
            (None, None, None, None, 0, 0)
        };

    if expired() {
        return Err(PipelineError::Timeout);
    }
    let t_deg = Instant::now();
    let degrees = degree_report(&group, &matrix, &radical, graph.as_ref())
        .expect("solvability degree routes agree");
    let degrees_ms = t_deg.elapsed().as_millis() as u64;

    let mut analysis = GroupAnalysis {
        spec_text: spec_text.to_string(),
        spec,
        group,
        radical,
        matrix,
        graph,
        invariants,
        certificate,
        structural_bounds,
        degrees,
        theorems: Vec::new(),
        timing: Timing {
            total_ms: 0,
            matrix_ms,
            invariants_ms: inv_ms,
            certificate_ms: cert_ms,
            degrees_ms,
            checks_ms: 0,
        },
        cache: CacheStats {
            hits: cache.hits(),
            misses: cache.misses(),
            entries: cache.len(),
            spot_checked,
        },
    };

    let t_checks = Instant::now();
    analysis.theorems = checks::group_rows(&analysis);
    analysis.timing.checks_ms = t_checks.elapsed().as_millis() as u64;
    analysis.timing.total_ms = t0.elapsed().as_millis() as u64;
    Ok(analysis)
}
