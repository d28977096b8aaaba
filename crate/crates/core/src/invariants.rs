//! Graph invariants: degree data, girth, connectivity and diameter, clique
//! search, and the structural shape predicates.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::Bitset;
use crate::graph::BitGraph;
use crate::solvgraph::{PairMatrix, SolvableGraph};

/// Node-expansion budget for the exact clique search.
pub const DEFAULT_CLIQUE_BUDGET: u64 = 10_000_000;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeSummary {
    pub min: usize,
    pub max: usize,
    /// Sorted `(degree, multiplicity)` pairs.
    pub histogram: Vec<(usize, usize)>,
}

pub fn degree_summary(g: &BitGraph) -> DegreeSummary {
    let mut degrees: Vec<usize> = (0..g.n()).map(|u| g.degree(u)).collect();
    degrees.sort_unstable();
    let mut histogram: Vec<(usize, usize)> = Vec::new();
    for d in &degrees {
        match histogram.last_mut() {
            Some((deg, count)) if deg == d => *count += 1,
            _ => histogram.push((*d, 1)),
        }
    }
    DegreeSummary {
        min: degrees.first().copied().unwrap_or(0),
        max: degrees.last().copied().unwrap_or(0),
        histogram,
    }
}

// ---------------------------------------------------------------------------
// Degree formula
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeFormulaError {
    pub vertex: usize,
    pub degree: usize,
    pub expected: usize,
}

impl fmt::Display for DegreeFormulaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {} has degree {} but |Sol_G(u)| - |Sol(G)| - 1 = {} (bug)",
            self.vertex, self.degree, self.expected
        )
    }
}

/// Checks `deg(u) = |Sol_G(u)| - |Sol(G)| - 1` at every vertex, with the
/// degree read from the built graph and the solvabilizer size from the pair
/// matrix over all of `G`.
pub fn degree_check(
    sg: &SolvableGraph,
    matrix: &PairMatrix,
) -> Result<DegreeSummary, DegreeFormulaError> {
    let radical = sg.radical_size();
    for i in 0..sg.vertex_count() {
        let u = sg.vertex_element(i);
        let degree = sg.graph().degree(i);
        let expected = matrix.solvabilizer_size(u) - radical - 1;
        if degree != expected {
            return Err(DegreeFormulaError {
                vertex: i,
                degree,
                expected,
            });
        }
    }
    Ok(degree_summary(sg.graph()))
}

// ---------------------------------------------------------------------------
// Girth
// ---------------------------------------------------------------------------

/// Length of a shortest cycle, or `None` for forests. BFS from every vertex;
/// each non-tree edge closes a cycle of length `dist[x] + dist[y] + 1`
/// through the root, and the minimum over all roots is exact.
pub fn girth(g: &BitGraph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        dist[root] = 0;
        let mut queue = vec![root];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for y in g.neighbors(x).ones() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push(y);
                } else if parent[x] != y {
                    let cycle = dist[x] + dist[y] + 1;
                    if best.is_none_or(|b| cycle < b) {
                        best = Some(cycle);
                    }
                    if best == Some(3) {
                        return best;
                    }
                }
            }
        }
    }
    best
}

// ---------------------------------------------------------------------------
// Connectivity and diameter
// ---------------------------------------------------------------------------

/// Result of the two-step test: for every non-adjacent pair, look for a
/// common neighbour. The first pair without one is reported as a witness
/// that the diameter exceeds 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TwoStepResult {
    AtMostTwo,
    ExceedsTwo { u: usize, v: usize },
}

pub fn diameter_two_step(g: &BitGraph) -> TwoStepResult {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            if !g.neighbors(u).intersects(g.neighbors(v)) {
                return TwoStepResult::ExceedsTwo { u, v };
            }
        }
    }
    TwoStepResult::AtMostTwo
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConnectivitySummary {
    pub components: usize,
    /// Exact diameter from all-pairs BFS; `None` when disconnected.
    pub diameter: Option<usize>,
}

/// Exact connectivity and diameter by BFS from every vertex, using bitset
/// frontiers.
pub fn diameter_exact(g: &BitGraph) -> ConnectivitySummary {
    let n = g.n();
    let components = g.components().len();
    if n == 0 || components != 1 {
        return ConnectivitySummary {
            components,
            diameter: None,
        };
    }
    let mut diameter = 0usize;
    for root in 0..n {
        let mut visited = Bitset::new(n);
        visited.set(root);
        let mut frontier = Bitset::new(n);
        frontier.set(root);
        let mut ecc = 0usize;
        loop {
            let mut next = Bitset::new(n);
            for x in frontier.ones() {
                next.union_with(g.neighbors(x));
            }
            next.subtract(&visited);
            if !next.any() {
                break;
            }
            visited.union_with(&next);
            frontier = next;
            ecc += 1;
        }
        diameter = diameter.max(ecc);
    }
    ConnectivitySummary {
        components,
        diameter: Some(diameter),
    }
}

// ---------------------------------------------------------------------------
// Clique search
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliqueResult {
    pub size: usize,
    /// Whether the search completed within budget (the size is then exactly
    /// the clique number of the searched vertex set).
    pub exact: bool,
    pub witness: Vec<usize>,
}

struct CliqueSearch<'a> {
    g: &'a BitGraph,
    budget: u64,
    expansions: u64,
    aborted: bool,
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    fn recurse(&mut self, r: &mut Vec<usize>, p: Bitset, x: Bitset) {
        if self.expansions >= self.budget {
            self.aborted = true;
            return;
        }
        self.expansions += 1;
        let p_count = p.count();
        if p_count == 0 {
            if !x.any() && r.len() > self.best.len() {
                self.best = r.clone();
            }
            return;
        }
        if r.len() + p_count <= self.best.len() {
            return;
        }
        // Pivot on the candidate (from P or X) covering most of P.
        let mut pivot = usize::MAX;
        let mut pivot_cover = usize::MAX;
        for w in p.ones().chain(x.ones()) {
            let uncovered = p_count - p.intersection_count(self.g.neighbors(w));
            if pivot == usize::MAX || uncovered < pivot_cover {
                pivot = w;
                pivot_cover = uncovered;
            }
        }
        let mut candidates = p.clone();
        candidates.subtract(self.g.neighbors(pivot));
        let mut p = p;
        let mut x = x;
        for v in candidates.ones() {
            let mut np = p.clone();
            np.intersect_with(self.g.neighbors(v));
            let mut nx = x.clone();
            nx.intersect_with(self.g.neighbors(v));
            r.push(v);
            self.recurse(r, np, nx);
            r.pop();
            if self.aborted {
                return;
            }
            p.unset(v);
            x.set(v);
        }
    }
}

/// Greedy clique from every start vertex; deterministic tie-breaking by
/// vertex index. Serves as the lower-bound seed for the exact search.
fn greedy_clique(g: &BitGraph, alive: &Bitset) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for start in alive.ones() {
        let mut clique = vec![start];
        let mut cand = g.neighbors(start).clone();
        cand.intersect_with(alive);
        while let Some(mut pick) = cand.first_set() {
            // Prefer the candidate keeping the most options open.
            let mut pick_score = 0usize;
            for w in cand.ones() {
                let score = cand.intersection_count(g.neighbors(w));
                if score > pick_score {
                    pick = w;
                    pick_score = score;
                }
            }
            clique.push(pick);
            cand.intersect_with(g.neighbors(pick));
        }
        if clique.len() > best.len() {
            clique.sort_unstable();
            best = clique;
        }
    }
    best
}

/// Maximum clique via Bron-Kerbosch with pivoting over the vertices in
/// `alive` (all vertices when `None`), seeded by a greedy lower bound and
/// bounded by a node-expansion budget. The witness is re-verified before
/// being returned.
pub fn max_clique(g: &BitGraph, budget: u64, alive: Option<&Bitset>) -> CliqueResult {
    let n = g.n();
    let all = {
        let mut b = Bitset::new(n);
        b.fill();
        b
    };
    let alive = alive.unwrap_or(&all);
    if !alive.any() {
        return CliqueResult {
            size: 0,
            exact: true,
            witness: Vec::new(),
        };
    }
    let seed = greedy_clique(g, alive);
    let mut search = CliqueSearch {
        g,
        budget,
        expansions: 0,
        aborted: false,
        best: seed,
    };
    let mut r = Vec::new();
    search.recurse(&mut r, alive.clone(), Bitset::new(n));
    let witness = search.best;
    assert!(g.is_clique(&witness), "clique witness failed verification (bug)");
    assert!(witness.iter().all(|&v| alive.get(v)));
    CliqueResult {
        size: witness.len(),
        exact: !search.aborted,
        witness,
    }
}

// ---------------------------------------------------------------------------
// Shape predicates
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShapePredicates {
    pub is_star: bool,
    pub is_regular: bool,
    pub is_complete_multipartite: bool,
    /// Number of parts when complete multipartite.
    pub multipartite_parts: Option<usize>,
    pub has_isolated_vertex: bool,
    pub is_tree: bool,
}

/// Direct-definition predicates. Complete multipartiteness is tested via the
/// complement: the graph is complete multipartite exactly when every
/// component of the complement is a clique in the complement.
pub fn shape_predicates(g: &BitGraph) -> ShapePredicates {
    let n = g.n();
    let degrees: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let min = degrees.iter().min().copied().unwrap_or(0);
    let max = degrees.iter().max().copied().unwrap_or(0);

    let is_star = n >= 2
        && degrees.iter().any(|&d| d == n - 1)
        && degrees.iter().filter(|&&d| d != n - 1).all(|&d| d == 1)
        && degrees.iter().filter(|&&d| d == n - 1).count() == if n == 2 { 2 } else { 1 };

    let complement = g.complement();
    let comps = complement.components();
    let is_complete_multipartite = comps
        .iter()
        .all(|comp| comp.iter().all(|&u| complement.neighbors(u).count() == comp.len() - 1));

    let components = g.components().len();
    ShapePredicates {
        is_star,
        is_regular: n > 0 && min == max,
        is_complete_multipartite,
        multipartite_parts: is_complete_multipartite.then_some(comps.len()),
        has_isolated_vertex: n > 0 && min == 0,
        is_tree: n > 0 && components == 1 && g.edge_count() == n - 1,
    }
}

// ---------------------------------------------------------------------------
// Aggregate report
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantReport {
    pub degrees: DegreeSummary,
    pub girth: Option<usize>,
    pub components: usize,
    /// Exact diameter; `None` when disconnected.
    pub diameter: Option<usize>,
    pub two_step: TwoStepResult,
    pub clique: CliqueResult,
    pub predicates: ShapePredicates,
}

pub fn invariant_report(g: &BitGraph, clique_budget: u64) -> InvariantReport {
    let connectivity = diameter_exact(g);
    let report = InvariantReport {
        degrees: degree_summary(g),
        girth: girth(g),
        components: connectivity.components,
        diameter: connectivity.diameter,
        two_step: diameter_two_step(g),
        clique: max_clique(g, clique_budget, None),
        predicates: shape_predicates(g),
    };
    // Internal consistency of the report fields.
    debug_assert!(report.girth != Some(3) || !report.predicates.is_tree);
    debug_assert!(!report.predicates.is_star || report.predicates.is_tree);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> BitGraph {
        BitGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])
    }

    fn star5() -> BitGraph {
        BitGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)])
    }

    /// Complete tripartite K_{2,2,2} (the octahedron); parts {0,3}, {1,4},
    /// {2,5}.
    fn k222() -> BitGraph {
        let mut g = BitGraph::new(6);
        for u in 0..6 {
            for v in u + 1..6 {
                if v != u + 3 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn girth_of_forests_is_none() {
        assert_eq!(girth(&path4()), None);
        assert_eq!(girth(&star5()), None);
    }

    #[test]
    fn girth_of_triangle_and_cycles() {
        assert_eq!(girth(&BitGraph::complete(3)), Some(3));
        let c5 = BitGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(girth(&c5), Some(5));
    }

    #[test]
    fn diameter_of_path() {
        let d = diameter_exact(&path4());
        assert_eq!(d.components, 1);
        assert_eq!(d.diameter, Some(3));
        assert_eq!(
            diameter_two_step(&path4()),
            TwoStepResult::ExceedsTwo { u: 0, v: 3 }
        );
    }

    #[test]
    fn two_step_matches_exact_when_small() {
        let g = star5();
        assert_eq!(diameter_two_step(&g), TwoStepResult::AtMostTwo);
        assert_eq!(diameter_exact(&g).diameter, Some(2));
    }

    #[test]
    fn disconnected_pair_is_a_witness() {
        let g = BitGraph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(diameter_exact(&g).components, 2);
        assert!(matches!(
            diameter_two_step(&g),
            TwoStepResult::ExceedsTwo { .. }
        ));
    }

    #[test]
    fn clique_of_k5_is_exact() {
        let r = max_clique(&BitGraph::complete(5), DEFAULT_CLIQUE_BUDGET, None);
        assert_eq!(r.size, 5);
        assert!(r.exact);
        assert_eq!(r.witness, [0, 1, 2, 3, 4]);
    }

    #[test]
    fn clique_of_petersen_is_two() {
        // Petersen graph is triangle-free.
        let edges = [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        ];
        let g = BitGraph::from_edges(10, &edges);
        let r = max_clique(&g, DEFAULT_CLIQUE_BUDGET, None);
        assert_eq!(r.size, 2);
        assert!(r.exact);
        assert_eq!(girth(&g), Some(5));
    }

    #[test]
    fn star_predicates() {
        let p = shape_predicates(&star5());
        assert!(p.is_star);
        assert!(p.is_tree);
        assert!(!p.is_regular);
        assert!(p.is_complete_multipartite); // K_{1,4} is complete bipartite
        assert_eq!(p.multipartite_parts, Some(2));
    }

    #[test]
    fn octahedron_is_complete_tripartite() {
        let p = shape_predicates(&k222());
        assert!(p.is_complete_multipartite);
        assert_eq!(p.multipartite_parts, Some(3));
        assert!(p.is_regular);
        assert!(!p.is_star);
        assert!(!p.is_tree);
    }

    #[test]
    fn path_is_not_complete_multipartite() {
        let p = shape_predicates(&path4());
        assert!(!p.is_complete_multipartite);
        assert!(p.is_tree);
        assert!(!p.has_isolated_vertex);
    }

    #[test]
    fn isolated_vertex_detected() {
        let g = BitGraph::from_edges(3, &[(0, 1)]);
        assert!(shape_predicates(&g).has_isolated_vertex);
    }

    #[test]
    fn complete_graph_is_complete_multipartite() {
        let p = shape_predicates(&BitGraph::complete(4));
        assert!(p.is_complete_multipartite);
        assert_eq!(p.multipartite_parts, Some(4));
    }
}
