//! Solvabilizers, the solvable radical, and the solvable graph.
//!
//! The central object is the [`PairMatrix`]: for every ordered pair of
//! elements, whether the pair generates a solvable subgroup. One matrix
//! build serves the radical (rows that are all of `G`), the graph (its
//! restriction to `G \ Sol(G)`), per-element solvabilizers, and the
//! solvability-degree sums.
//!
//! Pair verdicts are memoized in a [`SolvCache`] keyed by subgroup order
//! plus an order-independent 64-bit hash of the member-id set (equivalent
//! to hashing the sorted ids, without the sort). Many distinct pairs
//! generate the same subgroup, so the derived-series work is shared; a
//! bounded sample of entries keeps its member sets so the cache can be
//! revalidated from scratch.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::Bitset;
use crate::graph::BitGraph;
use crate::group::{ElementId, PermGroup, Subgroup};

/// How many cache entries retain their full member set for spot checking.
const CACHE_WITNESS_LIMIT: usize = 64;

type CacheKey = (u32, u64);

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Order-independent hash of a set of element ids.
fn set_hash(members: &[u32]) -> u64 {
    members
        .iter()
        .fold(0u64, |acc, &m| acc.wrapping_add(splitmix64(m as u64 + 1)))
}

/// Memo of solvability verdicts per generated subgroup.
pub struct SolvCache {
    verdicts: BTreeMap<CacheKey, bool>,
    witnesses: Vec<(CacheKey, Vec<u32>, bool)>,
    hits: u64,
    misses: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CacheSoundnessError {
    pub subgroup_order: u32,
    pub cached: bool,
}

impl fmt::Display for CacheSoundnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cached verdict {} for subgroup of order {} disagrees with recomputation",
            self.cached, self.subgroup_order
        )
    }
}

impl Default for SolvCache {
    fn default() -> Self {
        Self::new()
    }
}

impl SolvCache {
    pub fn new() -> Self {
        SolvCache {
            verdicts: BTreeMap::new(),
            witnesses: Vec::new(),
            hits: 0,
            misses: 0,
        }
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn misses(&self) -> u64 {
        self.misses
    }

    pub fn len(&self) -> usize {
        self.verdicts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verdicts.is_empty()
    }

    fn lookup(&mut self, key: CacheKey) -> Option<bool> {
        match self.verdicts.get(&key) {
            Some(&v) => {
                self.hits += 1;
                Some(v)
            }
            None => {
                self.misses += 1;
                None
            }
        }
    }

    fn insert(&mut self, key: CacheKey, members: &[u32], verdict: bool) {
        if self.verdicts.insert(key, verdict).is_none()
            && self.witnesses.len() < CACHE_WITNESS_LIMIT
        {
            self.witnesses.push((key, members.to_vec(), verdict));
        }
    }

    /// Merges verdicts from a worker-private cache. Keys present in both
    /// must agree.
    pub fn merge(&mut self, other: SolvCache) {
        for (key, verdict) in other.verdicts {
            if let Some(&existing) = self.verdicts.get(&key) {
                assert_eq!(existing, verdict, "inconsistent cache verdicts for {key:?}");
            } else {
                self.verdicts.insert(key, verdict);
            }
        }
        for w in other.witnesses {
            if self.witnesses.len() < CACHE_WITNESS_LIMIT {
                self.witnesses.push(w);
            }
        }
        self.hits += other.hits;
        self.misses += other.misses;
    }

    /// Recomputes every retained witness from scratch and compares against
    /// the cached verdict.
    pub fn spot_check(&self, group: &PermGroup) -> Result<usize, CacheSoundnessError> {
        for (key, members, verdict) in &self.witnesses {
            if group.is_solvable_ids(members) != *verdict {
                return Err(CacheSoundnessError {
                    subgroup_order: key.0,
                    cached: *verdict,
                });
            }
        }
        Ok(self.witnesses.len())
    }
}

/// Solvability of the subgroup with the given members, consulting and
/// feeding the cache at every level of the derived series. Solvability of a
/// group and of its derived subgroup coincide, so one verdict settles the
/// whole chain.
fn solvable_members_cached(group: &PermGroup, members: Vec<u32>, cache: &mut SolvCache) -> bool {
    let mut chain: Vec<(CacheKey, Vec<u32>)> = Vec::new();
    let mut cur = members;
    let verdict = loop {
        if cur.len() == 1 {
            break true;
        }
        let key = (cur.len() as u32, set_hash(&cur));
        if let Some(v) = cache.lookup(key) {
            break v;
        }
        let next = group.derived_ids(&cur);
        let stable = next.len() == cur.len();
        chain.push((key, cur));
        if stable {
            break false;
        }
        cur = next;
    };
    for (key, members) in chain {
        cache.insert(key, &members, verdict);
    }
    verdict
}

/// Whether `<u, v>` is solvable. Symmetric in `u` and `v`.
pub fn pair_solvable(
    group: &PermGroup,
    u: ElementId,
    v: ElementId,
    cache: &mut SolvCache,
) -> bool {
    let members = group.closure_ids(&[u.0, v.0]);
    solvable_members_cached(group, members, cache)
}

/// Symmetric bit matrix of pair solvability over all of `G`. Row `u` is the
/// solvabilizer of `u` as a bitset (the diagonal is always set since `<u>`
/// is cyclic).
pub struct PairMatrix {
    order: usize,
    rows: Vec<Bitset>,
}

impl PairMatrix {
    /// Single-threaded build over the upper triangle.
    pub fn build(group: &PermGroup, cache: &mut SolvCache) -> Self {
        let n = group.order();
        let rows = (0..n).map(|u| Self::build_row_upper(group, u, cache)).collect();
        Self::assemble(n, rows)
    }

    /// The bits `v >= u` of row `u`. Workers can compute disjoint row ranges
    /// independently (with private caches) and assemble them afterwards.
    pub fn build_row_upper(group: &PermGroup, u: usize, cache: &mut SolvCache) -> Bitset {
        let n = group.order();
        let mut row = Bitset::new(n);
        for v in u..n {
            if pair_solvable(group, ElementId(u as u32), ElementId(v as u32), cache) {
                row.set(v);
            }
        }
        row
    }

    /// Mirrors upper-triangle rows into a full symmetric matrix.
    pub fn assemble(order: usize, mut rows: Vec<Bitset>) -> Self {
        assert_eq!(rows.len(), order);
        for u in 0..order {
            let ones: Vec<usize> = rows[u].ones().filter(|&v| v > u).collect();
            for v in ones {
                rows[v].set(u);
            }
        }
        PairMatrix { order, rows }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row(&self, u: ElementId) -> &Bitset {
        &self.rows[u.index()]
    }

    /// `|Sol_G(u)|`.
    pub fn solvabilizer_size(&self, u: ElementId) -> usize {
        self.rows[u.index()].count()
    }

    /// Sum of `|Sol_G(u)|` over all `u`, i.e. the number of ordered pairs
    /// generating a solvable subgroup.
    pub fn total_solvable_pairs(&self) -> u64 {
        self.rows.iter().map(|r| r.count() as u64).sum()
    }
}

/// The solvabilizer of `u` as a sorted list of element ids.
pub fn solvabilizer(group: &PermGroup, u: ElementId, cache: &mut SolvCache) -> Vec<ElementId> {
    let n = group.order();
    (0..n as u32)
        .map(ElementId)
        .filter(|&v| pair_solvable(group, u, v, cache))
        .collect()
}

/// The solvable radical computed by definition, building a fresh pair
/// matrix. Prefer [`radical_from_matrix`] when a matrix is already at hand.
pub fn solvable_radical(group: &PermGroup) -> Subgroup {
    let mut cache = SolvCache::new();
    let matrix = PairMatrix::build(group, &mut cache);
    radical_from_matrix(group, &matrix)
}

/// Extracts `Sol(G) = {u : Sol_G(u) = G}` from the matrix and validates it:
/// it must equal the intersection of all solvabilizers and be a subgroup,
/// normal, and solvable. Failures panic since they signal an implementation
/// bug rather than a user error.
pub fn radical_from_matrix(group: &PermGroup, matrix: &PairMatrix) -> Subgroup {
    let n = group.order();
    assert_eq!(matrix.order(), n);
    let mut ids = Vec::new();
    for u in 0..n {
        if matrix.rows[u].all() {
            ids.push(ElementId(u as u32));
        }
    }
    // Intersection route must agree with the all-of-G row test.
    let mut inter = Bitset::new(n);
    inter.fill();
    for row in &matrix.rows {
        inter.intersect_with(row);
    }
    assert_eq!(
        inter.ones().map(|i| ElementId(i as u32)).collect::<Vec<_>>(),
        ids,
        "radical characterizations disagree (bug)"
    );
    let radical = Subgroup::from_ids(ids, n);
    assert!(group.is_closed(&radical), "radical is not a subgroup (bug)");
    assert!(group.is_normal(&radical), "radical is not normal (bug)");
    assert!(
        group.is_solvable_subgroup(&radical),
        "radical is not solvable (bug)"
    );
    radical
}

/// An element `x` with both `x` and `x^2` outside the radical. Guaranteed to
/// exist for non-solvable groups.
pub fn find_square_witness(group: &PermGroup, radical: &Subgroup) -> ElementId {
    for u in 0..group.order() as u32 {
        let x = ElementId(u);
        if !radical.contains(x) && !radical.contains(group.mul(x, x)) {
            return x;
        }
    }
    panic!("no square witness found: group is solvable or there is a bug");
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolvableGroupError {
    pub group_name: String,
}

impl fmt::Display for SolvableGroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "the solvable graph is undefined for the solvable group {} (vertex set is empty)",
            self.group_name
        )
    }
}

/// The solvable graph: vertices are `G \ Sol(G)`, edges are pairs generating
/// a solvable subgroup.
#[derive(Debug)]
pub struct SolvableGraph {
    group_name: String,
    group_order: usize,
    radical_ids: Vec<ElementId>,
    vertices: Vec<ElementId>,
    vertex_index: Vec<Option<u32>>,
    graph: BitGraph,
}

impl SolvableGraph {
    /// Builds from scratch with a private cache.
    pub fn build(group: &PermGroup) -> Result<Self, SolvableGroupError> {
        let mut cache = SolvCache::new();
        let matrix = PairMatrix::build(group, &mut cache);
        let radical = radical_from_matrix(group, &matrix);
        Self::from_matrix(group, &matrix, &radical)
    }

    /// Builds from an existing matrix and validated radical.
    pub fn from_matrix(
        group: &PermGroup,
        matrix: &PairMatrix,
        radical: &Subgroup,
    ) -> Result<Self, SolvableGroupError> {
        let n = group.order();
        if radical.order() == n {
            return Err(SolvableGroupError {
                group_name: String::from(group.name()),
            });
        }
        let vertices: Vec<ElementId> = (0..n as u32)
            .map(ElementId)
            .filter(|&u| !radical.contains(u))
            .collect();
        let mut vertex_index = alloc::vec![None; n];
        for (i, &u) in vertices.iter().enumerate() {
            vertex_index[u.index()] = Some(i as u32);
        }
        let mut graph = BitGraph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for v in matrix.row(u).ones() {
                if let Some(j) = vertex_index[v] {
                    if (j as usize) > i {
                        graph.add_edge(i, j as usize);
                    }
                }
            }
        }
        debug_assert!(graph.is_consistent());
        Ok(SolvableGraph {
            group_name: String::from(group.name()),
            group_order: n,
            radical_ids: radical.members().to_vec(),
            vertices,
            vertex_index,
            graph,
        })
    }

    pub fn group_name(&self) -> &str {
        &self.group_name
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn radical_size(&self) -> usize {
        self.radical_ids.len()
    }

    pub fn radical_ids(&self) -> &[ElementId] {
        &self.radical_ids
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Element id of a vertex index.
    pub fn vertex_element(&self, i: usize) -> ElementId {
        self.vertices[i]
    }

    pub fn vertices(&self) -> &[ElementId] {
        &self.vertices
    }

    /// Vertex index of an element, if it is a vertex.
    pub fn vertex_of(&self, u: ElementId) -> Option<usize> {
        self.vertex_index[u.index()].map(|i| i as usize)
    }

    pub fn graph(&self) -> &BitGraph {
        &self.graph
    }

    /// DOT rendering: vertices labeled by element index and cycle notation,
    /// one undirected edge per adjacent pair, and a comment carrying the
    /// group name, order and radical size.
    pub fn to_dot(&self, group: &PermGroup) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        let _ = writeln!(s, "graph solvgraph {{");
        let _ = writeln!(
            s,
            "  // group: {}  |G|: {}  |Sol(G)|: {}",
            self.group_name,
            self.group_order,
            self.radical_ids.len()
        );
        let _ = writeln!(s, "  label=\"solvable graph of {}\";", self.group_name);
        for &u in &self.vertices {
            let _ = writeln!(
                s,
                "  {} [label=\"{} {}\"];",
                u.0,
                u.0,
                group.element(u).cycle_notation()
            );
        }
        for (i, &u) in self.vertices.iter().enumerate() {
            for j in self.graph.neighbors(i).ones() {
                if j > i {
                    let _ = writeln!(s, "  {} -- {};", u.0, self.vertices[j].0);
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;
    use crate::groupspec::{build_group, parse_group_spec};

    fn build(text: &str) -> PermGroup {
        build_group(&parse_group_spec(text).unwrap(), DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn identity_pairs_are_solvable() {
        let g = build("A5");
        let mut cache = SolvCache::new();
        for v in 0..g.order() as u32 {
            assert!(pair_solvable(&g, g.identity_id(), ElementId(v), &mut cache));
        }
    }

    #[test]
    fn five_cycle_and_its_square_are_solvable_pair() {
        let g = build("A5");
        let mut cache = SolvCache::new();
        let x = (0..g.order() as u32)
            .map(ElementId)
            .find(|&u| g.element_order(u) == 5)
            .unwrap();
        let x2 = g.mul(x, x);
        assert!(pair_solvable(&g, x, x2, &mut cache));
    }

    #[test]
    fn generating_pair_of_a5_is_not_solvable() {
        let g = build("A5");
        let mut cache = SolvCache::new();
        let gens = g.generator_ids();
        assert_eq!(g.subgroup_closure(&gens).order(), 60);
        assert!(!pair_solvable(&g, gens[0], gens[1], &mut cache));
    }

    #[test]
    fn radical_of_solvable_group_is_everything() {
        let g = build("S4");
        let radical = solvable_radical(&g);
        assert_eq!(radical.order(), 24);
    }

    #[test]
    fn graph_of_solvable_group_is_an_error() {
        let g = build("S4");
        let err = SolvableGraph::build(&g).unwrap_err();
        assert_eq!(err.group_name, "S4");
    }

    #[test]
    fn solvable_graph_of_a5_counts() {
        let g = build("A5");
        let sg = SolvableGraph::build(&g).unwrap();
        assert_eq!(sg.vertex_count(), 59);
        assert_eq!(sg.edge_count(), 571);
        assert_eq!(sg.radical_size(), 1);
    }

    #[test]
    fn square_witness_on_a5() {
        let g = build("A5");
        let radical = solvable_radical(&g);
        let x = find_square_witness(&g, &radical);
        assert!(!radical.contains(x));
        assert!(!radical.contains(g.mul(x, x)));
    }

    #[test]
    fn cache_spot_check_passes() {
        let g = build("A5");
        let mut cache = SolvCache::new();
        let _ = PairMatrix::build(&g, &mut cache);
        assert!(cache.spot_check(&g).unwrap() > 0);
        assert!(cache.hits() > 0);
    }

    #[test]
    fn parallel_assembly_matches_sequential() {
        let g = build("SL(2,3)");
        let mut cache = SolvCache::new();
        let full = PairMatrix::build(&g, &mut cache);
        // Simulate two workers with private caches.
        let n = g.order();
        let mut c1 = SolvCache::new();
        let mut c2 = SolvCache::new();
        let mut rows = Vec::new();
        for u in 0..n / 2 {
            rows.push(PairMatrix::build_row_upper(&g, u, &mut c1));
        }
        for u in n / 2..n {
            rows.push(PairMatrix::build_row_upper(&g, u, &mut c2));
        }
        let assembled = PairMatrix::assemble(n, rows);
        c1.merge(c2);
        for u in 0..n {
            assert_eq!(full.rows[u], assembled.rows[u]);
        }
    }
}
