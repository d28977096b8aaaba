//! Independent oracles for the integration tests.
//!
//! Everything here works directly on permutation image arrays with naive
//! set-based algorithms: no element indexing, no multiplication tables, no
//! memoization. The production code is checked against these, never the
//! other way around.

#![allow(dead_code)]

use std::collections::BTreeSet;

use solvgraph_core::perm::Permutation;
use solvgraph_core::PermGroup;

/// Closure of a set of permutations under composition, as a sorted set.
pub fn naive_closure(degree: usize, seeds: &[Permutation]) -> BTreeSet<Permutation> {
    let mut set: BTreeSet<Permutation> = BTreeSet::new();
    set.insert(Permutation::identity(degree));
    for s in seeds {
        set.insert(s.clone());
    }
    loop {
        let mut new = Vec::new();
        for a in &set {
            for b in &set {
                let c = a.compose(b);
                if !set.contains(&c) {
                    new.push(c);
                }
            }
        }
        if new.is_empty() {
            return set;
        }
        for c in new {
            set.insert(c);
        }
    }
}

/// Derived subgroup via commutators of all pairs, closed.
pub fn naive_derived(degree: usize, members: &BTreeSet<Permutation>) -> BTreeSet<Permutation> {
    let mut commutators = Vec::new();
    for a in members {
        for b in members {
            let ab = a.compose(b);
            let ba = b.compose(a);
            commutators.push(ba.inverse().compose(&ab));
        }
    }
    naive_closure(degree, &commutators)
}

/// Solvability through the derived series.
pub fn naive_is_solvable(degree: usize, members: &BTreeSet<Permutation>) -> bool {
    let mut cur = members.clone();
    loop {
        if cur.len() == 1 {
            return true;
        }
        let next = naive_derived(degree, &cur);
        if next.len() == cur.len() {
            return false;
        }
        cur = next;
    }
}

pub fn naive_pair_solvable(degree: usize, u: &Permutation, v: &Permutation) -> bool {
    let closure = naive_closure(degree, &[u.clone(), v.clone()]);
    naive_is_solvable(degree, &closure)
}

/// The solvabilizer of `u` by brute-force pair tests over the whole group.
pub fn naive_solvabilizer(group: &PermGroup, u: &Permutation) -> Vec<Permutation> {
    group
        .elements()
        .iter()
        .filter(|v| naive_pair_solvable(group.degree(), u, v))
        .cloned()
        .collect()
}

/// The radical as the set of elements whose solvabilizer is everything.
pub fn naive_radical(group: &PermGroup) -> Vec<Permutation> {
    group
        .elements()
        .iter()
        .filter(|u| naive_solvabilizer(group, u).len() == group.order())
        .cloned()
        .collect()
}

/// Number of conjugacy classes, for the `Pr(G) = k(G)/|G|` oracle.
pub fn conjugacy_class_count(group: &PermGroup) -> usize {
    let n = group.order();
    let mut seen = vec![false; n];
    let mut classes = 0;
    for u in 0..n {
        if seen[u] {
            continue;
        }
        classes += 1;
        let up = &group.elements()[u];
        for g in group.elements() {
            let conj = g.inverse().compose(&up.compose(g));
            let idx = group
                .id_of(&conj)
                .expect("conjugate stays in the group")
                .index();
            seen[idx] = true;
        }
    }
    classes
}

/// Exhaustive maximum-weight vertex-disjoint clique packing for small
/// graphs: enumerate every clique of size >= 5 by bitmask, then take the
/// best disjoint family by dynamic programming over vertex subsets.
pub fn exhaustive_packing_bound(
    n: usize,
    has_edge: impl Fn(usize, usize) -> bool,
    weight: impl Fn(usize) -> u64,
) -> u64 {
    assert!(n <= 20, "oracle is exponential in the vertex count");
    let full = 1usize << n;
    let mut cliques: Vec<(usize, u64)> = Vec::new();
    for mask in 0..full {
        let verts: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if verts.len() < 5 {
            continue;
        }
        let is_clique = verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| has_edge(u, v)));
        if is_clique {
            cliques.push((mask, weight(verts.len())));
        }
    }
    let mut dp = vec![0u64; full];
    for mask in 1..full {
        let low = mask.trailing_zeros() as usize;
        // Either the lowest vertex is unused...
        let mut best = dp[mask & !(1 << low)];
        // ...or it is covered by some clique inside the mask.
        for &(cmask, w) in &cliques {
            if cmask & mask == cmask && cmask >> low & 1 == 1 {
                best = best.max(w + dp[mask & !cmask]);
            }
        }
        dp[mask] = best;
    }
    dp[full - 1]
}
