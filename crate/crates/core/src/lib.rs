//! Solvable graphs of finite permutation groups.
//!
//! Builds small finite groups from a constructor grammar (alternating,
//! symmetric, cyclic, dihedral, matrix groups over tiny fields, raw
//! permutation generators, direct products), computes the solvable radical
//! `Sol(G)` by the all-pairs definition, and constructs the solvable graph:
//! vertices are `G \ Sol(G)`, with an edge between `u` and `v` whenever
//! `<u, v>` is a solvable subgroup.
//!
//! On top of the graph the crate derives degree data, girth, diameter (both
//! an exact all-pairs BFS and a cheaper common-neighbour test), clique
//! bounds via Bron-Kerbosch with pivoting, genus and crosscap lower-bound
//! certificates, and the solvability degree `P_s(G)` together with the
//! commuting probability `Pr(G)`, all in exact integer or rational
//! arithmetic.
//!
//! The crate is `no_std` (alloc only); IO, CLI and serialization live in
//! the companion `solvgraph-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod degrees;
pub mod graph;
pub mod group;
pub mod groupspec;
pub mod invariants;
pub mod perm;
pub mod solvgraph;
pub mod topology;

pub use bitset::Bitset;
pub use graph::BitGraph;
pub use group::{direct_product, ElementId, GroupError, PermGroup, Subgroup, DEFAULT_ORDER_CAP};
pub use groupspec::{build_group, parse_group_spec, GroupAtom, GroupSpec, ParseError};
pub use perm::{Permutation, MAX_DEGREE};
pub use solvgraph::{
    find_square_witness, pair_solvable, radical_from_matrix, solvabilizer, solvable_radical,
    PairMatrix, SolvCache, SolvableGraph, SolvableGroupError,
};
