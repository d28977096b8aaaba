//! Closed forms and bounds checked against exact-rational evaluation and an
//! exhaustive packing oracle.

mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use solvgraph_core::invariants::DEFAULT_CLIQUE_BUDGET;
use solvgraph_core::topology::{
    certify, clique_packing_bound, crosscap_complete, euler_crosscap_lower_bound,
    euler_genus_lower_bound, genus_complete, heawood_cap,
};
use solvgraph_core::BitGraph;

fn ceil_ratio(num: i64, den: i64) -> u64 {
    BigRational::new(BigInt::from(num), BigInt::from(den))
        .ceil()
        .to_integer()
        .to_u64()
        .unwrap()
}

#[test]
fn genus_closed_form_matches_exact_rational_evaluation() {
    for n in 3..=30i64 {
        let expected = ceil_ratio((n - 3) * (n - 4), 12);
        assert_eq!(genus_complete(n as u64), expected, "genus K_{n}");
    }
}

#[test]
fn crosscap_closed_form_matches_exact_rational_evaluation() {
    for n in 3..=30i64 {
        let expected = if n == 7 {
            3
        } else {
            ceil_ratio((n - 3) * (n - 4), 6)
        };
        assert_eq!(crosscap_complete(n as u64), expected, "crosscap K_{n}");
    }
}

#[test]
fn euler_bounds_match_exact_rational_evaluation() {
    for (v, e) in [(59i64, 571i64), (5, 10), (4, 6), (119, 2461), (719, 50761)] {
        let genus = ceil_ratio((e - 3 * v + 6).max(0), 6);
        let crosscap = ceil_ratio((e - 3 * v + 6).max(0), 3);
        assert_eq!(euler_genus_lower_bound(v as u64, e as u64), genus);
        assert_eq!(euler_crosscap_lower_bound(v as u64, e as u64), crosscap);
    }
}

#[test]
fn euler_bound_on_the_a5_graph_counts() {
    // ceil(571/6 - 59/2 + 1) = ceil(200/3) = 67 in exact arithmetic.
    assert_eq!(euler_genus_lower_bound(59, 571), 67);
    assert_eq!(euler_crosscap_lower_bound(59, 571), 134);
}

#[test]
fn heawood_cap_frozen_values() {
    assert_eq!(heawood_cap(0), 4);
    assert_eq!(heawood_cap(3), 9);
    assert_eq!(heawood_cap(5), 11);
    assert_eq!(heawood_cap(67), 31);
    assert_eq!(heawood_cap(68), 32);
}

#[test]
fn heawood_cap_matches_wide_integer_sqrt_scan() {
    // Against a direct search for the floor of the square root.
    for m in 0..500u64 {
        let x = 1 + 48 * m;
        let mut s = 0u64;
        while (s + 1) * (s + 1) <= x {
            s += 1;
        }
        assert_eq!(heawood_cap(m), (7 + s) / 2);
    }
}

#[test]
fn greedy_packing_never_exceeds_exhaustive_oracle() {
    // Two disjoint K5s plus noise edges.
    let mut g = BitGraph::new(12);
    for u in 0..5 {
        for v in u + 1..5 {
            g.add_edge(u, v);
            g.add_edge(u + 5, v + 5);
        }
    }
    g.add_edge(0, 5);
    g.add_edge(10, 11);
    g.add_edge(4, 10);
    let packing = clique_packing_bound(&g, DEFAULT_CLIQUE_BUDGET);
    let oracle = common::exhaustive_packing_bound(12, |u, v| g.has_edge(u, v), |s| genus_complete(s as u64));
    assert!(packing.bound <= oracle);
    assert_eq!(packing.bound, 2);
    assert_eq!(oracle, 2);

    // A K7 sharing two vertices with a K5: only one can be packed fully.
    let mut h = BitGraph::new(10);
    for u in 0..7 {
        for v in u + 1..7 {
            h.add_edge(u, v);
        }
    }
    for &u in &[5, 6, 7, 8, 9] {
        for &v in &[5, 6, 7, 8, 9] {
            if u < v {
                h.add_edge(u, v);
            }
        }
    }
    let packing = clique_packing_bound(&h, DEFAULT_CLIQUE_BUDGET);
    let oracle = common::exhaustive_packing_bound(10, |u, v| h.has_edge(u, v), |s| genus_complete(s as u64));
    assert!(packing.bound <= oracle);
    assert!(packing.bound >= 1);
}

#[test]
fn certificate_on_k11() {
    let cert = certify(&BitGraph::complete(11), DEFAULT_CLIQUE_BUDGET);
    assert_eq!(cert.clique_size_found, 11);
    assert!(cert.clique_exact);
    assert_eq!(cert.clique_bound, 5);
    // Euler: ceil((55 - 33 + 6)/6) = 5 as well.
    assert_eq!(cert.euler_bound, 5);
    assert_eq!(cert.best_lower_bound, 5);
    assert!(cert.excludes_projective()); // crosscap(K11) = 10
    assert_eq!(cert.crosscap_clique_bound, 10);
}
