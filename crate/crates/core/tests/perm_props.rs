//! Property tests for the permutation and bitset primitives.

use proptest::prelude::*;

use solvgraph_core::perm::Permutation;
use solvgraph_core::Bitset;

fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u8).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

proptest! {
    #[test]
    fn compose_is_associative(a in arb_perm(9), b in arb_perm(9), c in arb_perm(9)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn inverse_cancels(a in arb_perm(9)) {
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert!(a.inverse().compose(&a).is_identity());
    }

    #[test]
    fn order_is_minimal_power(a in arb_perm(8)) {
        let o = a.order();
        let mut p = a.clone();
        for k in 1..o {
            prop_assert!(!p.is_identity(), "order not minimal at {k}");
            p = p.compose(&a);
        }
        prop_assert!(p.is_identity());
    }

    #[test]
    fn cycles_reassemble(a in arb_perm(10)) {
        let rebuilt = Permutation::from_cycles(10, &a.cycles()).unwrap();
        prop_assert_eq!(rebuilt, a);
    }

    #[test]
    fn bitset_ops_agree_with_sets(
        xs in proptest::collection::btree_set(0usize..150, 0..40),
        ys in proptest::collection::btree_set(0usize..150, 0..40),
    ) {
        let mut a = Bitset::new(150);
        let mut b = Bitset::new(150);
        for &x in &xs { a.set(x); }
        for &y in &ys { b.set(y); }
        prop_assert_eq!(a.count(), xs.len());
        prop_assert_eq!(a.intersection_count(&b), xs.intersection(&ys).count());
        prop_assert_eq!(a.is_subset_of(&b), xs.is_subset(&ys));
        let collected: Vec<usize> = a.ones().collect();
        let expected: Vec<usize> = xs.iter().copied().collect();
        prop_assert_eq!(collected, expected);
        let mut u = a.clone();
        u.union_with(&b);
        prop_assert_eq!(u.count(), xs.union(&ys).count());
        let mut d = a.clone();
        d.subtract(&b);
        prop_assert_eq!(d.count(), xs.difference(&ys).count());
    }
}
