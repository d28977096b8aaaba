//! Finite permutation groups with fully enumerated, indexed element tables.
//!
//! Enumeration is a breadth-first closure from the identity with a fixed
//! generator order, so two builds of the same generators produce identical
//! tables. For groups up to [`MULT_TABLE_MAX_ORDER`] a full multiplication
//! table over element indices is precomputed; subgroup closures, derived
//! series and pair-solvability tests then run entirely on small integers.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::Bitset;
use crate::perm::{Permutation, MAX_DEGREE};

/// Default bound on group order (covers S6 with headroom).
pub const DEFAULT_ORDER_CAP: usize = 5040;

/// Largest order for which the full index-by-index multiplication table is
/// built (u16 entries; 5040^2 entries is ~51 MB). Beyond this, products fall
/// back to composing image arrays plus an index lookup.
const MULT_TABLE_MAX_ORDER: usize = 5040;

/// Subgroups up to this size take the all-pairs commutator route in
/// [`PermGroup::derived_subgroup`]; larger ones use a generating set followed
/// by conjugation closure.
const DERIVED_ALL_PAIRS_MAX: usize = 256;

/// Index of an element in its group's element table. Index 0 is always the
/// identity.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementId(pub u32);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroupError {
    CapExceeded { cap: usize },
    DegreeTooLarge { degree: usize },
    MixedGeneratorDegrees,
    NotNormal,
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::CapExceeded { cap } => {
                write!(f, "group order exceeds the configured cap of {cap}")
            }
            GroupError::DegreeTooLarge { degree } => {
                write!(f, "degree {degree} exceeds the maximum of {MAX_DEGREE}")
            }
            GroupError::MixedGeneratorDegrees => {
                write!(f, "generators do not share a common degree")
            }
            GroupError::NotNormal => write!(f, "subgroup is not normal in the group"),
        }
    }
}

/// A finite permutation group, fully enumerated.
pub struct PermGroup {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: BTreeMap<Vec<u8>, u32>,
    inverses: Vec<u32>,
    /// Row-major `order * order` table of products, when built.
    mult: Option<Vec<u16>>,
}

impl PermGroup {
    /// Enumerates the group generated by `gens` on `degree` points.
    ///
    /// Enumeration aborts with [`GroupError::CapExceeded`] as soon as more
    /// than `cap` elements are found.
    pub fn from_generators(
        name: impl Into<String>,
        degree: usize,
        gens: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        if degree > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge { degree });
        }
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::MixedGeneratorDegrees);
        }

        // BFS closure from the identity, generator order fixed. parent/via
        // record how each element was first reached; the multiplication
        // table fill below exploits them.
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index: BTreeMap<Vec<u8>, u32> = BTreeMap::new();
        index.insert(identity.images().to_vec(), 0);
        let mut parent: Vec<u32> = vec![0];
        let mut via: Vec<u32> = vec![0];

        let mut head = 0usize;
        while head < elements.len() {
            for (gi, g) in gens.iter().enumerate() {
                let w = elements[head].compose(g);
                if !index.contains_key(w.images()) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    index.insert(w.images().to_vec(), elements.len() as u32);
                    elements.push(w);
                    parent.push(head as u32);
                    via.push(gi as u32);
                }
            }
            head += 1;
        }

        let order = elements.len();
        let mut inverses = vec![0u32; order];
        for (i, e) in elements.iter().enumerate() {
            inverses[i] = index[e.inverse().images()];
        }

        let mult = if order <= MULT_TABLE_MAX_ORDER {
            Some(build_mult_table(&elements, &index, &gens, &parent, &via))
        } else {
            None
        };

        Ok(PermGroup {
            name: name.into(),
            degree,
            generators: gens,
            elements,
            index,
            inverses,
            mult,
        })
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        PermGroup::from_generators("1", degree, Vec::new(), 1).expect("trivial group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, id: ElementId) -> &Permutation {
        &self.elements[id.index()]
    }

    pub fn identity_id(&self) -> ElementId {
        ElementId(0)
    }

    pub fn id_of(&self, p: &Permutation) -> Option<ElementId> {
        self.index.get(p.images()).map(|&i| ElementId(i))
    }

    pub fn generator_ids(&self) -> Vec<ElementId> {
        self.generators
            .iter()
            .map(|g| self.id_of(g).expect("generator is enumerated"))
            .collect()
    }

    /// Product `a * b` (apply `a` first, then `b`).
    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.mul_raw(a.0, b.0))
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        match &self.mult {
            Some(t) => t[a as usize * self.elements.len() + b as usize] as u32,
            None => {
                let p = self.elements[a as usize].compose(&self.elements[b as usize]);
                self.index[p.images()]
            }
        }
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        ElementId(self.inverses[a.index()])
    }

    #[inline]
    pub(crate) fn inv_raw(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// Conjugate `g^-1 * x * g`.
    pub fn conjugate(&self, x: ElementId, g: ElementId) -> ElementId {
        ElementId(self.conjugate_raw(x.0, g.0))
    }

    #[inline]
    pub(crate) fn conjugate_raw(&self, x: u32, g: u32) -> u32 {
        self.mul_raw(self.mul_raw(self.inv_raw(g), x), g)
    }

    /// Commutator `a^-1 * b^-1 * a * b`.
    pub fn commutator(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.commutator_raw(a.0, b.0))
    }

    #[inline]
    pub(crate) fn commutator_raw(&self, a: u32, b: u32) -> u32 {
        let ab = self.mul_raw(a, b);
        let ba = self.mul_raw(b, a);
        self.mul_raw(self.inv_raw(ba), ab)
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, x: ElementId) -> usize {
        let mut k = 1;
        let mut y = x.0;
        while y != 0 {
            y = self.mul_raw(y, x.0);
            k += 1;
        }
        k
    }

    /// Least `k >= 1` with `x^k` in the normal subgroup `n`, i.e. the order
    /// of the coset `x n` in the quotient.
    pub fn coset_order(&self, x: ElementId, n: &Subgroup) -> Result<usize, GroupError> {
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let mut k = 1;
        let mut y = x.0;
        while !n.mask.get(y as usize) {
            y = self.mul_raw(y, x.0);
            k += 1;
        }
        Ok(k)
    }

    /// All elements commuting with `u`. Always a subgroup.
    pub fn centralizer(&self, u: ElementId) -> Subgroup {
        let n = self.order();
        let mut ids = Vec::new();
        for v in 0..n as u32 {
            if self.mul_raw(u.0, v) == self.mul_raw(v, u.0) {
                ids.push(v);
            }
        }
        Subgroup::from_sorted_raw(ids, n)
    }

    /// Normality test: closure of `h` under conjugation by the group's
    /// generators suffices.
    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let gens = self.generator_ids();
        h.member_ids.iter().all(|&x| {
            gens.iter()
                .all(|&g| h.mask.get(self.conjugate_raw(x.0, g.0) as usize))
        })
    }

    /// Whether `n` is normal inside `h` (conjugation by every member of `h`
    /// keeps `n` fixed setwise).
    pub fn is_normal_in(&self, n: &Subgroup, h: &Subgroup) -> bool {
        h.member_ids.iter().all(|&g| {
            n.member_ids
                .iter()
                .all(|&x| n.mask.get(self.conjugate_raw(x.0, g.0) as usize))
        })
    }

    /// Smallest subgroup containing the seed elements.
    pub fn subgroup_closure(&self, seeds: &[ElementId]) -> Subgroup {
        let raw: Vec<u32> = seeds.iter().map(|s| s.0).collect();
        let mut ids = self.closure_ids(&raw);
        ids.sort_unstable();
        Subgroup::from_sorted_raw(ids, self.order())
    }

    /// BFS closure over element indices; result is in discovery order and
    /// always starts with the identity.
    pub(crate) fn closure_ids(&self, seeds: &[u32]) -> Vec<u32> {
        let mut mask = Bitset::new(self.order());
        let mut members = Vec::with_capacity(seeds.len() + 1);
        mask.set(0);
        members.push(0u32);
        for &s in seeds {
            if !mask.get(s as usize) {
                mask.set(s as usize);
                members.push(s);
            }
        }
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            for &s in seeds {
                let y = self.mul_raw(x, s);
                if !mask.get(y as usize) {
                    mask.set(y as usize);
                    members.push(y);
                }
            }
            head += 1;
        }
        members
    }

    /// Derived subgroup (commutator subgroup) of `h`.
    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let mut ids = self.derived_ids(&h.raw_ids());
        ids.sort_unstable();
        Subgroup::from_sorted_raw(ids, self.order())
    }

    /// Commutator subgroup over raw indices, unsorted.
    ///
    /// Small subgroups use commutators of all member pairs (their span is
    /// exactly the derived subgroup). Larger ones use commutators of a
    /// generating set, closed under conjugation by those generators, which
    /// is the normal closure in `h` of the generator commutators.
    pub(crate) fn derived_ids(&self, members: &[u32]) -> Vec<u32> {
        if members.len() <= DERIVED_ALL_PAIRS_MAX {
            let mut seen = Bitset::new(self.order());
            let mut seeds = Vec::new();
            for &a in members {
                for &b in members {
                    let c = self.commutator_raw(a, b);
                    if !seen.get(c as usize) {
                        seen.set(c as usize);
                        seeds.push(c);
                    }
                }
            }
            self.closure_ids(&seeds)
        } else {
            let gens = self.greedy_generators(members);
            let mut seen = Bitset::new(self.order());
            let mut seeds = Vec::new();
            for &a in &gens {
                for &b in &gens {
                    let c = self.commutator_raw(a, b);
                    if !seen.get(c as usize) {
                        seen.set(c as usize);
                        seeds.push(c);
                    }
                }
            }
            // Normal closure within h: re-close until conjugation by the
            // generators of h stays inside.
            loop {
                let closure = self.closure_ids(&seeds);
                let mut mask = Bitset::new(self.order());
                for &x in &closure {
                    mask.set(x as usize);
                }
                let mut grew = false;
                'scan: for &x in &closure {
                    for &g in &gens {
                        let c = self.conjugate_raw(x, g);
                        if !mask.get(c as usize) {
                            seeds.push(c);
                            grew = true;
                            break 'scan;
                        }
                    }
                }
                if !grew {
                    return closure;
                }
            }
        }
    }

    /// A small generating set for the subgroup given by `members`, found by
    /// scanning members in index order and keeping those outside the closure
    /// so far.
    pub(crate) fn greedy_generators(&self, members: &[u32]) -> Vec<u32> {
        let mut gens: Vec<u32> = Vec::new();
        let mut mask = Bitset::new(self.order());
        mask.set(0);
        for &m in members {
            if !mask.get(m as usize) {
                gens.push(m);
                mask.zero();
                for x in self.closure_ids(&gens) {
                    mask.set(x as usize);
                }
            }
        }
        gens
    }

    /// Solvability via the derived series: the series strictly decreases in
    /// order until it stabilizes, and the group is solvable exactly when the
    /// fixed point is trivial.
    pub fn is_solvable_subgroup(&self, h: &Subgroup) -> bool {
        self.is_solvable_ids(&h.raw_ids())
    }

    pub(crate) fn is_solvable_ids(&self, members: &[u32]) -> bool {
        let mut cur: Vec<u32> = members.to_vec();
        loop {
            if cur.len() == 1 {
                return true;
            }
            let next = self.derived_ids(&cur);
            if next.len() == cur.len() {
                // Perfect and nontrivial.
                return false;
            }
            cur = next;
        }
    }

    pub fn is_solvable(&self) -> bool {
        let all: Vec<u32> = (0..self.order() as u32).collect();
        self.is_solvable_ids(&all)
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted_raw((0..self.order() as u32).collect(), self.order())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted_raw(vec![0], self.order())
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

/// Fills the order x order product table using the BFS structure: every
/// non-generator element factors as `parent * generator`, so its column
/// follows from an already-filled column with two table reads per cell.
fn build_mult_table(
    elements: &[Permutation],
    index: &BTreeMap<Vec<u8>, u32>,
    gens: &[Permutation],
    parent: &[u32],
    via: &[u32],
) -> Vec<u16> {
    let n = elements.len();
    debug_assert!(n <= u16::MAX as usize);
    let gen_ids: Vec<u32> = gens.iter().map(|g| index[g.images()]).collect();
    let mut t = vec![0u16; n * n];
    // Column 0 is the identity.
    for a in 0..n {
        t[a * n] = a as u16;
    }
    for b in 1..n {
        if parent[b] == 0 {
            // b was reached directly from the identity: compute its column
            // by composition.
            for a in 0..n {
                let p = elements[a].compose(&elements[b]);
                t[a * n + b] = index[p.images()] as u16;
            }
        } else {
            let pb = parent[b] as usize;
            let gcol = gen_ids[via[b] as usize] as usize;
            debug_assert!(pb < b && gcol < b);
            for a in 0..n {
                let ap = t[a * n + pb] as usize;
                t[a * n + b] = t[ap * n + gcol];
            }
        }
    }
    t
}

/// A subgroup of a [`PermGroup`], stored as sorted element indices plus a
/// membership mask. Operations that need the parent group take it as an
/// explicit argument.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    member_ids: Vec<ElementId>,
    mask: Bitset,
}

impl Subgroup {
    fn from_sorted_raw(ids: Vec<u32>, group_order: usize) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(group_order % ids.len().max(1), 0, "Lagrange violated");
        let mut mask = Bitset::new(group_order);
        for &i in &ids {
            mask.set(i as usize);
        }
        Subgroup {
            member_ids: ids.into_iter().map(ElementId).collect(),
            mask,
        }
    }

    /// Builds from element ids (need not be sorted); intended for members
    /// already known to form a subgroup.
    pub fn from_ids(mut ids: Vec<ElementId>, group_order: usize) -> Self {
        ids.sort_unstable();
        ids.dedup();
        Subgroup::from_sorted_raw(ids.into_iter().map(|i| i.0).collect(), group_order)
    }

    pub fn order(&self) -> usize {
        self.member_ids.len()
    }

    pub fn members(&self) -> &[ElementId] {
        &self.member_ids
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.mask.get(id.index())
    }

    pub fn mask(&self) -> &Bitset {
        &self.mask
    }

    pub fn is_trivial(&self) -> bool {
        self.member_ids.len() == 1
    }

    pub(crate) fn raw_ids(&self) -> Vec<u32> {
        self.member_ids.iter().map(|i| i.0).collect()
    }

    /// Size of the intersection with another subgroup of the same parent.
    pub fn intersection_order(&self, other: &Subgroup) -> usize {
        self.mask.intersection_count(&other.mask)
    }
}

/// Direct product acting on the disjoint union of the factors' points.
pub fn direct_product(a: &PermGroup, b: &PermGroup, cap: usize) -> Result<PermGroup, GroupError> {
    let degree = a.degree() + b.degree();
    if degree > MAX_DEGREE {
        return Err(GroupError::DegreeTooLarge { degree });
    }
    let mut gens = Vec::with_capacity(a.generators().len() + b.generators().len());
    for g in a.generators() {
        gens.push(g.embed(0, degree));
    }
    for g in b.generators() {
        gens.push(g.embed(a.degree(), degree));
    }
    let name = alloc::format!("{}x{}", a.name(), b.name());
    let product = PermGroup::from_generators(name, degree, gens, cap)?;
    assert_eq!(
        product.order(),
        a.order() * b.order(),
        "direct product order mismatch (internal error)"
    );
    Ok(product)
}

impl PermGroup {
    /// Convenience used across tests and the radical validation: checks that
    /// a set of ids is closed under the group operation.
    pub fn is_closed(&self, members: &Subgroup) -> bool {
        for &a in &members.member_ids {
            for &b in &members.member_ids {
                if !members.mask.get(self.mul_raw(a.0, b.0) as usize) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn s3() -> PermGroup {
        let gens = vec![
            Permutation::from_cycles(3, &[vec![0, 1]]).unwrap(),
            Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
        ];
        PermGroup::from_generators("S3", 3, gens, DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn s3_enumerates_to_six() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.identity_id(), ElementId(0));
        assert!(g.element(ElementId(0)).is_identity());
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = PermGroup::trivial(4);
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn single_transposition() {
        let gens = vec![Permutation::from_cycles(2, &[vec![0, 1]]).unwrap()];
        let g = PermGroup::from_generators("C2", 2, gens, 100).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn mult_table_matches_composition() {
        let g = s3();
        for a in 0..g.order() as u32 {
            for b in 0..g.order() as u32 {
                let via_table = g.mul(ElementId(a), ElementId(b));
                let composed = g.element(ElementId(a)).compose(g.element(ElementId(b)));
                assert_eq!(g.id_of(&composed), Some(via_table));
            }
        }
    }

    #[test]
    fn inverses_are_inverses() {
        let g = s3();
        for a in 0..g.order() as u32 {
            let a = ElementId(a);
            assert_eq!(g.mul(a, g.inv(a)), g.identity_id());
        }
    }

    #[test]
    fn derived_subgroup_of_s3_is_c3() {
        let g = s3();
        let derived = g.derived_subgroup(&g.full_subgroup());
        assert_eq!(derived.order(), 3);
        assert!(g.is_normal(&derived));
    }

    #[test]
    fn s3_is_solvable() {
        let g = s3();
        assert!(g.is_solvable());
    }

    #[test]
    fn abelian_subgroup_has_trivial_derived() {
        let g = s3();
        let rot = g
            .id_of(&Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap())
            .unwrap();
        let c3 = g.subgroup_closure(&[rot]);
        assert_eq!(c3.order(), 3);
        assert!(g.derived_subgroup(&c3).is_trivial());
    }

    #[test]
    fn transposition_not_normal_in_s3() {
        let g = s3();
        let t = g
            .id_of(&Permutation::from_cycles(3, &[vec![0, 1]]).unwrap())
            .unwrap();
        let h = g.subgroup_closure(&[t]);
        assert_eq!(h.order(), 2);
        assert!(!g.is_normal(&h));
    }

    #[test]
    fn centralizer_of_transposition_in_s3() {
        let g = s3();
        let t = g
            .id_of(&Permutation::from_cycles(3, &[vec![0, 1]]).unwrap())
            .unwrap();
        assert_eq!(g.centralizer(t).order(), 2);
    }

    #[test]
    fn coset_order_with_trivial_subgroup_is_element_order() {
        let g = s3();
        let t = g
            .id_of(&Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap())
            .unwrap();
        let triv = g.trivial_subgroup();
        assert_eq!(g.coset_order(t, &triv).unwrap(), 3);
        assert_eq!(g.element_order(t), 3);
        assert_eq!(g.coset_order(g.identity_id(), &triv).unwrap(), 1);
    }

    #[test]
    fn coset_order_rejects_non_normal() {
        let g = s3();
        let t = g
            .id_of(&Permutation::from_cycles(3, &[vec![0, 1]]).unwrap())
            .unwrap();
        let h = g.subgroup_closure(&[t]);
        assert_eq!(g.coset_order(t, &h), Err(GroupError::NotNormal));
    }

    #[test]
    fn groups_and_subgroups_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<PermGroup>();
        assert_send_sync::<Subgroup>();
    }

    #[test]
    fn cap_is_enforced() {
        let gens = vec![
            Permutation::from_cycles(3, &[vec![0, 1]]).unwrap(),
            Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
        ];
        assert_eq!(
            PermGroup::from_generators("S3", 3, gens, 5).unwrap_err(),
            GroupError::CapExceeded { cap: 5 }
        );
    }
}
