//! Solvability degree `P_s(G)`, commuting probability `Pr(G)`, and the
//! identities connecting them to the solvable graph.
//!
//! All probabilities are exact rationals; the integrality, equality, and
//! identity checks are exact statements and floats would be unable to
//! witness them. `P_s` is computed by two routes that must agree: the
//! solvabilizer-sum formula `sum |Sol_G(u)| / |G|^2` read off the pair
//! matrix, and a direct ordered-pair count through fresh closures.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::group::{ElementId, PermGroup, Subgroup};
use crate::solvgraph::{pair_solvable, PairMatrix, SolvCache, SolvableGraph};

/// Exact rational number in canonical reduced form (positive denominator,
/// gcd 1), arbitrary precision.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rational(BigRational);

impl Rational {
    pub fn from_integer(n: u64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0);
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn add(&self, other: &Rational) -> Rational {
        Rational(&self.0 + &other.0)
    }

    pub fn mul_integer(&self, n: u64) -> Rational {
        Rational(&self.0 * BigInt::from(n))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Decimal expansion to `places` digits, rounded half away from zero.
    /// Display only; comparisons always go through the exact value.
    pub fn approx_decimal(&self, places: u32) -> String {
        let scale = BigInt::from(10u32).pow(places);
        let scaled = &self.0 * &scale;
        let twice = scaled.numer() * 2i32 + scaled.denom() * scaled.numer().signum();
        let rounded = twice / (scaled.denom() * 2i32);
        let negative = rounded.is_negative();
        let digits = rounded.abs().to_string();
        let digits = if digits.len() <= places as usize {
            let mut s = String::new();
            for _ in 0..(places as usize + 1 - digits.len()) {
                s.push('0');
            }
            s + &digits
        } else {
            digits
        };
        let split = digits.len() - places as usize;
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&digits[..split]);
        if places > 0 {
            out.push('.');
            out.push_str(&digits[split..]);
        }
        out
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Ceiling for `P_s` over non-solvable groups, attained at A5.
pub fn nonsolvable_ps_ceiling() -> Rational {
    Rational::new(11, 30)
}

/// The two `P_s` computation routes disagreed; carries rendered values for
/// diagnostics.
#[derive(Clone, Debug)]
pub struct TwoRouteMismatch {
    pub by_sum: String,
    pub by_pairs: String,
}

impl fmt::Display for TwoRouteMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "solvability degree routes disagree: {} by solvabilizer sum, {} by pair count (bug)",
            self.by_sum, self.by_pairs
        )
    }
}

/// `P_s` by the solvabilizer-sum formula, read off the pair matrix.
pub fn ps_by_solvabilizer_sum(group: &PermGroup, matrix: &PairMatrix) -> Rational {
    let n = group.order() as u64;
    Rational::new(matrix.total_solvable_pairs(), n * n)
}

/// `P_s` by direct ordered-pair counting with fresh closures and a fresh
/// cache, independent of any prebuilt matrix.
pub fn ps_by_pair_count(group: &PermGroup) -> Rational {
    let n = group.order();
    let mut cache = SolvCache::new();
    let mut count: u64 = 0;
    for u in 0..n as u32 {
        for v in u..n as u32 {
            if pair_solvable(group, ElementId(u), ElementId(v), &mut cache) {
                count += if u == v { 1 } else { 2 };
            }
        }
    }
    Rational::new(count, (n * n) as u64)
}

/// Solvability degree computed by both routes; they must agree.
pub fn solvability_degree(
    group: &PermGroup,
    matrix: &PairMatrix,
) -> Result<Rational, TwoRouteMismatch> {
    let by_sum = ps_by_solvabilizer_sum(group, matrix);
    let by_pairs = ps_by_pair_count(group);
    if by_sum != by_pairs {
        return Err(TwoRouteMismatch {
            by_sum: by_sum.to_string(),
            by_pairs: by_pairs.to_string(),
        });
    }
    Ok(by_sum)
}

/// Per-element centralizer orders.
pub fn centralizer_sizes(group: &PermGroup) -> Vec<usize> {
    let n = group.order();
    let mut sizes = alloc::vec![0usize; n];
    for u in 0..n as u32 {
        for v in u..n as u32 {
            if group.mul(ElementId(u), ElementId(v)) == group.mul(ElementId(v), ElementId(u)) {
                sizes[u as usize] += 1;
                if u != v {
                    sizes[v as usize] += 1;
                }
            }
        }
    }
    sizes
}

/// Commuting probability `Pr(G) = sum |C_G(u)| / |G|^2`.
pub fn commuting_probability(group: &PermGroup) -> Rational {
    let n = group.order() as u64;
    let total: u64 = centralizer_sizes(group).iter().map(|&s| s as u64).sum();
    Rational::new(total, n * n)
}

/// All the probabilistic checks for one group. Every flag is recomputed
/// from both sides of its statement.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeReport {
    pub ps: Rational,
    pub pr: Rational,
    pub sum_solvabilizers: u64,
    pub solvable: bool,
    /// `|G| * P_s(G)` is an integer.
    pub integrality_ok: bool,
    /// `P_s >= |Sol|/|G| + 2(|G| - |Sol|)/|G|^2`.
    pub lower_bound_ok: bool,
    pub ps_ge_pr_ok: bool,
    pub ps_eq_pr: bool,
    /// `C_G(u) = Sol_G(u)` for every `u` (checked by sizes; the centralizer
    /// is always contained in the solvabilizer).
    pub centralizers_match_solvabilizers: bool,
    /// The sound equality characterization: `P_s = Pr` holds exactly when
    /// the centralizers match the solvabilizers pointwise.
    pub equality_characterization_ok: bool,
    /// The equality statement read literally (`P_s = Pr` iff solvable);
    /// false for solvable non-abelian groups, recorded rather than gated.
    pub literal_equality_reading_ok: bool,
    /// Every solvabilizer is a subgroup exactly when the group is solvable.
    pub sgroup_criterion_ok: bool,
    /// `P_s <= 11/30`; only meaningful for non-solvable groups.
    pub ceiling_ok: Option<bool>,
    /// `2|E| = |G|^2 P_s + |Sol|^2 + |Sol| - |G|(2|Sol| + 1)` in exact
    /// integers; needs the graph.
    pub edge_identity_ok: Option<bool>,
}

/// Whether the solvabilizer of `u` (a row of the matrix) is closed under
/// the group operation. A finite nonempty subset closed under products is a
/// subgroup.
fn solvabilizer_is_subgroup(group: &PermGroup, matrix: &PairMatrix, u: ElementId) -> bool {
    let row = matrix.row(u);
    let members: Vec<u32> = row.ones().map(|i| i as u32).collect();
    for &a in &members {
        for &b in &members {
            if !row.get(group.mul(ElementId(a), ElementId(b)).index()) {
                return false;
            }
        }
    }
    true
}

pub fn degree_report(
    group: &PermGroup,
    matrix: &PairMatrix,
    radical: &Subgroup,
    graph: Option<&SolvableGraph>,
) -> Result<DegreeReport, TwoRouteMismatch> {
    let n = group.order() as u64;
    let s = radical.order() as u64;
    let solvable = s == n;

    let ps = solvability_degree(group, matrix)?;
    let pr = commuting_probability(group);
    let sum_solvabilizers = matrix.total_solvable_pairs();

    let integrality_ok = sum_solvabilizers.is_multiple_of(n);
    let lower_bound = Rational::new(s * n + 2 * (n - s), n * n);
    let lower_bound_ok = ps >= lower_bound;
    let ps_ge_pr_ok = ps >= pr;
    let ps_eq_pr = ps == pr;

    let centralizer_sizes = centralizer_sizes(group);
    let centralizers_match_solvabilizers = (0..group.order()).all(|u| {
        centralizer_sizes[u] == matrix.solvabilizer_size(ElementId(u as u32))
    });
    let equality_characterization_ok = ps_eq_pr == centralizers_match_solvabilizers;
    let literal_equality_reading_ok = ps_eq_pr == solvable;

    let all_solvabilizers_subgroups = (0..group.order() as u32)
        .all(|u| solvabilizer_is_subgroup(group, matrix, ElementId(u)));
    let sgroup_criterion_ok = all_solvabilizers_subgroups == solvable;

    let ceiling_ok = (!solvable).then(|| ps <= nonsolvable_ps_ceiling());

    let edge_identity_ok = graph.map(|sg| {
        let e = sg.edge_count() as i128;
        let sum = sum_solvabilizers as i128; // |G|^2 P_s exactly
        let (n, s) = (n as i128, s as i128);
        2 * e == sum + s * s + s - n * (2 * s + 1)
    });

    Ok(DegreeReport {
        ps,
        pr,
        sum_solvabilizers,
        solvable,
        integrality_ok,
        lower_bound_ok,
        ps_ge_pr_ok,
        ps_eq_pr,
        centralizers_match_solvabilizers,
        equality_characterization_ok,
        literal_equality_reading_ok,
        sgroup_criterion_ok,
        ceiling_ok,
        edge_identity_ok,
    })
}
