//! The group-spec grammar and the constructor catalogue.
//!
//! Grammar (exact):
//!
//! ```text
//! atom := "A"n | "S"n | "C"n | "D"n          (D has order 2n, n >= 3)
//!       | "SL(2,"q")" | "GL(2,"q")"          (q in {2, 3, 4, 5, 7})
//!       | "PSL(3,2)"
//!       | "perm:"cycles(";"cycles)*          (1-based points, space separated)
//! spec := atom ("x" atom)*
//! ```
//!
//! Matrix atoms are realized as the permutation action on the nonzero
//! vectors of the natural module; the resulting order is asserted against
//! the closed-form count, which also certifies the action is faithful.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::group::{direct_product, GroupError, PermGroup};
use crate::perm::{Permutation, MAX_DEGREE};

/// Field orders for which SL(2,q) and GL(2,q) constructors are available.
pub const SUPPORTED_FIELD_ORDERS: [usize; 5] = [2, 3, 4, 5, 7];

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroupAtom {
    Alternating(usize),
    Symmetric(usize),
    Cyclic(usize),
    Dihedral(usize),
    SpecialLinear2(usize),
    GeneralLinear2(usize),
    ProjectiveSpecialLinear32,
    RawPerms {
        degree: usize,
        generators: Vec<Permutation>,
    },
}

/// A parsed constructor tree: one or more atoms combined by direct product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupSpec {
    pub atoms: Vec<GroupAtom>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    /// Byte offset into the spec text where the problem starts.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at position {})", self.message, self.position)
    }
}

impl GroupAtom {
    pub fn canonical_name(&self) -> String {
        match self {
            GroupAtom::Alternating(n) => format!("A{n}"),
            GroupAtom::Symmetric(n) => format!("S{n}"),
            GroupAtom::Cyclic(n) => format!("C{n}"),
            GroupAtom::Dihedral(n) => format!("D{n}"),
            GroupAtom::SpecialLinear2(q) => format!("SL(2,{q})"),
            GroupAtom::GeneralLinear2(q) => format!("GL(2,{q})"),
            GroupAtom::ProjectiveSpecialLinear32 => "PSL(3,2)".to_string(),
            GroupAtom::RawPerms { generators, .. } => {
                let gens: Vec<String> = generators.iter().map(|g| g.cycle_notation()).collect();
                format!("perm:{}", gens.join(";"))
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            GroupAtom::Alternating(n) | GroupAtom::Symmetric(n) | GroupAtom::Cyclic(n) => *n,
            GroupAtom::Dihedral(n) => *n,
            GroupAtom::SpecialLinear2(q) | GroupAtom::GeneralLinear2(q) => q * q - 1,
            GroupAtom::ProjectiveSpecialLinear32 => 7,
            GroupAtom::RawPerms { degree, .. } => *degree,
        }
    }

    /// Closed-form order, when known in advance.
    pub fn predicted_order(&self) -> Option<u128> {
        match self {
            GroupAtom::Alternating(n) => Some(if *n < 2 { 1 } else { factorial(*n)? / 2 }),
            GroupAtom::Symmetric(n) => factorial(*n),
            GroupAtom::Cyclic(n) => Some(*n as u128),
            GroupAtom::Dihedral(n) => Some(2 * *n as u128),
            GroupAtom::SpecialLinear2(q) => {
                let q = *q as u128;
                Some(q * (q - 1) * (q + 1))
            }
            GroupAtom::GeneralLinear2(q) => {
                let q = *q as u128;
                Some((q * q - 1) * (q * q - q))
            }
            GroupAtom::ProjectiveSpecialLinear32 => Some(168),
            GroupAtom::RawPerms { .. } => None,
        }
    }
}

impl GroupSpec {
    pub fn canonical_name(&self) -> String {
        let names: Vec<String> = self.atoms.iter().map(|a| a.canonical_name()).collect();
        names.join("x")
    }

    pub fn degree(&self) -> usize {
        self.atoms.iter().map(|a| a.degree()).sum()
    }

    pub fn predicted_order(&self) -> Option<u128> {
        self.atoms
            .iter()
            .try_fold(1u128, |acc, a| acc.checked_mul(a.predicted_order()?))
    }
}

fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Parses a spec string like `"A5xC2"` or `"perm:(1 2 3 4 5);(1 2 3)"`.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let trimmed_start = text.len() - text.trim_start().len();
    let body = text.trim();
    if body.is_empty() {
        return Err(ParseError {
            position: 0,
            message: "empty group spec".to_string(),
        });
    }
    let mut atoms = Vec::new();
    let mut depth = 0usize;
    let mut seg_start = 0usize;
    let bytes = body.as_bytes();
    for (i, &c) in bytes.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => {
                if depth == 0 {
                    return Err(ParseError {
                        position: trimmed_start + i,
                        message: "unmatched ')'".to_string(),
                    });
                }
                depth -= 1;
            }
            b'x' if depth == 0 => {
                atoms.push(parse_atom(&body[seg_start..i], trimmed_start + seg_start)?);
                seg_start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(ParseError {
            position: trimmed_start + body.len(),
            message: "unmatched '('".to_string(),
        });
    }
    atoms.push(parse_atom(&body[seg_start..], trimmed_start + seg_start)?);
    Ok(GroupSpec { atoms })
}

fn parse_atom(segment: &str, offset: usize) -> Result<GroupAtom, ParseError> {
    let lead = segment.len() - segment.trim_start().len();
    let offset = offset + lead;
    let s = segment.trim();
    if s.is_empty() {
        return Err(ParseError {
            position: offset,
            message: "empty atom".to_string(),
        });
    }
    if s == "PSL(3,2)" {
        return Ok(GroupAtom::ProjectiveSpecialLinear32);
    }
    if let Some(rest) = s.strip_prefix("perm:") {
        return parse_perm_atom(rest, offset + 5);
    }
    for (prefix, kind) in [("SL(2,", Kind::Sl), ("GL(2,", Kind::Gl)] {
        if let Some(rest) = s.strip_prefix(prefix) {
            let Some(qs) = rest.strip_suffix(')') else {
                return Err(ParseError {
                    position: offset + s.len(),
                    message: "expected ')' to close the field order".to_string(),
                });
            };
            let q: usize = qs.parse().map_err(|_| ParseError {
                position: offset + prefix.len(),
                message: format!("invalid field order '{qs}'"),
            })?;
            if !SUPPORTED_FIELD_ORDERS.contains(&q) {
                return Err(ParseError {
                    position: offset + prefix.len(),
                    message: format!(
                        "unsupported field order {q}; supported: {SUPPORTED_FIELD_ORDERS:?}"
                    ),
                });
            }
            return Ok(match kind {
                Kind::Sl => GroupAtom::SpecialLinear2(q),
                Kind::Gl => GroupAtom::GeneralLinear2(q),
            });
        }
    }
    let mut chars = s.chars();
    let head = chars.next().unwrap();
    if matches!(head, 'A' | 'S' | 'C' | 'D') {
        let digits = &s[1..];
        if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
            let n: usize = digits.parse().map_err(|_| ParseError {
                position: offset + 1,
                message: format!("parameter '{digits}' out of range"),
            })?;
            if n == 0 {
                return Err(ParseError {
                    position: offset + 1,
                    message: "parameter must be at least 1".to_string(),
                });
            }
            if head == 'D' && n < 3 {
                return Err(ParseError {
                    position: offset + 1,
                    message: "dihedral atoms require n >= 3".to_string(),
                });
            }
            let atom = match head {
                'A' => GroupAtom::Alternating(n),
                'S' => GroupAtom::Symmetric(n),
                'C' => GroupAtom::Cyclic(n),
                _ => GroupAtom::Dihedral(n),
            };
            if atom.degree() > MAX_DEGREE {
                return Err(ParseError {
                    position: offset + 1,
                    message: format!("degree {} exceeds the maximum of {MAX_DEGREE}", atom.degree()),
                });
            }
            return Ok(atom);
        }
    }
    Err(ParseError {
        position: offset,
        message: format!("unknown atom '{s}'"),
    })
}

enum Kind {
    Sl,
    Gl,
}

/// Parses `";"`-separated generators, each a sequence of parenthesized
/// cycles over 1-based points.
fn parse_perm_atom(body: &str, offset: usize) -> Result<GroupAtom, ParseError> {
    let mut generators_cycles: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut max_point = 0usize;
    let mut pos = 0usize;
    for gen_text in body.split(';') {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let bytes = gen_text.as_bytes();
        let mut i = 0usize;
        while i < bytes.len() {
            match bytes[i] {
                b' ' => i += 1,
                b'(' => {
                    let close = gen_text[i..].find(')').ok_or(ParseError {
                        position: offset + pos + i,
                        message: "unclosed cycle".to_string(),
                    })? + i;
                    let mut cycle = Vec::new();
                    for tok in gen_text[i + 1..close].split_whitespace() {
                        let p: usize = tok.parse().map_err(|_| ParseError {
                            position: offset + pos + i,
                            message: format!("invalid point '{tok}'"),
                        })?;
                        if p == 0 {
                            return Err(ParseError {
                                position: offset + pos + i,
                                message: "points are 1-based".to_string(),
                            });
                        }
                        if p > MAX_DEGREE {
                            return Err(ParseError {
                                position: offset + pos + i,
                                message: format!("point {p} exceeds the maximum of {MAX_DEGREE}"),
                            });
                        }
                        max_point = max_point.max(p);
                        cycle.push(p - 1);
                    }
                    if !cycle.is_empty() {
                        cycles.push(cycle);
                    }
                    i = close + 1;
                }
                _ => {
                    return Err(ParseError {
                        position: offset + pos + i,
                        message: format!("unexpected character '{}'", gen_text[i..].chars().next().unwrap()),
                    });
                }
            }
        }
        if cycles.is_empty() {
            return Err(ParseError {
                position: offset + pos,
                message: "generator has no cycles".to_string(),
            });
        }
        generators_cycles.push(cycles);
        pos += gen_text.len() + 1;
    }
    let degree = max_point;
    let mut generators = Vec::new();
    for cycles in &generators_cycles {
        let p = Permutation::from_cycles(degree, cycles).map_err(|e| ParseError {
            position: offset,
            message: e.to_string(),
        })?;
        generators.push(p);
    }
    Ok(GroupAtom::RawPerms { degree, generators })
}

// ---------------------------------------------------------------------------
// Arithmetic in the small fields GF(q), q in {2, 3, 4, 5, 7}
// ---------------------------------------------------------------------------

struct Gf {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl Gf {
    fn new(q: usize) -> Gf {
        assert!(SUPPORTED_FIELD_ORDERS.contains(&q));
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        if q == 4 {
            // GF(4) in the polynomial basis of x^2 + x + 1: elements are
            // bit pairs b1*x + b0; addition is xor.
            for a in 0..4usize {
                for b in 0..4usize {
                    add[a * 4 + b] = (a ^ b) as u8;
                    let (a1, a0) = (a >> 1 & 1, a & 1);
                    let (b1, b0) = (b >> 1 & 1, b & 1);
                    let x2 = a1 & b1;
                    let x1 = (a1 & b0) ^ (a0 & b1) ^ x2;
                    let x0 = (a0 & b0) ^ x2;
                    mul[a * 4 + b] = ((x1 << 1) | x0) as u8;
                }
            }
        } else {
            for a in 0..q {
                for b in 0..q {
                    add[a * q + b] = ((a + b) % q) as u8;
                    mul[a * q + b] = ((a * b) % q) as u8;
                }
            }
        }
        Gf { q, add, mul }
    }

    #[inline]
    fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    /// A generator of the multiplicative group.
    fn primitive(&self) -> u8 {
        match self.q {
            2 => 1,
            3 => 2,
            4 => 2, // x
            5 => 2,
            7 => 3,
            _ => unreachable!(),
        }
    }
}

/// Turns a k x k matrix over GF(q) into the permutation of the q^k - 1
/// nonzero column vectors, enumerated lexicographically.
fn matrix_to_permutation(gf: &Gf, k: usize, m: &[u8]) -> Permutation {
    let q = gf.q;
    let count = q.pow(k as u32);
    // vec index <-> point translation, skipping the zero vector.
    let mut images = Vec::with_capacity(count - 1);
    for code in 1..count {
        let mut v = vec![0u8; k];
        let mut c = code;
        for i in (0..k).rev() {
            v[i] = (c % q) as u8;
            c /= q;
        }
        let mut w = vec![0u8; k];
        for (r, wr) in w.iter_mut().enumerate() {
            let mut acc = 0u8;
            for c in 0..k {
                acc = gf.add(acc, gf.mul(m[r * k + c], v[c]));
            }
            *wr = acc;
        }
        let mut wcode = 0usize;
        for &x in &w {
            wcode = wcode * q + x as usize;
        }
        debug_assert!(wcode != 0, "invertible matrix sent a nonzero vector to zero");
        images.push((wcode - 1) as u8);
    }
    Permutation::from_images(images).expect("matrix action is a bijection")
}

fn sl2_generators(gf: &Gf) -> Vec<Permutation> {
    // Transvections generate SL(2,q); for q = 4 both basis elements of the
    // additive group are needed.
    let mut entries: Vec<u8> = vec![1];
    if gf.q == 4 {
        entries.push(2);
    }
    let mut gens = Vec::new();
    for &a in &entries {
        gens.push(matrix_to_permutation(gf, 2, &[1, a, 0, 1]));
        gens.push(matrix_to_permutation(gf, 2, &[1, 0, a, 1]));
    }
    gens
}

fn gl2_generators(gf: &Gf) -> Vec<Permutation> {
    let mut gens = sl2_generators(gf);
    gens.push(matrix_to_permutation(gf, 2, &[gf.primitive(), 0, 0, 1]));
    gens
}

fn gl32_generators() -> Vec<Permutation> {
    let gf = Gf::new(2);
    let mut gens = Vec::new();
    // All elementary transvections I + E_ij over GF(2).
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut m = [0u8; 9];
                m[0] = 1;
                m[4] = 1;
                m[8] = 1;
                m[i * 3 + j] = 1;
                gens.push(matrix_to_permutation(&gf, 3, &m));
            }
        }
    }
    gens
}

// ---------------------------------------------------------------------------
// Building
// ---------------------------------------------------------------------------

fn atom_generators(atom: &GroupAtom) -> (usize, Vec<Permutation>) {
    match atom {
        GroupAtom::Alternating(n) => {
            let n = *n;
            let mut gens = Vec::new();
            if n >= 3 {
                gens.push(Permutation::from_cycles(n, &[vec![0, 1, 2]]).unwrap());
            }
            if n >= 4 {
                let cycle: Vec<usize> = if n % 2 == 1 {
                    (0..n).collect()
                } else {
                    (1..n).collect()
                };
                gens.push(Permutation::from_cycles(n, &[cycle]).unwrap());
            }
            (n, gens)
        }
        GroupAtom::Symmetric(n) => {
            let n = *n;
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(Permutation::from_cycles(n, &[vec![0, 1]]).unwrap());
            }
            if n >= 3 {
                gens.push(Permutation::from_cycles(n, &[(0..n).collect()]).unwrap());
            }
            (n, gens)
        }
        GroupAtom::Cyclic(n) => {
            let n = *n;
            let gens = if n >= 2 {
                vec![Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()]
            } else {
                Vec::new()
            };
            (n, gens)
        }
        GroupAtom::Dihedral(n) => {
            let n = *n;
            let rotation = Permutation::from_cycles(n, &[(0..n).collect()]).unwrap();
            let mut images: Vec<u8> = vec![0; n];
            for (i, im) in images.iter_mut().enumerate() {
                *im = ((n - i) % n) as u8;
            }
            let reflection = Permutation::from_images(images).unwrap();
            (n, vec![rotation, reflection])
        }
        GroupAtom::SpecialLinear2(q) => {
            let gf = Gf::new(*q);
            (q * q - 1, sl2_generators(&gf))
        }
        GroupAtom::GeneralLinear2(q) => {
            let gf = Gf::new(*q);
            (q * q - 1, gl2_generators(&gf))
        }
        GroupAtom::ProjectiveSpecialLinear32 => (7, gl32_generators()),
        GroupAtom::RawPerms { degree, generators } => (*degree, generators.clone()),
    }
}

fn build_atom(atom: &GroupAtom, cap: usize) -> Result<PermGroup, GroupError> {
    if let Some(order) = atom.predicted_order() {
        if order > cap as u128 {
            return Err(GroupError::CapExceeded { cap });
        }
    }
    let (degree, gens) = atom_generators(atom);
    let g = PermGroup::from_generators(atom.canonical_name(), degree, gens, cap)?;
    if let Some(order) = atom.predicted_order() {
        // Also certifies faithfulness of the matrix actions: a kernel would
        // collapse the enumerated order below the closed form.
        assert_eq!(
            g.order() as u128,
            order,
            "internal error: {} enumerated to order {}, expected {order}",
            atom.canonical_name(),
            g.order()
        );
    }
    assert!(
        g.elements()
            .iter()
            .enumerate()
            .all(|(i, e)| (i == 0) == e.is_identity()),
        "internal error: non-identity element fixes all points"
    );
    Ok(g)
}

/// Builds the fully enumerated group described by `spec`.
pub fn build_group(spec: &GroupSpec, cap: usize) -> Result<PermGroup, GroupError> {
    if let Some(order) = spec.predicted_order() {
        if order > cap as u128 {
            return Err(GroupError::CapExceeded { cap });
        }
    }
    let mut iter = spec.atoms.iter();
    let first = iter.next().expect("parser guarantees at least one atom");
    let mut g = build_atom(first, cap)?;
    for atom in iter {
        let h = build_atom(atom, cap)?;
        g = direct_product(&g, &h, cap)?;
    }
    Ok(g)
}
