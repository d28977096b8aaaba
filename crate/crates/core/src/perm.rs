//! Permutations on `{0, .., degree-1}` stored as image arrays.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Hard cap on the number of moved points. Image arrays stay byte-sized and
/// cache friendly below this.
pub const MAX_DEGREE: usize = 128;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<u8>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PermError {
    DegreeTooLarge { degree: usize },
    NotBijective,
    PointOutOfRange { point: usize, degree: usize },
    RepeatedPoint { point: usize },
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::DegreeTooLarge { degree } => {
                write!(f, "degree {degree} exceeds the maximum of {MAX_DEGREE}")
            }
            PermError::NotBijective => write!(f, "image array is not a bijection"),
            PermError::PointOutOfRange { point, degree } => {
                write!(f, "point {point} out of range for degree {degree}")
            }
            PermError::RepeatedPoint { point } => {
                write!(f, "point {point} appears twice in one generator")
            }
        }
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        debug_assert!(degree <= MAX_DEGREE);
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from its image array, validating bijectivity.
    pub fn from_images(images: Vec<u8>) -> Result<Self, PermError> {
        let degree = images.len();
        if degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge { degree });
        }
        let mut seen = [false; MAX_DEGREE];
        for &im in &images {
            if (im as usize) >= degree || seen[im as usize] {
                return Err(PermError::NotBijective);
            }
            seen[im as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `degree` points from disjoint cycles given in
    /// 0-based points. A point repeated across the cycles is rejected.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        if degree > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge { degree });
        }
        let mut images: Vec<u8> = (0..degree as u8).collect();
        let mut seen = [false; MAX_DEGREE];
        for cycle in cycles {
            for &p in cycle {
                if p >= degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if seen[p] {
                    return Err(PermError::RepeatedPoint { point: p });
                }
                seen[p] = true;
            }
            for i in 0..cycle.len() {
                let from = cycle[i];
                let to = cycle[(i + 1) % cycle.len()];
                images[from] = to as u8;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im as usize)
    }

    /// Applies `self` first and `then` second.
    pub fn compose(&self, then: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), then.degree());
        Permutation {
            images: self.images.iter().map(|&im| then.images[im as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0u8; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u8;
        }
        Permutation { images }
    }

    /// Order of the permutation, the lcm of its cycle lengths.
    pub fn order(&self) -> usize {
        self.cycle_lengths().into_iter().fold(1, lcm)
    }

    /// Nontrivial cycles in increasing order of smallest moved point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            loop {
                seen[p] = true;
                cycle.push(p);
                p = self.image(p);
                if p == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().into_iter().map(|c| c.len()).collect()
    }

    /// Cycle notation with 1-based points; `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return String::from("()");
        }
        let mut s = String::new();
        for cycle in cycles {
            s.push('(');
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                s.push_str(&format!("{}", p + 1));
            }
            s.push(')');
        }
        s
    }

    /// Embeds the permutation into a larger point set, acting on points
    /// `offset..offset + degree` and fixing everything else.
    pub fn embed(&self, offset: usize, total: usize) -> Permutation {
        debug_assert!(offset + self.degree() <= total && total <= MAX_DEGREE);
        let mut images: Vec<u8> = (0..total as u8).collect();
        for (i, &im) in self.images.iter().enumerate() {
            images[offset + i] = (offset + im as usize) as u8;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
