//! Plain undirected graphs over bitset adjacency rows.

use alloc::vec::Vec;

use crate::bitset::Bitset;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitGraph {
    n: usize,
    rows: Vec<Bitset>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        BitGraph {
            n,
            rows: (0..n).map(|_| Bitset::new(n)).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = BitGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = BitGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v, "no self-loops");
        self.rows[u].set(v);
        self.rows[v].set(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].get(v)
    }

    pub fn neighbors(&self, u: usize) -> &Bitset {
        &self.rows[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count()).sum::<usize>() / 2
    }

    /// Symmetry and self-loop sanity; used by constructors of derived data.
    pub fn is_consistent(&self) -> bool {
        (0..self.n).all(|u| {
            !self.rows[u].get(u) && self.rows[u].ones().all(|v| self.rows[v].get(u))
        })
    }

    pub fn complement(&self) -> BitGraph {
        let mut g = BitGraph::new(self.n);
        for u in 0..self.n {
            let mut row = Bitset::new(self.n);
            row.fill();
            row.subtract(&self.rows[u]);
            row.unset(u);
            g.rows[u] = row;
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = Bitset::new(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.get(start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = alloc::vec![start];
            seen.set(start);
            while let Some(u) = queue.pop() {
                comp.push(u);
                for v in self.rows[u].ones() {
                    if !seen.get(v) {
                        seen.set(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_clique(&self, verts: &[usize]) -> bool {
        verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_and_degrees() {
        let g = BitGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree(1), 2);
        assert!(g.has_edge(2, 1));
        assert!(g.is_consistent());
    }

    #[test]
    fn complement_of_path() {
        let g = BitGraph::from_edges(3, &[(0, 1), (1, 2)]);
        let c = g.complement();
        assert_eq!(c.edge_count(), 1);
        assert!(c.has_edge(0, 2));
    }

    #[test]
    fn components_of_disjoint_edges() {
        let g = BitGraph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(g.components(), [[0, 1], [2, 3]]);
    }

    #[test]
    fn clique_check() {
        let g = BitGraph::complete(5);
        assert!(g.is_clique(&[0, 2, 4]));
        let h = BitGraph::from_edges(3, &[(0, 1)]);
        assert!(!h.is_clique(&[0, 1, 2]));
    }
}
