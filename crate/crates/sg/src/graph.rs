//! Core data model: simple graphs with a sign on every edge.

use serde::{Deserialize, Serialize};

use crate::error::SgError;

/// Edge sign of a 2-edge-coloured graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Positive),
            '-' => Some(Sign::Negative),
            _ => None,
        }
    }
}

/// How a vertex sees its incident edge signs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexClass {
    AllPositive,
    AllNegative,
    Mixed,
    Isolated,
}

/// A simple graph on vertices `0..n` with a sign on every edge.
///
/// Edges are stored normalized with `u < v` and sorted, so iteration order is
/// deterministic everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<(usize, usize, Sign)>,
    // adjacency matrix, row-major: 0 = non-edge, 1 = positive, 2 = negative
    adj: Vec<u8>,
}

impl SignedGraph {
    pub fn new(n: usize, edges: &[(usize, usize, Sign)]) -> Result<SignedGraph, SgError> {
        let mut norm: Vec<(usize, usize, Sign)> = Vec::with_capacity(edges.len());
        for &(u, v, s) in edges {
            if u == v {
                return Err(SgError::Loop(u));
            }
            if u >= n || v >= n {
                return Err(SgError::VertexOutOfRange(u.max(v), n));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            norm.push((a, b, s));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                return Err(SgError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![0u8; n * n];
        for &(u, v, s) in &norm {
            let code = match s {
                Sign::Positive => 1,
                Sign::Negative => 2,
            };
            adj[u * n + v] = code;
            adj[v * n + u] = code;
        }
        Ok(SignedGraph { n, edges: norm, adj })
    }

    pub fn empty(n: usize) -> SignedGraph {
        SignedGraph::new(n, &[]).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize, Sign)] {
        &self.edges
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        match self.adj[u * self.n + v] {
            1 => Some(Sign::Positive),
            2 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v] != 0
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = (usize, Sign)> + '_ {
        let n = self.n;
        (0..n).filter_map(move |u| self.sign(v, u).map(|s| (u, s)))
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.adjacent(v, u)).count()
    }

    pub fn flip_signs(&self) -> SignedGraph {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v, s)| (u, v, s.flip())).collect();
        SignedGraph::new(self.n, &edges).unwrap()
    }

    pub fn classify_vertex(&self, v: usize) -> Result<VertexClass, SgError> {
        if v >= self.n {
            return Err(SgError::VertexOutOfRange(v, self.n));
        }
        let mut pos = 0usize;
        let mut neg = 0usize;
        for (_, s) in self.neighbours(v) {
            match s {
                Sign::Positive => pos += 1,
                Sign::Negative => neg += 1,
            }
        }
        Ok(match (pos, neg) {
            (0, 0) => VertexClass::Isolated,
            (_, 0) => VertexClass::AllPositive,
            (0, _) => VertexClass::AllNegative,
            _ => VertexClass::Mixed,
        })
    }

    /// All vertex triples inducing a complete triangle, each reported once
    /// as an ordered triple `u < v < w`.
    pub fn find_triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.adjacent(u, v) {
                    continue;
                }
                for w in (v + 1)..self.n {
                    if self.adjacent(u, w) && self.adjacent(v, w) {
                        out.push([u, v, w]);
                    }
                }
            }
        }
        out
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SignedGraph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v, s)| (perm[u], perm[v], s))
            .collect();
        SignedGraph::new(self.n, &edges).unwrap()
    }

    /// Subgraph induced on `keep` (in the given order); vertex `keep[i] -> i`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> SignedGraph {
        let mut edges = Vec::new();
        for i in 0..keep.len() {
            for j in (i + 1)..keep.len() {
                if let Some(s) = self.sign(keep[i], keep[j]) {
                    edges.push((i, j, s));
                }
            }
        }
        SignedGraph::new(keep.len(), &edges).unwrap()
    }

    /// Delete one vertex, relabelling the rest downward.
    pub fn delete_vertex(&self, v: usize) -> SignedGraph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for (u, _) in self.neighbours(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Maximum degree <= 3 and some vertex of degree <= 2.
    pub fn is_properly_subcubic(&self) -> bool {
        let mut has_low = false;
        for v in 0..self.n {
            let d = self.degree(v);
            if d > 3 {
                return false;
            }
            if d <= 2 {
                has_low = true;
            }
        }
        has_low
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2(sign: Sign) -> SignedGraph {
        SignedGraph::new(2, &[(0, 1, sign)]).unwrap()
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(matches!(
            SignedGraph::new(2, &[(0, 0, Sign::Positive)]),
            Err(SgError::Loop(0))
        ));
        assert!(matches!(
            SignedGraph::new(2, &[(0, 1, Sign::Positive), (1, 0, Sign::Negative)]),
            Err(SgError::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            SignedGraph::new(2, &[(0, 2, Sign::Positive)]),
            Err(SgError::VertexOutOfRange(2, 2))
        ));
    }

    #[test]
    fn flip_is_involutive() {
        let g = SignedGraph::new(3, &[(0, 1, Sign::Positive), (1, 2, Sign::Negative)]).unwrap();
        assert_eq!(g.flip_signs().flip_signs(), g);
        assert_eq!(k2(Sign::Positive).flip_signs(), k2(Sign::Negative));
    }

    #[test]
    fn classify_vertex_cases() {
        // all-positive star centred at 0
        let star = SignedGraph::new(
            4,
            &[(0, 1, Sign::Positive), (0, 2, Sign::Positive), (0, 3, Sign::Positive)],
        )
        .unwrap();
        assert_eq!(star.classify_vertex(0).unwrap(), VertexClass::AllPositive);
        let mixed = SignedGraph::new(3, &[(0, 1, Sign::Positive), (1, 2, Sign::Negative)]).unwrap();
        assert_eq!(mixed.classify_vertex(1).unwrap(), VertexClass::Mixed);
        assert_eq!(SignedGraph::empty(1).classify_vertex(0).unwrap(), VertexClass::Isolated);
        assert!(star.classify_vertex(4).is_err());
    }

    #[test]
    fn triangles_c4_and_k4() {
        let c4 = SignedGraph::new(
            4,
            &[
                (0, 1, Sign::Positive),
                (1, 2, Sign::Positive),
                (2, 3, Sign::Positive),
                (0, 3, Sign::Negative),
            ],
        )
        .unwrap();
        assert!(c4.find_triangles().is_empty());

        let mut edges = Vec::new();
        for u in 0..4 {
            for v in (u + 1)..4 {
                edges.push((u, v, Sign::Positive));
            }
        }
        let k4 = SignedGraph::new(4, &edges).unwrap();
        assert_eq!(k4.find_triangles().len(), 4);
    }

    #[test]
    fn components_and_connectivity() {
        let g = SignedGraph::new(4, &[(0, 1, Sign::Positive), (2, 3, Sign::Negative)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(!g.is_connected());
        assert!(SignedGraph::empty(0).is_connected());
        assert!(SignedGraph::empty(1).is_connected());
    }
}
