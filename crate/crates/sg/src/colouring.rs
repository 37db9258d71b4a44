//! The two-condition k-colouring: proper, and every unordered colour pair
//! carries edges of one sign only. Exact chromatic number by upward search.

use serde::{Deserialize, Serialize};

use crate::error::SgError;
use crate::graph::{Sign, SignedGraph};
use crate::hom::VertexMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    pub k: usize,
    pub labels: Vec<usize>,
}

impl Colouring {
    pub fn as_vertex_map(&self) -> VertexMap {
        VertexMap { images: self.labels.clone() }
    }
}

/// Condition 1: proper. Condition 2: for every unordered label pair, all
/// edges between the two classes carry the same sign.
pub fn validate_colouring(g: &SignedGraph, c: &Colouring) -> bool {
    if c.labels.len() != g.vertex_count() || c.labels.iter().any(|&l| l >= c.k) {
        return false;
    }
    let k = c.k;
    let mut pair_sign: Vec<Option<Sign>> = vec![None; k * k];
    for &(u, v, s) in g.edges() {
        let (a, b) = (c.labels[u], c.labels[v]);
        if a == b {
            return false;
        }
        let idx = a.min(b) * k + a.max(b);
        match pair_sign[idx] {
            None => pair_sign[idx] = Some(s),
            Some(t) if t != s => return false,
            _ => {}
        }
    }
    true
}

/// The k-vertex image a valid colouring implicitly defines.
pub fn implicit_target(g: &SignedGraph, c: &Colouring) -> Result<SignedGraph, SgError> {
    if !validate_colouring(g, c) {
        return Err(SgError::Invalid("colouring is not valid".into()));
    }
    let mut edges = Vec::new();
    let mut seen = vec![false; c.k * c.k];
    for &(u, v, s) in g.edges() {
        let (a, b) = (c.labels[u].min(c.labels[v]), c.labels[u].max(c.labels[v]));
        if !seen[a * c.k + b] {
            seen[a * c.k + b] = true;
            edges.push((a, b, s));
        }
    }
    SignedGraph::new(c.k, &edges)
}

/// A valid colouring with at most `k` colours, or `None` after exhaustive
/// search. First-use symmetry breaking: a vertex may only open colour
/// `max_used + 1`.
pub fn find_k_colouring(g: &SignedGraph, k: usize) -> Option<Colouring> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(Colouring { k, labels: vec![] });
    }
    if k == 0 {
        return None;
    }
    // BFS order so early vertices constrain each other
    let order = bfs_order(g);
    let mut labels = vec![usize::MAX; n];
    let mut pair: Vec<(Option<Sign>, u32)> = vec![(None, 0); k * k];
    if colour_rec(g, k, &order, 0, 0, &mut labels, &mut pair) {
        Some(Colouring { k, labels })
    } else {
        None
    }
}

fn bfs_order(g: &SignedGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for (u, _) in g.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

fn colour_rec(
    g: &SignedGraph,
    k: usize,
    order: &[usize],
    depth: usize,
    max_used: usize,
    labels: &mut Vec<usize>,
    pair: &mut Vec<(Option<Sign>, u32)>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let limit = k.min(max_used + 1);
    'col: for c in 0..limit {
        // check against coloured neighbours
        let mut touched: Vec<usize> = Vec::new();
        for (u, s) in g.neighbours(v) {
            let lu = labels[u];
            if lu == usize::MAX {
                continue;
            }
            if lu == c {
                for &idx in &touched {
                    undo(pair, idx);
                }
                continue 'col;
            }
            let idx = lu.min(c) * k + lu.max(c);
            match pair[idx].0 {
                None => pair[idx] = (Some(s), 1),
                Some(t) if t == s => pair[idx].1 += 1,
                _ => {
                    for &idx in &touched {
                        undo(pair, idx);
                    }
                    continue 'col;
                }
            }
            touched.push(idx);
        }
        labels[v] = c;
        let nm = max_used.max(c + 1);
        if colour_rec(g, k, order, depth + 1, nm, labels, pair) {
            return true;
        }
        labels[v] = usize::MAX;
        for &idx in &touched {
            undo(pair, idx);
        }
    }
    false
}

fn undo(pair: &mut [(Option<Sign>, u32)], idx: usize) {
    pair[idx].1 -= 1;
    if pair[idx].1 == 0 {
        pair[idx].0 = None;
    }
}

/// A greedily grown clique gives a sound lower bound for the upward search.
fn greedy_clique_bound(g: &SignedGraph) -> usize {
    let n = g.vertex_count();
    let mut best = 1;
    for v in 0..n {
        let mut clique = vec![v];
        for u in 0..n {
            if u != v && clique.iter().all(|&w| g.adjacent(u, w)) {
                clique.push(u);
            }
        }
        best = best.max(clique.len());
    }
    best.min(n).max(1)
}

/// Least `k` admitting a valid colouring.
pub fn chromatic_number(g: &SignedGraph) -> (usize, Colouring) {
    assert!(g.vertex_count() > 0, "chromatic number of the empty graph");
    let mut k = greedy_clique_bound(g);
    loop {
        if let Some(c) = find_k_colouring(g, k) {
            return (k, c);
        }
        k += 1;
    }
}
