//! Canonical labelling of signed graphs by colour refinement plus
//! individualization, and automorphism-group computation.
//!
//! Desk-scale graphs only (n <= 14 or so); no automorphism pruning in the
//! canonical search, every discrete partition is encoded and the minimum kept.

use crate::graph::{Sign, SignedGraph};

/// Canonical byte string: equal iff the signed graphs are isomorphic under a
/// sign-preserving isomorphism.
pub fn canonical_form(g: &SignedGraph) -> Vec<u8> {
    let n = g.vertex_count();
    if n == 0 {
        return vec![0];
    }
    let mut best: Option<Vec<u8>> = None;
    let initial = refine(g, initial_partition(g));
    search(g, initial, &mut best);
    let mut out = Vec::with_capacity(1 + n * (n - 1) / 2);
    out.push(n as u8);
    out.extend_from_slice(&best.unwrap());
    out
}

/// Canonical form as a hex string, used as a stable instance id.
pub fn canonical_id(g: &SignedGraph) -> String {
    canonical_form(g).iter().map(|b| format!("{b:02x}")).collect()
}

fn initial_partition(g: &SignedGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut keyed: Vec<(usize, usize, usize)> = (0..n)
        .map(|v| {
            let mut pos = 0;
            let mut neg = 0;
            for (_, s) in g.neighbours(v) {
                match s {
                    Sign::Positive => pos += 1,
                    Sign::Negative => neg += 1,
                }
            }
            (pos, neg, v)
        })
        .collect();
    keyed.sort_unstable();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (pos, neg, v) in keyed {
        match cells.last_mut() {
            Some(cell) if {
                let u = cell[0];
                let mut p = 0;
                let mut m = 0;
                for (_, s) in g.neighbours(u) {
                    match s {
                        Sign::Positive => p += 1,
                        Sign::Negative => m += 1,
                    }
                }
                (p, m) == (pos, neg)
            } =>
            {
                cell.push(v)
            }
            _ => cells.push(vec![v]),
        }
    }
    cells
}

/// Stable colour refinement: split cells by the multiset of (cell, sign)
/// neighbour counts until no cell splits.
fn refine(g: &SignedGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    loop {
        let mut colour = vec![0usize; n];
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                colour[v] = ci;
            }
        }
        let ncells = cells.len();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(ncells);
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            // signature of v: per target cell, (positive count, negative count)
            let mut keyed: Vec<(Vec<(usize, usize)>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![(0usize, 0usize); ncells];
                    for (u, s) in g.neighbours(v) {
                        match s {
                            Sign::Positive => sig[colour[u]].0 += 1,
                            Sign::Negative => sig[colour[u]].1 += 1,
                        }
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    if !(start == 0 && i == keyed.len()) {
                        split = true;
                    }
                    start = i;
                }
            }
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

fn search(g: &SignedGraph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u8>>) {
    if let Some(ti) = cells.iter().position(|c| c.len() > 1) {
        for &v in &cells[ti] {
            let mut next = Vec::with_capacity(cells.len() + 1);
            for (ci, cell) in cells.iter().enumerate() {
                if ci == ti {
                    next.push(vec![v]);
                    next.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    next.push(cell.clone());
                }
            }
            search(g, refine(g, next), best);
        }
        return;
    }
    // discrete: position i holds vertex cells[i][0]
    let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
    let enc = encode(g, &order);
    match best {
        Some(b) if *b <= enc => {}
        _ => *best = Some(enc),
    }
}

/// Upper-triangle sign codes under the given vertex order.
fn encode(g: &SignedGraph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(match g.sign(order[i], order[j]) {
                None => 0,
                Some(Sign::Positive) => 1,
                Some(Sign::Negative) => 2,
            });
        }
    }
    out
}

/// All sign-preserving automorphisms, as permutations `v -> perm[v]`.
pub fn automorphisms(g: &SignedGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        g: &SignedGraph,
        v: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = g.vertex_count();
        if v == n {
            out.push(perm.clone());
            return;
        }
        'cand: for t in 0..n {
            if used[t] {
                continue;
            }
            for u in 0..v {
                if g.sign(v, u) != g.sign(t, perm[u]) {
                    continue 'cand;
                }
            }
            if g.degree(v) != g.degree(t) {
                continue;
            }
            perm[v] = t;
            used[t] = true;
            rec(g, v + 1, perm, used, out);
            used[t] = false;
            perm[v] = usize::MAX;
        }
    }
    rec(g, 0, &mut perm, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as Neg, Positive as Pos};

    #[test]
    fn relabellings_of_a_signed_triangle_agree() {
        let t1 = SignedGraph::new(3, &[(0, 1, Pos), (1, 2, Neg), (0, 2, Pos)]).unwrap();
        let t2 = t1.relabel(&[2, 0, 1]);
        assert_eq!(canonical_form(&t1), canonical_form(&t2));
    }

    #[test]
    fn sign_matters() {
        let a = SignedGraph::new(2, &[(0, 1, Pos)]).unwrap();
        let b = SignedGraph::new(2, &[(0, 1, Neg)]).unwrap();
        assert_ne!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn non_isomorphic_same_degree_sequence() {
        // C6 vs two disjoint triangles, all positive
        let c6 = SignedGraph::new(
            6,
            &[(0, 1, Pos), (1, 2, Pos), (2, 3, Pos), (3, 4, Pos), (4, 5, Pos), (0, 5, Pos)],
        )
        .unwrap();
        let tt = SignedGraph::new(
            6,
            &[(0, 1, Pos), (1, 2, Pos), (0, 2, Pos), (3, 4, Pos), (4, 5, Pos), (3, 5, Pos)],
        )
        .unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&tt));
    }

    #[test]
    fn triangle_automorphism_group() {
        let all_pos = SignedGraph::new(3, &[(0, 1, Pos), (1, 2, Pos), (0, 2, Pos)]).unwrap();
        assert_eq!(automorphisms(&all_pos).len(), 6);
        let one_neg = SignedGraph::new(3, &[(0, 1, Neg), (1, 2, Pos), (0, 2, Pos)]).unwrap();
        // only the transposition fixing the negative edge survives
        assert_eq!(automorphisms(&one_neg).len(), 2);
    }
}
