//! Induced, sign-exact pattern matching.

use crate::canon::automorphisms;
use crate::graph::SignedGraph;

/// An induced occurrence of a pattern in a host: `map[p]` is the host vertex
/// playing pattern role `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Re-check the induced-copy condition edge by edge (and non-edge by
    /// non-edge).
    pub fn is_induced_copy(&self, host: &SignedGraph, pattern: &SignedGraph) -> bool {
        let k = pattern.vertex_count();
        if self.map.len() != k {
            return false;
        }
        for i in 0..k {
            for j in (i + 1)..k {
                if host.sign(self.map[i], self.map[j]) != pattern.sign(i, j) {
                    return false;
                }
            }
        }
        // injectivity
        let mut sorted = self.map.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }
}

/// All induced, sign-exact occurrences of `pattern` in `host`.
///
/// With `all_roles = false` each occurrence is reported once modulo pattern
/// automorphism (the lexicographically least role assignment); with
/// `all_roles = true` every role assignment is reported.
pub fn find_induced_copies(host: &SignedGraph, pattern: &SignedGraph, all_roles: bool) -> Vec<Embedding> {
    let k = pattern.vertex_count();
    assert!(k > 0, "pattern must be nonempty");
    let mut raw = Vec::new();
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; host.vertex_count()];
    extend(host, pattern, 0, &mut map, &mut used, &mut raw);
    if all_roles {
        return raw;
    }
    let auts = automorphisms(pattern);
    raw.retain(|e| {
        // keep only the lex-min map within its automorphism class
        auts.iter().all(|a| {
            let permuted: Vec<usize> = (0..k).map(|p| e.map[a[p]]).collect();
            e.map <= permuted
        })
    });
    raw
}

fn extend(
    host: &SignedGraph,
    pattern: &SignedGraph,
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Embedding>,
) {
    if depth == pattern.vertex_count() {
        out.push(Embedding { map: map.clone() });
        return;
    }
    'cand: for h in 0..host.vertex_count() {
        if used[h] {
            continue;
        }
        for p in 0..depth {
            if host.sign(h, map[p]) != pattern.sign(depth, p) {
                continue 'cand;
            }
        }
        map[depth] = h;
        used[h] = true;
        extend(host, pattern, depth + 1, map, used, out);
        used[h] = false;
        map[depth] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as Neg, Positive as Pos};
    use crate::targets::catalog;

    #[test]
    fn pattern_in_itself() {
        let p = SignedGraph::new(3, &[(0, 1, Pos), (1, 2, Neg)]).unwrap();
        let found = find_induced_copies(&p, &p, false);
        assert_eq!(found.len(), 1);
        assert!(found[0].is_induced_copy(&p, &p));
    }

    #[test]
    fn sign_mismatch_blocks_matching() {
        // k4s_plus carries a negative edge, an all-positive host has none
        let k4sp = &catalog().k4s_plus;
        let mut edges = Vec::new();
        for u in 0..6usize {
            for v in (u + 1)..6 {
                edges.push((u, v, Pos));
            }
        }
        let host = SignedGraph::new(6, &edges).unwrap();
        assert!(find_induced_copies(&host, k4sp, false).is_empty());
    }

    #[test]
    fn pendant_host_contains_exactly_one_copy() {
        // k4s_plus plus a pendant vertex attached to the degree-2 role
        let k4sp = &catalog().k4s_plus;
        let mut edges: Vec<_> = k4sp.edges().to_vec();
        edges.push((0, 5, Pos));
        let host = SignedGraph::new(6, &edges).unwrap();
        let found = find_induced_copies(&host, k4sp, false);
        assert_eq!(found.len(), 1);
        // brute-force cross-check over all 5-subsets
        let mut brute = 0;
        for a in 0..6usize {
            for b in (a + 1)..6 {
                for c in (b + 1)..6 {
                    for d in (c + 1)..6 {
                        for e in (d + 1)..6 {
                            let sub = host.induced_subgraph(&[a, b, c, d, e]);
                            if crate::canon::canonical_form(&sub) == crate::canon::canonical_form(k4sp) {
                                brute += 1;
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(brute, 1);
    }

    #[test]
    fn all_roles_expands_by_automorphism_count() {
        let k4sp = &catalog().k4s_plus;
        let auts = automorphisms(k4sp).len();
        let mut edges: Vec<_> = k4sp.edges().to_vec();
        edges.push((0, 5, Pos));
        let host = SignedGraph::new(6, &edges).unwrap();
        let all = find_induced_copies(&host, k4sp, true);
        assert_eq!(all.len(), auts);
    }
}
