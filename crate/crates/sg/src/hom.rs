//! Sign-preserving homomorphism search: backtracking with forward checking
//! over bitset domains. Targets are small (<= 16 vertices), so a domain is a
//! single `u16`.

use crate::error::SgError;
use crate::graph::{Sign, SignedGraph};

/// A candidate homomorphism: `images[v]` is the target vertex of source `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    pub images: Vec<usize>,
}

/// Required images for some source vertices.
#[derive(Debug, Clone, Default)]
pub struct PinSet {
    pins: Vec<(usize, usize)>,
}

impl PinSet {
    pub fn new() -> PinSet {
        PinSet::default()
    }

    pub fn pin(mut self, source: usize, target: usize) -> PinSet {
        self.pins.push((source, target));
        self
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<PinSet, SgError> {
        let mut ps = PinSet::new();
        for &(s, t) in pairs {
            if ps.pins.iter().any(|&(s2, _)| s2 == s) {
                return Err(SgError::Invalid(format!("vertex {s} pinned twice")));
            }
            ps.pins.push((s, t));
        }
        Ok(ps)
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pins
    }
}

/// True iff `map` is a total sign-preserving homomorphism of `g` to `h`.
pub fn check_homomorphism(g: &SignedGraph, h: &SignedGraph, map: &VertexMap) -> Result<bool, SgError> {
    if map.images.len() != g.vertex_count() {
        return Err(SgError::Invalid(format!(
            "map covers {} vertices, source has {}",
            map.images.len(),
            g.vertex_count()
        )));
    }
    for &img in &map.images {
        if img >= h.vertex_count() {
            return Err(SgError::VertexOutOfRange(img, h.vertex_count()));
        }
    }
    for &(u, v, s) in g.edges() {
        if h.sign(map.images[u], map.images[v]) != Some(s) {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Target {
    n: usize,
    pos: Vec<u16>,
    neg: Vec<u16>,
}

impl Target {
    fn new(h: &SignedGraph) -> Target {
        let n = h.vertex_count();
        assert!(n <= 16, "target too large for bitset domains");
        let mut pos = vec![0u16; n];
        let mut neg = vec![0u16; n];
        for &(u, v, s) in h.edges() {
            let (row, _) = match s {
                Sign::Positive => (&mut pos, ()),
                Sign::Negative => (&mut neg, ()),
            };
            row[u] |= 1 << v;
            row[v] |= 1 << u;
        }
        Target { n, pos, neg }
    }

    fn mask(&self, t: usize, s: Sign) -> u16 {
        match s {
            Sign::Positive => self.pos[t],
            Sign::Negative => self.neg[t],
        }
    }
}

/// Find a total homomorphism honouring the pins, or `None`.
///
/// Deterministic: most-constrained vertex first with index tie-break, target
/// values tried in ascending order. Disconnected sources are solved
/// component by component.
pub fn find_homomorphism(g: &SignedGraph, h: &SignedGraph, pins: &PinSet) -> Option<VertexMap> {
    let n = g.vertex_count();
    let target = Target::new(h);
    let full: u16 = if target.n == 16 { u16::MAX } else { (1u16 << target.n) - 1 };
    let mut domains = vec![full; n];
    for &(s, t) in pins.pairs() {
        if s >= n || t >= target.n {
            return None;
        }
        domains[s] &= 1 << t;
        if domains[s] == 0 {
            return None;
        }
    }
    let mut images = vec![usize::MAX; n];
    for comp in g.components() {
        if !solve_component(g, &target, &comp, &mut domains.clone(), &mut images) {
            return None;
        }
    }
    Some(VertexMap { images })
}

fn solve_component(
    g: &SignedGraph,
    target: &Target,
    comp: &[usize],
    domains: &mut Vec<u16>,
    images: &mut Vec<usize>,
) -> bool {
    let mut assigned: Vec<bool> = vec![false; g.vertex_count()];
    backtrack(g, target, comp, domains, &mut assigned, images, 0)
}

fn backtrack(
    g: &SignedGraph,
    target: &Target,
    comp: &[usize],
    domains: &mut Vec<u16>,
    assigned: &mut Vec<bool>,
    images: &mut Vec<usize>,
    depth: usize,
) -> bool {
    if depth == comp.len() {
        return true;
    }
    // most constrained first, smallest index breaks ties
    let v = *comp
        .iter()
        .filter(|&&v| !assigned[v])
        .min_by_key(|&&v| (domains[v].count_ones(), v))
        .unwrap();
    let dom = domains[v];
    let mut bits = dom;
    while bits != 0 {
        let t = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let saved: Vec<(usize, u16)> = g
            .neighbours(v)
            .filter(|&(u, _)| !assigned[u])
            .map(|(u, _)| (u, domains[u]))
            .collect();
        let mut wipeout = false;
        for &(u, _) in &saved {
            let s = g.sign(v, u).unwrap();
            domains[u] &= target.mask(t, s);
            if domains[u] == 0 {
                wipeout = true;
                break;
            }
        }
        if !wipeout {
            assigned[v] = true;
            images[v] = t;
            domains[v] = 1 << t;
            if backtrack(g, target, comp, domains, assigned, images, depth + 1) {
                return true;
            }
            assigned[v] = false;
        }
        domains[v] = dom;
        for (u, d) in saved {
            domains[u] = d;
        }
    }
    false
}

/// Exhaustive count of total homomorphisms honouring the pins.
pub fn count_homomorphisms(g: &SignedGraph, h: &SignedGraph, pins: &PinSet) -> u64 {
    let n = g.vertex_count();
    let target = Target::new(h);
    let full: u16 = if target.n == 16 { u16::MAX } else { (1u16 << target.n) - 1 };
    let mut domains = vec![full; n];
    for &(s, t) in pins.pairs() {
        if s >= n || t >= target.n {
            return 0;
        }
        domains[s] &= 1 << t;
        if domains[s] == 0 {
            return 0;
        }
    }
    let mut total = 1u64;
    let mut images = vec![usize::MAX; n];
    for comp in g.components() {
        let mut assigned = vec![false; n];
        let mut count = 0u64;
        count_rec(g, &target, &comp, &mut domains.clone(), &mut assigned, &mut images, 0, &mut count);
        total = total.saturating_mul(count);
        if total == 0 {
            return 0;
        }
    }
    total
}

#[allow(clippy::too_many_arguments)]
fn count_rec(
    g: &SignedGraph,
    target: &Target,
    comp: &[usize],
    domains: &mut Vec<u16>,
    assigned: &mut Vec<bool>,
    images: &mut Vec<usize>,
    depth: usize,
    count: &mut u64,
) {
    if depth == comp.len() {
        *count += 1;
        return;
    }
    let v = *comp
        .iter()
        .filter(|&&v| !assigned[v])
        .min_by_key(|&&v| (domains[v].count_ones(), v))
        .unwrap();
    let dom = domains[v];
    let mut bits = dom;
    while bits != 0 {
        let t = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let saved: Vec<(usize, u16)> = g
            .neighbours(v)
            .filter(|&(u, _)| !assigned[u])
            .map(|(u, _)| (u, domains[u]))
            .collect();
        let mut wipeout = false;
        for &(u, _) in &saved {
            let s = g.sign(v, u).unwrap();
            domains[u] &= target.mask(t, s);
            if domains[u] == 0 {
                wipeout = true;
                break;
            }
        }
        if !wipeout {
            assigned[v] = true;
            images[v] = t;
            domains[v] = 1 << t;
            count_rec(g, target, comp, domains, assigned, images, depth + 1, count);
            assigned[v] = false;
        }
        domains[v] = dom;
        for (u, d) in saved {
            domains[u] = d;
        }
    }
}
