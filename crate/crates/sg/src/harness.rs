//! Desk-scale experimental surface: enumerate connected cubic topologies,
//! sweep every theorem over all signature orbits, aggregate chi statistics.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bound10::{ten_colouring, Branch};
use crate::canon::{automorphisms, canonical_form, canonical_id};
use crate::colouring::{chromatic_number, validate_colouring};
use crate::error::SgError;
use crate::formats::{sign_string, to_graph6};
use crate::graph::{Sign, SignedGraph};
use crate::hom::{find_homomorphism, PinSet};
use crate::targets::catalog;

/// All connected 3-regular simple graphs on `n` vertices, one per
/// isomorphism class. Supported for n in {4, 6, 8, 10}.
pub fn enumerate_cubic_graphs(n: usize) -> Result<Vec<SignedGraph>, SgError> {
    if !(n >= 4 && n <= 10 && n % 2 == 0) {
        return Err(SgError::Invalid(format!("unsupported order {n}, expected 4, 6, 8 or 10")));
    }
    let mut adj = vec![Vec::new(); n];
    let mut deg = vec![0usize; n];
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    fill(0, 1, n, &mut adj, &mut deg, &mut seen, &mut out);
    out.sort_by_key(canonical_form);
    Ok(out)
}

fn fill(
    u: usize,
    start: usize,
    n: usize,
    adj: &mut Vec<Vec<usize>>,
    deg: &mut Vec<usize>,
    seen: &mut std::collections::HashSet<Vec<u8>>,
    out: &mut Vec<SignedGraph>,
) {
    if deg[u] == 3 {
        if u == n - 1 {
            let mut edges = Vec::new();
            for v in 0..n {
                for &w in &adj[v] {
                    if v < w {
                        edges.push((v, w, Sign::Positive));
                    }
                }
            }
            let g = SignedGraph::new(n, &edges).unwrap();
            if g.is_connected() && seen.insert(canonical_form(&g)) {
                out.push(g);
            }
        } else {
            fill(u + 1, u + 2, n, adj, deg, seen, out);
        }
        return;
    }
    let first_fresh = (0..n).find(|&w| deg[w] == 0 && w != u);
    for w in start..n {
        if deg[w] == 3 || adj[u].contains(&w) {
            continue;
        }
        // introduce untouched vertices in index order
        if deg[w] == 0 && Some(w) != first_fresh {
            continue;
        }
        adj[u].push(w);
        adj[w].push(u);
        deg[u] += 1;
        deg[w] += 1;
        fill(u, w + 1, n, adj, deg, seen, out);
        deg[u] -= 1;
        deg[w] -= 1;
        adj[u].pop();
        adj[w].pop();
    }
}

/// All 2^m sign assignments on a topology; with `reduce`, one representative
/// (the least mask) per orbit of the automorphism group acting on sign
/// vectors.
pub fn enumerate_signatures(topo: &SignedGraph, reduce: bool) -> Vec<SignedGraph> {
    let m = topo.edge_count();
    assert!(m <= 20, "too many edges to sweep signatures");
    let edge_index: std::collections::HashMap<(usize, usize), usize> = topo
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(a, b, _))| ((a, b), i))
        .collect();
    let edge_perms: Vec<Vec<usize>> = if reduce {
        automorphisms(topo)
            .iter()
            .map(|p| {
                topo.edges()
                    .iter()
                    .map(|&(a, b, _)| {
                        let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                        edge_index[&(x, y)]
                    })
                    .collect()
            })
            .collect()
    } else {
        Vec::new()
    };
    let mut out = Vec::new();
    'mask: for mask in 0u32..(1u32 << m) {
        if reduce {
            for perm in &edge_perms {
                let mut permuted = 0u32;
                for (i, &pi) in perm.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        permuted |= 1 << pi;
                    }
                }
                if permuted < mask {
                    continue 'mask;
                }
            }
        }
        let edges: Vec<(usize, usize, Sign)> = topo
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(a, b, _))| {
                (a, b, if mask >> i & 1 == 1 { Sign::Negative } else { Sign::Positive })
            })
            .collect();
        out.push(SignedGraph::new(topo.vertex_count(), &edges).unwrap());
    }
    out
}

/// The orbit size of each reduced representative, for histogram expansion.
pub fn signature_orbit_size(topo: &SignedGraph, g: &SignedGraph) -> u64 {
    let edge_index: std::collections::HashMap<(usize, usize), usize> = topo
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(a, b, _))| ((a, b), i))
        .collect();
    let mask: u32 = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(_, _, s))| if s == Sign::Negative { 1u32 << i } else { 0 })
        .sum();
    let mut orbit = std::collections::HashSet::new();
    for p in automorphisms(topo) {
        let mut permuted = 0u32;
        for (i, &(a, b, _)) in topo.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (x, y) = (p[a].min(p[b]), p[a].max(p[b]));
                permuted |= 1 << edge_index[&(x, y)];
            }
        }
        orbit.insert(permuted);
    }
    orbit.len() as u64
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceReport {
    pub id: String,
    pub n: usize,
    pub graph6: String,
    pub signature: String,
    pub branch: Option<Branch>,
    pub flipped: bool,
    pub fallback: Option<String>,
    pub bound10_ok: bool,
    pub colours_used: Option<usize>,
    pub chi: Option<usize>,
    pub sp9star_ok: Option<bool>,
    pub ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub instances: u64,
    pub chi_histogram: BTreeMap<usize, u64>,
    pub max_chi: Option<usize>,
    pub max_chi_witness: Option<String>,
    pub falsifications: u64,
    pub fallbacks: u64,
    pub seed: Option<u64>,
    pub total_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct SurveyResult {
    pub reports: Vec<InstanceReport>,
    pub summary: SweepSummary,
}

#[derive(Debug, Clone)]
pub struct SurveyOptions {
    pub max_n: usize,
    pub reduce: bool,
    pub exact_chi: bool,
    pub sp9star: bool,
    pub n10_samples: usize,
    pub seed: u64,
}

impl Default for SurveyOptions {
    fn default() -> SurveyOptions {
        SurveyOptions {
            max_n: 8,
            reduce: true,
            exact_chi: true,
            sp9star: false,
            n10_samples: 1000,
            seed: 20240,
        }
    }
}

fn process_instance(g: &SignedGraph, opts: &SurveyOptions) -> InstanceReport {
    let start = Instant::now();
    let n = g.vertex_count();
    let mut report = InstanceReport {
        id: canonical_id(g),
        n,
        graph6: to_graph6(g),
        signature: sign_string(g),
        branch: None,
        flipped: false,
        fallback: None,
        bound10_ok: false,
        colours_used: None,
        chi: None,
        sp9star_ok: None,
        ms: 0,
    };
    match ten_colouring(g) {
        Ok((c, trace)) => {
            report.branch = Some(trace.branch);
            report.flipped = trace.flipped;
            report.fallback = trace.fallback;
            report.bound10_ok = validate_colouring(g, &c) && c.k <= 10;
            let used: std::collections::BTreeSet<usize> = c.labels.iter().copied().collect();
            report.colours_used = Some(used.len());
        }
        Err(_) => report.bound10_ok = false,
    }
    if opts.exact_chi {
        let (chi, witness) = chromatic_number(g);
        debug_assert!(validate_colouring(g, &witness));
        report.chi = Some(chi);
    }
    if opts.sp9star {
        let ok = find_homomorphism(g, &catalog().sp9_star, &PinSet::new()).is_some();
        report.sp9star_ok = Some(ok);
    }
    report.ms = start.elapsed().as_millis();
    report
}

/// Sweep every connected cubic topology and signature orbit up to `max_n`
/// (sampling signatures at n = 10), running the constructive colouring and
/// optional cross-checks on each instance.
pub fn run_survey(opts: &SurveyOptions) -> Result<SurveyResult, SgError> {
    let start = Instant::now();
    let mut reports = Vec::new();
    let mut sampled = false;
    for n in [4usize, 6, 8, 10] {
        if n > opts.max_n {
            break;
        }
        let topologies = enumerate_cubic_graphs(n)?;
        if n <= 8 {
            for topo in &topologies {
                for g in enumerate_signatures(topo, opts.reduce) {
                    reports.push(process_instance(&g, opts));
                }
            }
        } else {
            sampled = true;
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            for _ in 0..opts.n10_samples {
                let topo = &topologies[rng.gen_range(0..topologies.len())];
                let m = topo.edge_count();
                let mask: u32 = rng.gen_range(0..(1u32 << m));
                let edges: Vec<(usize, usize, Sign)> = topo
                    .edges()
                    .iter()
                    .enumerate()
                    .map(|(i, &(a, b, _))| {
                        (a, b, if mask >> i & 1 == 1 { Sign::Negative } else { Sign::Positive })
                    })
                    .collect();
                let g = SignedGraph::new(n, &edges).unwrap();
                reports.push(process_instance(&g, opts));
            }
        }
    }
    reports.sort_by(|a, b| (a.n, &a.id, &a.signature).cmp(&(b.n, &b.id, &b.signature)));
    let mut chi_histogram: BTreeMap<usize, u64> = BTreeMap::new();
    let mut max_chi: Option<usize> = None;
    let mut max_chi_witness = None;
    let mut falsifications = 0u64;
    let mut fallbacks = 0u64;
    for r in &reports {
        if !r.bound10_ok {
            falsifications += 1;
        }
        if r.fallback.is_some() {
            fallbacks += 1;
        }
        if let Some(chi) = r.chi {
            *chi_histogram.entry(chi).or_insert(0) += 1;
            if chi > 10 {
                falsifications += 1;
            }
            if max_chi.map_or(true, |m| chi > m) {
                max_chi = Some(chi);
                max_chi_witness = Some(format!("{} {}", r.graph6, r.signature));
            }
        }
        if r.sp9star_ok == Some(false) {
            falsifications += 1;
        }
    }
    let summary = SweepSummary {
        instances: reports.len() as u64,
        chi_histogram,
        max_chi,
        max_chi_witness,
        falsifications,
        fallbacks,
        seed: if sampled { Some(opts.seed) } else { None },
        total_ms: start.elapsed().as_millis(),
    };
    Ok(SurveyResult { reports, summary })
}

/// Line-delimited JSON: one instance per line, then a summary object.
pub fn to_jsonl(result: &SurveyResult) -> String {
    let mut out = String::new();
    for r in &result.reports {
        out.push_str(&serde_json::to_string(r).unwrap());
        out.push('\n');
    }
    out.push_str(
        &serde_json::to_string(&serde_json::json!({ "summary": result.summary })).unwrap(),
    );
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_counts_match_known_sequence() {
        assert_eq!(enumerate_cubic_graphs(4).unwrap().len(), 1);
        assert_eq!(enumerate_cubic_graphs(6).unwrap().len(), 2);
        assert_eq!(enumerate_cubic_graphs(8).unwrap().len(), 5);
        assert!(enumerate_cubic_graphs(5).is_err());
        assert!(enumerate_cubic_graphs(12).is_err());
    }

    #[test]
    fn k4_signature_orbits() {
        let k4 = &enumerate_cubic_graphs(4).unwrap()[0];
        assert_eq!(enumerate_signatures(k4, false).len(), 64);
        let reduced = enumerate_signatures(k4, true);
        assert_eq!(reduced.len(), 11);
        // orbit sizes must account for every signature
        let total: u64 = reduced.iter().map(|g| signature_orbit_size(k4, g)).sum();
        assert_eq!(total, 64);
    }

    #[test]
    fn single_edge_signatures() {
        let e = SignedGraph::new(2, &[(0, 1, Sign::Positive)]).unwrap();
        assert_eq!(enumerate_signatures(&e, false).len(), 2);
        assert_eq!(enumerate_signatures(&e, true).len(), 2);
    }

    #[test]
    fn mini_survey_on_k4() {
        let opts = SurveyOptions { max_n: 4, sp9star: true, ..Default::default() };
        let result = run_survey(&opts).unwrap();
        assert_eq!(result.summary.instances, 11);
        assert_eq!(result.summary.falsifications, 0);
        assert_eq!(result.summary.max_chi, Some(4));
        assert!(result.reports.iter().all(|r| r.bound10_ok));
        assert!(result.reports.iter().all(|r| r.sp9star_ok == Some(true)));
    }
}
