//! The fixed target graphs and their derivations.
//!
//! SP_9 is built by formula (positive edges = the 3x3 rook's graph under a
//! row/column labelling). Everything that depends on a figure labelling is
//! re-derived by search instead of transcribed: the two 5-vertex
//! obstructions, the attachment sets of the 10th vertex z, and the role
//! choices behind the 11-vertex target.

use once_cell::sync::Lazy;

use crate::bound10::extension_lemma_report;
use crate::canon::canonical_form;
use crate::error::SgError;
use crate::graph::{Sign, SignedGraph, VertexClass};
use crate::harness::{enumerate_cubic_graphs, enumerate_signatures};
use crate::hom::{find_homomorphism, PinSet};

/// Vertex roles of the subdivided-K4 obstruction topology:
/// x1 = 0 (the degree-2 subdivision vertex), x2 = 1, x3 = 2, x4 = 3, x5 = 4.
pub const ROLE_X1: usize = 0;
pub const ROLE_X5: usize = 4;

pub struct TargetCatalog {
    pub sp9: SignedGraph,
    pub k4s_plus: SignedGraph,
    pub k4s_minus: SignedGraph,
    pub sp9_dagger: SignedGraph,
    /// The added vertex of `sp9_dagger`.
    pub z: usize,
    pub nplus: [usize; 3],
    pub nminus: [usize; 3],
    pub sp9_star: SignedGraph,
    pub zero_prime: usize,
    pub one_prime: usize,
    /// (base vertex playing role 0, base vertex playing role 1, excluded vertex).
    pub star_base: (usize, usize, usize),
}

static CATALOG: Lazy<TargetCatalog> = Lazy::new(build_catalog);

/// The shared catalog; derivation searches run once per process.
pub fn catalog() -> &'static TargetCatalog {
    &CATALOG
}

fn build_catalog() -> TargetCatalog {
    let sp9 = build_sp9();
    let report = verify_sp9_adjacency(&sp9).expect("sp9 is complete on 9 vertices");
    assert!(report.passed(), "sp9 adjacency properties must hold");
    let (k4s_plus, k4s_minus) = derive_k4s_obstructions(&sp9).expect("obstruction derivation");
    let (sp9_dagger, z, nplus, nminus) =
        build_sp9_dagger(&sp9, &k4s_plus, &k4s_minus).expect("z attachment search");
    let (sp9_star, star_base) = build_sp9_star(&sp9).expect("star role search");
    TargetCatalog {
        sp9,
        k4s_plus,
        k4s_minus,
        sp9_dagger,
        z,
        nplus,
        nminus,
        sp9_star,
        zero_prime: 9,
        one_prime: 10,
        star_base,
    }
}

/// The complete signed graph on 9 vertices whose positive edges form the 3x3
/// rook's graph: vertex v sits at row v/3, column v%3; an edge is positive
/// iff its endpoints share a row or a column.
pub fn build_sp9() -> SignedGraph {
    let mut edges = Vec::with_capacity(36);
    for u in 0..9usize {
        for v in (u + 1)..9 {
            let s = if u / 3 == v / 3 || u % 3 == v % 3 { Sign::Positive } else { Sign::Negative };
            edges.push((u, v, s));
        }
    }
    SignedGraph::new(9, &edges).unwrap()
}

/// Per-edge common-neighbour sign-pattern counts, one pass/fail per bullet.
#[derive(Debug, Clone)]
pub struct Sp9AdjacencyReport {
    /// bullets 0..4: positive edges, (++ unique, +- two, -+ two, -- two);
    /// bullets 4..8: negative edges, (-- unique, -+ two, +- two, ++ two).
    pub bullets: [bool; 8],
    pub edges_checked: usize,
}

impl Sp9AdjacencyReport {
    pub fn passed(&self) -> bool {
        self.bullets.iter().all(|&b| b)
    }
}

/// Count the common-neighbour sign patterns of every edge of a complete
/// 9-vertex signed graph and compare against the expected profile.
pub fn verify_sp9_adjacency(g: &SignedGraph) -> Result<Sp9AdjacencyReport, SgError> {
    if g.vertex_count() != 9 || g.edge_count() != 36 {
        return Err(SgError::Invalid("expected a complete signed graph on 9 vertices".into()));
    }
    let mut bullets = [true; 8];
    let mut edges_checked = 0;
    for &(u, v, s) in g.edges() {
        let counts = common_neighbour_counts(g, u, v);
        debug_assert_eq!(counts.iter().sum::<usize>(), 7);
        let (base, expect) = match s {
            Sign::Positive => (0, [1, 2, 2, 2]),
            Sign::Negative => (4, [2, 2, 2, 1]),
        };
        // expected order for positive edges: (pp, pn, np, nn);
        // for negative edges the unique case is both-negative.
        for (off, (&got, &want)) in counts.iter().zip(expect.iter()).enumerate() {
            if got != want {
                bullets[base + off] = false;
            }
        }
        edges_checked += 1;
    }
    Ok(Sp9AdjacencyReport { bullets, edges_checked })
}

/// Counts of z with (uz, vz) sign pattern (++, +-, -+, --).
pub fn common_neighbour_counts(g: &SignedGraph, u: usize, v: usize) -> [usize; 4] {
    let mut counts = [0usize; 4];
    for z in 0..g.vertex_count() {
        if z == u || z == v {
            continue;
        }
        if let (Some(su), Some(sv)) = (g.sign(u, z), g.sign(v, z)) {
            let idx = match (su, sv) {
                (Sign::Positive, Sign::Positive) => 0,
                (Sign::Positive, Sign::Negative) => 1,
                (Sign::Negative, Sign::Positive) => 2,
                (Sign::Negative, Sign::Negative) => 3,
            };
            counts[idx] += 1;
        }
    }
    counts
}

/// Edge list of the subdivided-K4 topology, sorted, in role labelling.
pub fn obstruction_topology_edges() -> [(usize, usize); 7] {
    [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
}

/// Search all 2^7 sign assignments on the subdivided K4 for the isomorphism
/// classes admitting no homomorphism to `sp9`. Exactly two classes must
/// appear: one with at least three all-positive vertices (returned first)
/// and one with at least three all-negative vertices.
pub fn derive_k4s_obstructions(sp9: &SignedGraph) -> Result<(SignedGraph, SignedGraph), SgError> {
    let topo = obstruction_topology_edges();
    let mut failing: Vec<SignedGraph> = Vec::new();
    for mask in 0u32..128 {
        let edges: Vec<(usize, usize, Sign)> = topo
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                let s = if mask >> i & 1 == 1 { Sign::Negative } else { Sign::Positive };
                (u, v, s)
            })
            .collect();
        let g = SignedGraph::new(5, &edges).unwrap();
        if find_homomorphism(&g, sp9, &PinSet::new()).is_none() {
            failing.push(g);
        }
    }
    // group by isomorphism class, keeping the first (lex-least mask) member
    let mut classes: Vec<(Vec<u8>, SignedGraph)> = Vec::new();
    for g in failing {
        let cf = canonical_form(&g);
        if !classes.iter().any(|(c, _)| *c == cf) {
            classes.push((cf, g));
        }
    }
    if classes.len() != 2 {
        return Err(SgError::Invalid(format!(
            "expected exactly 2 non-mapping classes, found {}",
            classes.len()
        )));
    }
    let count_class = |g: &SignedGraph, want: VertexClass| {
        (0..5).filter(|&v| g.classify_vertex(v).unwrap() == want).count()
    };
    let mut plus = None;
    let mut minus = None;
    for (_, g) in classes {
        if count_class(&g, VertexClass::AllPositive) >= 3 {
            plus = Some(g);
        } else if count_class(&g, VertexClass::AllNegative) >= 3 {
            minus = Some(g);
        }
    }
    match (plus, minus) {
        (Some(p), Some(m)) => Ok((p, m)),
        _ => Err(SgError::Invalid(
            "non-mapping classes do not split into a positive and a negative one".into(),
        )),
    }
}

/// SP_9 plus a vertex z = 9 with three positive and three negative
/// attachments, chosen by exhaustive search over all disjoint pairs of
/// 3-sets as the lexicographically least pair maximizing the number of
/// passing extension-lemma cases.
///
/// No pair passes all 36 cases: passing every positive-obstruction case
/// forces the positive attachment set to be a positive triangle of SP_9 (a
/// row or column of the rook labelling), passing every negative case forces
/// the negative set to be a negative triangle (a transversal), and every
/// transversal meets every row and every column. The search therefore tops
/// out at 35/36; `verify_extension_lemmas` reports the shortfall and the
/// colouring pipeline routes the uncovered case through its direct-search
/// fallback.
#[allow(clippy::type_complexity)]
pub fn build_sp9_dagger(
    sp9: &SignedGraph,
    k4s_plus: &SignedGraph,
    k4s_minus: &SignedGraph,
) -> Result<(SignedGraph, usize, [usize; 3], [usize; 3]), SgError> {
    let subsets = three_subsets();
    let mut best: Option<(usize, SignedGraph, [usize; 3], [usize; 3])> = None;
    for &np in &subsets {
        for &nm in &subsets {
            if np.iter().any(|v| nm.contains(v)) {
                continue;
            }
            let dagger = attach_z(sp9, &np, &nm);
            let report = extension_lemma_report(&dagger, 9, k4s_plus, k4s_minus);
            let passing = report.cases.iter().filter(|c| c.ok).count();
            if passing == report.cases.len() {
                return Ok((dagger, 9, np, nm));
            }
            if best.as_ref().is_none_or(|(b, _, _, _)| passing > *b) {
                best = Some((passing, dagger, np, nm));
            }
        }
    }
    match best {
        Some((_, dagger, np, nm)) => Ok((dagger, 9, np, nm)),
        None => Err(SgError::Invalid("no disjoint attachment pair exists".into())),
    }
}

fn three_subsets() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..9usize {
        for b in (a + 1)..9 {
            for c in (b + 1)..9 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// SP_9 plus z = 9 joined positively to `np` and negatively to `nm`.
pub fn attach_z(sp9: &SignedGraph, np: &[usize; 3], nm: &[usize; 3]) -> SignedGraph {
    let mut edges: Vec<_> = sp9.edges().to_vec();
    for &u in np {
        edges.push((u, 9, Sign::Positive));
    }
    for &v in nm {
        edges.push((v, 9, Sign::Negative));
    }
    SignedGraph::new(10, &edges).unwrap()
}

/// SP_9 plus two vertices 0' = 9 and 1' = 10, attached under base vertices
/// (a, b) and an excluded vertex c: s(0'a) = s(0'1') = -, s(1'b) = +, and
/// 0', 1' copy a's and b's signs towards the remaining six vertices.
pub fn build_star_candidate(sp9: &SignedGraph, a: usize, b: usize, c: usize) -> SignedGraph {
    let mut edges: Vec<_> = sp9.edges().to_vec();
    edges.push((a, 9, Sign::Negative));
    edges.push((9, 10, Sign::Negative));
    edges.push((b, 10, Sign::Positive));
    for k in 0..9 {
        if k == a || k == b || k == c {
            continue;
        }
        edges.push((k, 9, sp9.sign(a, k).unwrap()));
        edges.push((k, 10, sp9.sign(b, k).unwrap()));
    }
    SignedGraph::new(11, &edges).unwrap()
}

/// Choose the lexicographically least (a, b, c) for which every connected
/// cubic signed graph on at most 8 vertices maps to the candidate.
pub fn build_sp9_star(sp9: &SignedGraph) -> Result<(SignedGraph, (usize, usize, usize)), SgError> {
    // precompute the sweep instances once, cheapest first
    let mut stages: Vec<Vec<SignedGraph>> = Vec::new();
    for n in [4usize, 6, 8] {
        let mut stage = Vec::new();
        for topo in enumerate_cubic_graphs(n)? {
            stage.extend(enumerate_signatures(&topo, true));
        }
        stages.push(stage);
    }
    for a in 0..9usize {
        for b in 0..9 {
            if b == a {
                continue;
            }
            for c in 0..9 {
                if c == a || c == b {
                    continue;
                }
                let cand = build_star_candidate(sp9, a, b, c);
                if stages.iter().all(|stage| {
                    stage.iter().all(|g| find_homomorphism(g, &cand, &PinSet::new()).is_some())
                }) {
                    return Ok((cand, (a, b, c)));
                }
            }
        }
    }
    Err(SgError::Invalid("no role choice passes the cubic sweep".into()))
}
