//! Text formats: the `.sg` edge-list format and graph6 ingestion.
//!
//! `.sg` layout: a header `p sg <n> <m>`, then `m` lines `e <u> <v> <+|->`.
//! Lines starting with `#` are comments; blank lines are ignored.

use crate::error::SgError;
use crate::graph::{Sign, SignedGraph};

pub fn parse_signed_graph(text: &str) -> Result<SignedGraph, SgError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, Sign)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(SgError::Parse { line: lineno, msg: "duplicate header".into() });
                }
                if fields.len() != 4 || fields[1] != "sg" {
                    return Err(SgError::Parse {
                        line: lineno,
                        msg: format!("expected `p sg <n> <m>`, got `{line}`"),
                    });
                }
                let n = fields[2].parse().map_err(|_| SgError::Parse {
                    line: lineno,
                    msg: format!("bad vertex count `{}`", fields[2]),
                })?;
                let m = fields[3].parse().map_err(|_| SgError::Parse {
                    line: lineno,
                    msg: format!("bad edge count `{}`", fields[3]),
                })?;
                header = Some((n, m));
            }
            "e" => {
                if header.is_none() {
                    return Err(SgError::Parse { line: lineno, msg: "edge before header".into() });
                }
                if fields.len() != 4 {
                    return Err(SgError::Parse {
                        line: lineno,
                        msg: format!("expected `e <u> <v> <+|->`, got `{line}`"),
                    });
                }
                let u: usize = fields[1].parse().map_err(|_| SgError::Parse {
                    line: lineno,
                    msg: format!("bad vertex `{}`", fields[1]),
                })?;
                let v: usize = fields[2].parse().map_err(|_| SgError::Parse {
                    line: lineno,
                    msg: format!("bad vertex `{}`", fields[2]),
                })?;
                let sign = match fields[3] {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    other => {
                        return Err(SgError::Parse {
                            line: lineno,
                            msg: format!("bad sign `{other}`"),
                        })
                    }
                };
                edges.push((u, v, sign));
            }
            other => {
                return Err(SgError::Parse {
                    line: lineno,
                    msg: format!("unknown record `{other}`"),
                })
            }
        }
    }
    let (n, m) = header.ok_or(SgError::Parse { line: 0, msg: "missing `p sg` header".into() })?;
    if edges.len() != m {
        return Err(SgError::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    SignedGraph::new(n, &edges)
}

pub fn serialize_signed_graph(g: &SignedGraph) -> String {
    let mut out = format!("p sg {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v, s) in g.edges() {
        out.push_str(&format!("e {} {} {}\n", u, v, s.symbol()));
    }
    out
}

/// Decode a graph6 string into an unsigned (all-positive) topology.
pub fn parse_graph6(g6: &str) -> Result<SignedGraph, SgError> {
    let bytes = g6.trim().as_bytes();
    if bytes.is_empty() {
        return Err(SgError::Graph6("empty string".into()));
    }
    let (n, rest) = if bytes[0] == b'~' {
        if bytes.len() >= 4 && bytes[1] != b'~' {
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                if !(63..=126).contains(&b) {
                    return Err(SgError::Graph6(format!("byte {b} out of range")));
                }
                n = (n << 6) | (b as usize - 63);
            }
            (n, &bytes[4..])
        } else {
            return Err(SgError::Graph6("unsupported size prefix".into()));
        }
    } else {
        if !(63..=126).contains(&bytes[0]) {
            return Err(SgError::Graph6(format!("byte {} out of range", bytes[0])));
        }
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let nbits = n.saturating_mul(n.saturating_sub(1)) / 2;
    let nbytes = (nbits + 5) / 6;
    if rest.len() != nbytes {
        return Err(SgError::Graph6(format!(
            "expected {nbytes} data bytes for n = {n}, got {}",
            rest.len()
        )));
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for &b in rest {
        if !(63..=126).contains(&b) {
            return Err(SgError::Graph6(format!("byte {b} out of range")));
        }
        let x = b - 63;
        for k in (0..6).rev() {
            bits.push((x >> k) & 1 == 1);
        }
    }
    // bit order: column j = 1..n, row i = 0..j
    let mut edges = Vec::new();
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j, Sign::Positive));
            }
            idx += 1;
        }
    }
    // padding bits must be zero
    if bits[nbits..].iter().any(|&b| b) {
        return Err(SgError::Graph6("nonzero padding bits".into()));
    }
    SignedGraph::new(n, &edges)
}

/// Encode a topology (signs ignored) as graph6.
pub fn to_graph6(g: &SignedGraph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.adjacent(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for &b in chunk {
            x = (x << 1) | (b as u8);
        }
        out.push(x + 63);
    }
    String::from_utf8(out).unwrap()
}

/// Combine a graph6 topology with a sign string.
///
/// Signs apply to the edges sorted lexicographically by `(u, v)` with `u < v`
/// (not in graph6 bit order).
pub fn parse_graph6_with_signs(g6: &str, signs: &str) -> Result<SignedGraph, SgError> {
    let topo = parse_graph6(g6)?;
    apply_signs(&topo, signs)
}

/// Re-sign a topology from a `+/-` string in sorted edge order.
pub fn apply_signs(topo: &SignedGraph, signs: &str) -> Result<SignedGraph, SgError> {
    let chars: Vec<char> = signs.trim().chars().collect();
    if chars.len() != topo.edge_count() {
        return Err(SgError::SignCountMismatch { got: chars.len(), expected: topo.edge_count() });
    }
    let mut edges = Vec::with_capacity(topo.edge_count());
    for (&(u, v, _), &c) in topo.edges().iter().zip(&chars) {
        let s = Sign::from_symbol(c)
            .ok_or_else(|| SgError::Invalid(format!("bad sign character `{c}`")))?;
        edges.push((u, v, s));
    }
    SignedGraph::new(topo.vertex_count(), &edges)
}

/// The sign string of a graph in sorted edge order.
pub fn sign_string(g: &SignedGraph) -> String {
    g.edges().iter().map(|&(_, _, s)| s.symbol()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_minimal_graphs() {
        let g = parse_signed_graph("p sg 2 1\ne 0 1 +\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(0, 1, Sign::Positive)]);

        let iso = parse_signed_graph("p sg 1 0\n").unwrap();
        assert_eq!(iso.vertex_count(), 1);
        assert_eq!(iso.edge_count(), 0);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(parse_signed_graph("p sg 2 2\ne 0 1 +\ne 0 1 -\n").is_err());
        assert!(parse_signed_graph("p sg 2 1\ne 0 2 +\n").is_err());
        assert!(parse_signed_graph("e 0 1 +\n").is_err());
        assert!(parse_signed_graph("p sg 2 1\ne 0 1 ?\n").is_err());
        assert!(parse_signed_graph("p sg 2 2\ne 0 1 +\n").is_err());
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let g = parse_signed_graph("# a comment\n\np sg 3 1\n# another\ne 1 2 -\n").unwrap();
        assert_eq!(g.edges(), &[(1, 2, Sign::Negative)]);
    }

    #[test]
    fn round_trip() {
        let g = parse_signed_graph("p sg 4 3\ne 0 1 +\ne 1 2 -\ne 2 3 +\n").unwrap();
        assert_eq!(parse_signed_graph(&serialize_signed_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_known_strings() {
        // K2 is "A_"; its single edge bit set.
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.vertex_count(), 2);
        assert_eq!(k2.edge_count(), 1);
        // K4 is "C~"
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.vertex_count(), 4);
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.is_regular(3));
    }

    #[test]
    fn graph6_round_trip() {
        let g = parse_signed_graph("p sg 5 4\ne 0 2 +\ne 0 4 +\ne 1 3 +\ne 3 4 +\n").unwrap();
        let enc = to_graph6(&g);
        assert_eq!(enc, "DQc");
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn signs_apply_in_sorted_edge_order() {
        let k2 = parse_graph6_with_signs("A_", "-").unwrap();
        assert_eq!(k2.edges(), &[(0, 1, Sign::Negative)]);

        let k4 = parse_graph6_with_signs("C~", "++++++").unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.edges().iter().all(|&(_, _, s)| s == Sign::Positive));

        // C4 as 0-1-2-3-0, one negative edge
        let c4topo = SignedGraph::new(
            4,
            &[
                (0, 1, Sign::Positive),
                (1, 2, Sign::Positive),
                (2, 3, Sign::Positive),
                (0, 3, Sign::Positive),
            ],
        )
        .unwrap();
        let c4 = parse_graph6_with_signs(&to_graph6(&c4topo), "+++-").unwrap();
        // sorted edge order: (0,1),(0,3),(1,2),(2,3)
        assert_eq!(c4.sign(2, 3), Some(Sign::Negative));
        assert_eq!(c4.sign(0, 3), Some(Sign::Positive));

        assert!(parse_graph6_with_signs("A_", "++").is_err());
    }
}
