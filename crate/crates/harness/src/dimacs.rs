//! DIMACS edge format: `p edge N M`, `e U V` with 1-based ids, `c` comments.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;
use vc4_core::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimacsError {
    #[error("line {line}: malformed header {text:?}")]
    BadHeader { line: usize, text: String },
    #[error("missing `p edge` header")]
    MissingHeader,
    #[error("line {line}: second header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: edge before header")]
    EdgeBeforeHeader { line: usize },
    #[error("line {line}: malformed edge {text:?}")]
    BadEdge { line: usize, text: String },
    #[error("line {line}: vertex {id} outside 1..={n}")]
    OutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop on {id}")]
    SelfLoop { line: usize, id: usize },
    #[error("line {line}: unrecognized line {text:?}")]
    Unknown { line: usize, text: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parsed graph plus any non-fatal complaints.
#[derive(Debug)]
pub struct Parsed {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn parse_dimacs(text: &str) -> Result<Parsed, DimacsError> {
    let mut n = None;
    let mut declared_m = 0;
    let mut seen = BTreeSet::new();
    let mut warnings = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut words = raw.split_whitespace();
        match words.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(DimacsError::DuplicateHeader { line });
                }
                let bad = || DimacsError::BadHeader { line, text: raw.to_string() };
                let fields: Vec<&str> = words.collect();
                let [kind, nn, mm] = fields[..] else { return Err(bad()) };
                if kind != "edge" {
                    return Err(bad());
                }
                n = Some(nn.parse::<usize>().map_err(|_| bad())?);
                declared_m = mm.parse::<usize>().map_err(|_| bad())?;
            }
            Some("e") => {
                let n = n.ok_or(DimacsError::EdgeBeforeHeader { line })?;
                let bad = || DimacsError::BadEdge { line, text: raw.to_string() };
                let ids: Vec<usize> = words.map(|w| w.parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
                let [u, v] = ids[..] else { return Err(bad()) };
                if let Some(&id) = [u, v].iter().find(|&&id| id == 0 || id > n) {
                    return Err(DimacsError::OutOfRange { line, id, n });
                }
                if u == v {
                    return Err(DimacsError::SelfLoop { line, id: u });
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    warnings.push(format!("line {line}: duplicate edge {u}-{v} ignored"));
                }
            }
            Some(_) => return Err(DimacsError::Unknown { line, text: raw.to_string() }),
        }
    }
    let n = n.ok_or(DimacsError::MissingHeader)?;
    if declared_m != seen.len() {
        warnings.push(format!("header declares {declared_m} edges, found {} distinct", seen.len()));
    }
    let edges: Vec<(usize, usize)> = seen.into_iter().collect();
    Ok(Parsed { graph: Graph::from_edges(n, &edges)?, warnings })
}

/// Writes live vertices renumbered `1..=n` in id order.
pub fn write_dimacs(g: &Graph) -> String {
    let order: Vec<_> = g.vertices().collect();
    let pos = |v| order.binary_search(&v).expect("live vertex") + 1;
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "e {} {}", pos(u), pos(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_on_three() {
        let p = parse_dimacs("c tiny\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(p.graph.n(), 3);
        assert_eq!(p.graph.num_edges(), 2);
        assert!(p.warnings.is_empty());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_dimacs("p edge 2 1\ne 1 1\n"), Err(DimacsError::SelfLoop { .. })));
        assert!(matches!(parse_dimacs("p edge 2 1\ne 1 3\n"), Err(DimacsError::OutOfRange { id: 3, .. })));
        assert!(matches!(parse_dimacs("p edge x 1\n"), Err(DimacsError::BadHeader { .. })));
        assert!(matches!(parse_dimacs("p col 2 1\n"), Err(DimacsError::BadHeader { .. })));
        assert!(matches!(parse_dimacs("e 1 2\n"), Err(DimacsError::EdgeBeforeHeader { .. })));
        assert!(matches!(parse_dimacs("e 1 2\n").unwrap_err(), DimacsError::EdgeBeforeHeader { line: 1 }));
        assert!(matches!(parse_dimacs("c only\n"), Err(DimacsError::MissingHeader)));
        assert!(matches!(parse_dimacs("p edge 2 1\ne 1\n"), Err(DimacsError::BadEdge { .. })));
    }

    #[test]
    fn duplicates_warn() {
        let p = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(p.graph.num_edges(), 1);
        assert_eq!(p.warnings.len(), 2);
    }
}
