//! Graph file formats.
//!
//! DIMACS: a single `p edge <n> <m>` header, then `m` lines `e <u> <v>` with
//! 1-indexed endpoints; `c` lines are comments. The declared edge count is
//! checked strictly.
//!
//! Edge list: whitespace-separated 0-indexed pairs, `#` starts a comment, and
//! an optional leading `n=<count>` line fixes the vertex count (otherwise it
//! is the maximum id plus one).

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    EdgeList,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {0}: malformed {1}")]
    Malformed(usize, String),
    #[error("missing 'p edge' header")]
    MissingHeader,
    #[error("line {0}: second 'p' header")]
    DuplicateHeader(usize),
    #[error("edge count mismatch: header declares {declared}, file has {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("line {0}: vertex {1} out of range 1..={2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_graph(input: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::Dimacs => parse_dimacs(input),
        GraphFormat::EdgeList => parse_edge_list(input),
    }
}

/// Guesses the format from the first meaningful line: DIMACS files start
/// with a `c` or `p` line.
pub fn sniff_format(input: &str) -> GraphFormat {
    for line in input.lines() {
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        if t.starts_with("c ") || t == "c" || t.starts_with("p ") {
            return GraphFormat::Dimacs;
        }
        return GraphFormat::EdgeList;
    }
    GraphFormat::EdgeList
}

fn parse_dimacs(input: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (no, raw) in input.lines().enumerate() {
        let lineno = no + 1;
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader(lineno));
                }
                let kind = parts.next();
                let n = parts.next().and_then(|t| t.parse::<usize>().ok());
                let m = parts.next().and_then(|t| t.parse::<usize>().ok());
                match (kind, n, m, parts.next()) {
                    (Some("edge"), Some(n), Some(m), None) => header = Some((n, m)),
                    _ => return Err(ParseError::Malformed(lineno, format!("header '{line}'"))),
                }
            }
            Some("e") => {
                let (n, _) = header.ok_or(ParseError::MissingHeader)?;
                let u = parts.next().and_then(|t| t.parse::<usize>().ok());
                let v = parts.next().and_then(|t| t.parse::<usize>().ok());
                match (u, v, parts.next()) {
                    (Some(u), Some(v), None) => {
                        for w in [u, v] {
                            if w == 0 || w > n {
                                return Err(ParseError::VertexOutOfRange(lineno, w, n));
                            }
                        }
                        edges.push((u - 1, v - 1));
                    }
                    _ => return Err(ParseError::Malformed(lineno, format!("edge '{line}'"))),
                }
            }
            _ => return Err(ParseError::Malformed(lineno, format!("line '{line}'"))),
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch { declared: m, found: edges.len() });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

fn parse_edge_list(input: &str) -> Result<Graph, ParseError> {
    let mut declared_n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_id = None;
    let mut saw_content = false;
    for (no, raw) in input.lines().enumerate() {
        let lineno = no + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            if saw_content || declared_n.is_some() {
                return Err(ParseError::Malformed(lineno, "n= header after content".into()));
            }
            declared_n = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| ParseError::Malformed(lineno, format!("header '{line}'")))?,
            );
            continue;
        }
        saw_content = true;
        let mut parts = line.split_whitespace();
        let u = parts.next().and_then(|t| t.parse::<usize>().ok());
        let v = parts.next().and_then(|t| t.parse::<usize>().ok());
        match (u, v, parts.next()) {
            (Some(u), Some(v), None) => {
                max_id = Some(max_id.unwrap_or(0).max(u).max(v));
                edges.push((u, v));
            }
            _ => return Err(ParseError::Malformed(lineno, format!("edge '{line}'"))),
        }
    }
    let n = declared_n.unwrap_or(max_id.map_or(0, |x| x + 1));
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::Dimacs => {
            out.push_str(&format!("p edge {} {}\n", g.n(), g.m()));
            for (u, v) in g.edges() {
                out.push_str(&format!("e {} {}\n", u + 1, v + 1));
            }
        }
        GraphFormat::EdgeList => {
            out.push_str(&format!("n={}\n", g.n()));
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
        }
    }
    out
}
