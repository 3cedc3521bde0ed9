//! Plain-text edge-list format.
//!
//! Line 1: the vertex count. Every following non-empty line outside comments
//! holds two whitespace-separated vertex indices. Lines starting with `#` are
//! comments. Duplicate edges collapse; self-loops and out-of-range endpoints
//! are errors carrying the offending line number.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("write {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// Parses the edge-list format from a string.
pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        if order.is_none() {
            let n: usize = fields
                .next()
                .unwrap()
                .parse()
                .map_err(|_| IoError::Parse {
                    line: line_no,
                    message: format!("expected vertex count, got `{line}`"),
                })?;
            if fields.next().is_some() {
                return Err(IoError::Parse {
                    line: line_no,
                    message: "header line must hold exactly the vertex count".into(),
                });
            }
            order = Some(n);
            continue;
        }
        let parse_endpoint = |tok: Option<&str>| -> Result<usize, IoError> {
            let tok = tok.ok_or_else(|| IoError::Parse {
                line: line_no,
                message: "expected two vertex indices".into(),
            })?;
            tok.parse().map_err(|_| IoError::Parse {
                line: line_no,
                message: format!("`{tok}` is not a vertex index"),
            })
        };
        let u = parse_endpoint(fields.next())?;
        let v = parse_endpoint(fields.next())?;
        if fields.next().is_some() {
            return Err(IoError::Parse {
                line: line_no,
                message: "edge line must hold exactly two indices".into(),
            });
        }
        edges.push((u, v, line_no));
    }

    let n = order.ok_or(IoError::Parse { line: 0, message: "empty input".into() })?;
    // Validate one edge at a time so errors point at their source line.
    for &(u, v, line) in &edges {
        if u == v {
            return Err(IoError::Graph { line, source: GraphError::SelfLoop(u) });
        }
        if u >= n || v >= n {
            return Err(IoError::Graph {
                line,
                source: GraphError::VertexOutOfRange { vertex: u.max(v), order: n },
            });
        }
    }
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
    Ok(Graph::new(n, &pairs).expect("edges pre-validated"))
}

/// Reads a graph from an edge-list file.
pub fn read_edge_list(path: &Path) -> Result<Graph, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse_edge_list(&text)
}

/// Canonical serialization: header, then edges in ascending `(u, v)` order
/// with `u < v`, one per line. Parsing the output reproduces the graph.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Writes the canonical edge-list form to a file.
pub fn write_edge_list(g: &Graph, path: &Path) -> Result<(), IoError> {
    std::fs::write(path, format_edge_list(g)).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}
