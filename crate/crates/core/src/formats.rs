//! Graph file formats: a DIMACS-flavored edge list and graph6.
//!
//! Edge list grammar, line oriented and 1-based:
//!
//! ```text
//! c optional comment
//! p edge <vertices> <edges>
//! e <u> <v>
//! ```
//!
//! Rendering is canonical (header first, edges sorted), so
//! `render_edge_list(parse_edge_list(t))` is the normal form of `t`.
//!
//! graph6 is the 6-bit printable encoding of the upper triangle of the
//! adjacency matrix, column by column, preceded by the vertex count.

use crate::graph::{Graph, GraphError};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EdgeListError {
    #[error("missing 'p edge <n> <m>' header")]
    MissingHeader,
    #[error("line {0}: malformed header")]
    MalformedHeader(usize),
    #[error("line {0}: duplicate header")]
    DuplicateHeader(usize),
    #[error("line {0}: malformed edge line")]
    MalformedEdge(usize),
    #[error("line {0}: edge before header")]
    EdgeBeforeHeader(usize),
    #[error("line {line}: vertex {vertex} out of range 1..={order}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        order: usize,
    },
    #[error("line {0}: loop edge")]
    Loop(usize),
    #[error("line {0}: duplicate edge")]
    DuplicateEdge(usize),
    #[error("line {0}: unrecognized line")]
    UnknownLine(usize),
    #[error("header declares {declared} edges but {actual} were listed")]
    EdgeCountMismatch { declared: usize, actual: usize },
}

/// Parses the edge-list format. Indices in the file are 1-based; the
/// resulting graph is 0-based. Blank lines and `c` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut graph: Option<Graph> = None;
    let mut declared = 0usize;
    for (number, line) in text.lines().enumerate() {
        let number = number + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("p") => {
                if graph.is_some() {
                    return Err(EdgeListError::DuplicateHeader(number));
                }
                let malformed = || EdgeListError::MalformedHeader(number);
                if fields.next() != Some("edge") {
                    return Err(malformed());
                }
                let n: usize = fields
                    .next()
                    .ok_or_else(malformed)?
                    .parse()
                    .map_err(|_| malformed())?;
                let m: usize = fields
                    .next()
                    .ok_or_else(malformed)?
                    .parse()
                    .map_err(|_| malformed())?;
                if fields.next().is_some() {
                    return Err(malformed());
                }
                graph = Some(Graph::new(n));
                declared = m;
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or(EdgeListError::EdgeBeforeHeader(number))?;
                let malformed = || EdgeListError::MalformedEdge(number);
                let u: usize = fields
                    .next()
                    .ok_or_else(malformed)?
                    .parse()
                    .map_err(|_| malformed())?;
                let v: usize = fields
                    .next()
                    .ok_or_else(malformed)?
                    .parse()
                    .map_err(|_| malformed())?;
                if fields.next().is_some() {
                    return Err(malformed());
                }
                let order = g.vertex_count();
                if u == 0 || u > order {
                    return Err(EdgeListError::VertexOutOfRange {
                        line: number,
                        vertex: u,
                        order,
                    });
                }
                if v == 0 || v > order {
                    return Err(EdgeListError::VertexOutOfRange {
                        line: number,
                        vertex: v,
                        order,
                    });
                }
                g.add_edge(u - 1, v - 1).map_err(|e| match e {
                    GraphError::SelfLoop(_) => EdgeListError::Loop(number),
                    GraphError::DuplicateEdge(..) => EdgeListError::DuplicateEdge(number),
                    _ => EdgeListError::MalformedEdge(number),
                })?;
            }
            _ => return Err(EdgeListError::UnknownLine(number)),
        }
    }
    let graph = graph.ok_or(EdgeListError::MissingHeader)?;
    let actual = graph.edge_count();
    if actual != declared {
        return Err(EdgeListError::EdgeCountMismatch { declared, actual });
    }
    Ok(graph)
}

/// Canonical edge-list rendering: header, then edges sorted with `u < v`,
/// 1-based.
pub fn render_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("invalid byte {byte:#04x} at position {pos}")]
    InvalidByte { byte: u8, pos: usize },
    #[error("input ends before the declared graph is complete (need {expected} data bytes, got {actual})")]
    Truncated { expected: usize, actual: usize },
    #[error("{actual} bytes where {expected} were expected (trailing data)")]
    TrailingBytes { expected: usize, actual: usize },
    #[error("graphs of order above 258047 are not supported")]
    OrderTooLarge,
}

/// Parses a graph6 string (optionally prefixed with `>>graph6<<`).
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let check = |pos: usize| -> Result<u64, Graph6Error> {
        match bytes.get(pos) {
            Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
            Some(&b) => Err(Graph6Error::InvalidByte { byte: b, pos }),
            None => Err(Graph6Error::Truncated {
                expected: pos + 1,
                actual: bytes.len(),
            }),
        }
    };
    let (n, data_start) = if bytes[0] == 126 {
        if bytes.len() > 1 && bytes[1] == 126 {
            return Err(Graph6Error::OrderTooLarge);
        }
        let n = (check(1)? << 12) | (check(2)? << 6) | check(3)?;
        (n as usize, 4)
    } else {
        (check(0)? as usize, 1)
    };
    let pair_bits = n.saturating_sub(1) * n / 2;
    let data_bytes = pair_bits.div_ceil(6);
    if bytes.len() < data_start + data_bytes {
        return Err(Graph6Error::Truncated {
            expected: data_start + data_bytes,
            actual: bytes.len(),
        });
    }
    if bytes.len() > data_start + data_bytes {
        return Err(Graph6Error::TrailingBytes {
            expected: data_start + data_bytes,
            actual: bytes.len(),
        });
    }
    let mut g = Graph::new(n);
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let value = check(data_start + bit / 6)?;
            if value >> (5 - bit % 6) & 1 == 1 {
                g.add_edge_unchecked(u, v);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Renders a graph as a graph6 string.
pub fn render_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 rendering supports order <= 258047");
        bytes.push(126);
        bytes.push(((n >> 12) & 63) as u8 + 63);
        bytes.push(((n >> 6) & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    }
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            chunk <<= 1;
            if g.has_edge(u, v) {
                chunk |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("printable range")
}
