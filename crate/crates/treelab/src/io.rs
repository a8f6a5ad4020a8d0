//! Graph serialization: 1-based edge-list text, graph6 bytes, and the
//! deterministic JSON encoding shared by every report.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: vertex {index} out of range 1..={order}")]
    IndexOutOfRange { line: usize, index: usize, order: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-pair {v} {v}")]
    SelfPair { line: usize, v: usize },
    #[error("header declares {expected} edges but {got} follow")]
    SizeMismatch { expected: usize, got: usize },
}

/// Parses an edge-list document: a `order size` header line followed by
/// `size` lines of 1-based endpoint pairs.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines.next().ok_or(EdgeListError::Parse {
        line: 1,
        message: "empty document".into(),
    })?;
    let (order, size) = parse_pair(line_no, header)?;
    if order == 0 {
        return Err(EdgeListError::Parse {
            line: line_no,
            message: "order must be positive".into(),
        });
    }
    let mut g = Graph::empty(order).expect("positive order");
    let mut seen = 0usize;
    for (line_no, line) in lines {
        let (u, v) = parse_pair(line_no, line)?;
        for &ix in &[u, v] {
            if ix == 0 || ix > order {
                return Err(EdgeListError::IndexOutOfRange { line: line_no, index: ix, order });
            }
        }
        seen += 1;
        match g.insert_edge(u - 1, v - 1) {
            Ok(()) => {}
            Err(GraphError::SelfLoop(_)) => {
                return Err(EdgeListError::SelfPair { line: line_no, v: u })
            }
            Err(GraphError::DuplicateEdge { .. }) => {
                let (a, b) = (u.min(v), u.max(v));
                return Err(EdgeListError::DuplicateEdge { line: line_no, u: a, v: b });
            }
            Err(e) => {
                return Err(EdgeListError::Parse { line: line_no, message: e.to_string() })
            }
        }
    }
    if seen != size {
        return Err(EdgeListError::SizeMismatch { expected: size, got: seen });
    }
    Ok(g)
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let mut it = text.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize, EdgeListError> {
        tok.ok_or(EdgeListError::Parse {
            line,
            message: "expected two integers".into(),
        })?
        .parse()
        .map_err(|_| EdgeListError::Parse {
            line,
            message: format!("invalid integer in {text:?}"),
        })
    };
    let a = parse(it.next())?;
    let b = parse(it.next())?;
    if it.next().is_some() {
        return Err(EdgeListError::Parse {
            line,
            message: format!("trailing tokens in {text:?}"),
        });
    }
    Ok((a, b))
}

/// Writes the edge-list document this module parses: `order size` header
/// then 1-based pairs in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {value:#04x} at offset {offset} outside the graph6 range 63..=126")]
    BadByte { offset: usize, value: u8 },
    #[error("order {0} exceeds the supported graph6 maximum 258047")]
    TooLarge(usize),
    #[error("expected {expected} adjacency bytes, found {got}")]
    BadLength { expected: usize, got: usize },
}

/// Parses a graph6 encoding: the N(n) order prefix (short form for
/// n <= 62, '~'-prefixed 18-bit form above) followed by the upper-triangle
/// adjacency bits packed 6 per byte, column-major, offset by 63.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let bytes: &[u8] = match bytes {
        [rest @ .., b'\n'] => match rest {
            [r @ .., b'\r'] => r,
            r => r,
        },
        b => b,
    };
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte { offset, value: b });
        }
    }
    let (order, body) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadLength { expected: 4, got: bytes.len() });
        }
        if bytes[1] == 126 {
            // 36-bit form is beyond the supported range
            return Err(Graph6Error::TooLarge(usize::MAX));
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if order == 0 {
        // graph6 encodes the empty graph on 0 vertices; we require order >= 1
        return Err(Graph6Error::BadLength { expected: 1, got: 0 });
    }
    let bit_count = order * (order - 1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::BadLength { expected, got: body.len() });
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for j in 1..order {
        for i in 0..j {
            let byte = body[bit_index / 6] - 63;
            let bit = byte >> (5 - bit_index % 6) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
            if bit_index == bit_count {
                break 'outer;
            }
        }
    }
    Graph::from_edges(order, &edges).map_err(|_| Graph6Error::BadLength {
        expected,
        got: body.len(),
    })
}

/// Writes the canonical graph6 encoding (short order prefix whenever
/// n <= 62).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= 258047, "graph6 order cap");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut current = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            current = current << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + current);
                current = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (current << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Serializes any report as deterministic JSON: object keys sorted,
/// 2-space indentation, trailing newline.
pub fn to_json_pretty(value: &impl serde::Serialize) -> String {
    let v = serde_json::to_value(value).expect("reports serialize infallibly");
    let mut s = serde_json::to_string_pretty(&v).expect("valid JSON value");
    s.push('\n');
    s
}
