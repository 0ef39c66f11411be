//! graph6 and DIMACS-style edge-list serialization.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("empty graph6 input")]
    Empty,
    #[error("invalid graph6 byte 0x{0:02x}")]
    BadByte(u8),
    #[error("truncated graph6 data: need {need} payload bytes, got {got}")]
    Truncated { need: usize, got: usize },
    #[error("trailing graph6 data after {0} payload bytes")]
    TrailingData(usize),
    #[error("graph6 order {0} not supported")]
    OrderUnsupported(usize),
    #[error("malformed edge-list line {lineno}: {line:?}")]
    BadEdgeLine { lineno: usize, line: String },
    #[error("edge-list header missing (`p edge <n> <m>`)")]
    MissingHeader,
    #[error("edge-list declares m = {declared} but lists {actual} edges")]
    EdgeCountMismatch { declared: usize, actual: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Upper-triangle bit order: x01, x02, x12, x03, x13, x23, ...
fn triangle_bits(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    bits
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        // standard extension: '~' then 18 bits of n in three 6-bit groups
        bytes.push(126);
        bytes.push(((n >> 12) & 0x3f) as u8 + 63);
        bytes.push(((n >> 6) & 0x3f) as u8 + 63);
        bytes.push((n & 0x3f) as u8 + 63);
    }
    let bits = triangle_bits(g);
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                val |= 1 << (5 - i);
            }
        }
        bytes.push(val + 63);
    }
    let mut s = String::from_utf8(bytes).expect("graph6 bytes are ascii");
    s.push('\n');
    s
}

pub fn from_graph6(input: &str) -> Result<Graph, FormatError> {
    let data = input.trim_end_matches(['\n', '\r']).as_bytes();
    if data.is_empty() {
        return Err(FormatError::Empty);
    }
    let pos;
    let decode = |b: u8| -> Result<usize, FormatError> {
        if !(63..=126).contains(&b) {
            return Err(FormatError::BadByte(b));
        }
        Ok((b - 63) as usize)
    };
    let n = if data[0] == 126 {
        if data.len() < 4 {
            return Err(FormatError::Truncated { need: 4, got: data.len() });
        }
        if data[1] == 126 {
            // 8-byte form encodes n > 258047, beyond the vertex cap anyway
            return Err(FormatError::OrderUnsupported(usize::MAX));
        }
        pos = 4;
        (decode(data[1])? << 12) | (decode(data[2])? << 6) | decode(data[3])?
    } else {
        pos = 1;
        decode(data[0])?
    };
    if n > crate::bitset::MAX_VERTICES {
        return Err(FormatError::OrderUnsupported(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let got = data.len() - pos;
    if got < need {
        return Err(FormatError::Truncated { need, got });
    }
    if got > need {
        return Err(FormatError::TrailingData(need));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let group = decode(data[pos + bit / 6])?;
            if group >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// `p edge <n> <m>` header followed by `e <u> <v>` lines, 1-based.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    s
}

pub fn from_edge_list_text(input: &str) -> Result<Graph, FormatError> {
    let mut n = None;
    let mut declared_m = 0usize;
    let mut edges = Vec::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let bad = || FormatError::BadEdgeLine { lineno: lineno + 1, line: line.to_string() };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["p", "edge", ns, ms] => {
                n = Some(ns.parse::<usize>().map_err(|_| bad())?);
                declared_m = ms.parse::<usize>().map_err(|_| bad())?;
            }
            ["e", us, vs] => {
                let u: usize = us.parse().map_err(|_| bad())?;
                let v: usize = vs.parse().map_err(|_| bad())?;
                if u == 0 || v == 0 {
                    return Err(bad());
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(bad()),
        }
    }
    let n = n.ok_or(FormatError::MissingHeader)?;
    let g = Graph::from_edge_list(n, &edges)?;
    if g.m() != declared_m {
        return Err(FormatError::EdgeCountMismatch { declared: declared_m, actual: g.m() });
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_strings() {
        // standard examples: K3 is "Bw", K4 is "C~"
        assert_eq!(to_graph6(&Graph::complete(3)), "Bw\n");
        assert_eq!(to_graph6(&Graph::complete(4)), "C~\n");
        assert_eq!(from_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(from_graph6("C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn path_on_three_vertices() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let s = to_graph6(&p3);
        assert_eq!(from_graph6(&s).unwrap(), p3);
    }

    #[test]
    fn large_order_header() {
        let g = Graph::empty(100);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap().n(), 100);
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(from_graph6(""), Err(FormatError::Empty)));
        assert!(matches!(from_graph6("B"), Err(FormatError::Truncated { .. })));
        assert!(matches!(from_graph6("Bww"), Err(FormatError::TrailingData(_))));
        assert!(matches!(from_graph6("B\x1f"), Err(FormatError::BadByte(_))));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(6).unwrap();
        let text = to_edge_list(&g);
        assert!(text.starts_with("p edge 6 6\n"));
        assert_eq!(from_edge_list_text(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(from_edge_list_text("e 1 2\n"), Err(FormatError::MissingHeader)));
        assert!(matches!(
            from_edge_list_text("p edge 3 5\ne 1 2\n"),
            Err(FormatError::EdgeCountMismatch { declared: 5, actual: 1 })
        ));
        assert!(matches!(
            from_edge_list_text("p edge 3 1\ne 0 2\n"),
            Err(FormatError::BadEdgeLine { .. })
        ));
    }
}
