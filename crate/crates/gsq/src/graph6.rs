//! Encoder/decoder for the graph6 text format: a printable-ASCII encoding of
//! an undirected graph's upper adjacency triangle, read in column order and
//! packed big-endian into 6-bit chunks offset by 63.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {0:#04x} outside graph6 range 63..=126")]
    ByteOutOfRange(u8),
    #[error("unsupported graph6 order header")]
    UnsupportedOrder,
    #[error("graph6 body has wrong length: expected {expected} bytes, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Encodes a graph as a graph6 line (without trailing newline).
///
/// Bits of the upper triangle are taken in column order — for each column
/// `v = 1..n`, rows `u = 0..v` — then packed six per byte, most significant
/// bit first, zero-padded, each byte offset by 63.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // 126 marker + 18-bit big-endian order (orders up to 258047)
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut byte = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            byte = (byte << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(byte + 63);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((byte << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. Leading `>>graph6<<` headers and surrounding
/// whitespace are tolerated.
pub fn from_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange(b));
        }
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 36-bit order marker: beyond anything this crate handles
            return Err(Graph6Error::UnsupportedOrder);
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::UnsupportedOrder);
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 {
        return Err(Graph6Error::Graph(GraphError::EmptyGraph));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            got: body.len(),
        });
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = body[idx / 6] - 63;
            if (byte >> (5 - idx % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_bw() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(to_graph6(&k3), "Bw");
        assert_eq!(from_graph6("Bw").unwrap(), k3);
    }

    #[test]
    fn five_vertex_golden() {
        // 0-2, 0-4, 1-3, 3-4 encodes to DQc
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn singleton_and_empty_graphs() {
        let k1 = Graph::from_edges(1, []).unwrap();
        assert_eq!(to_graph6(&k1), "@");
        assert_eq!(from_graph6("@").unwrap(), k1);
        let e3 = Graph::from_edges(3, []).unwrap();
        assert_eq!(to_graph6(&e3), "B?");
        assert_eq!(from_graph6("B?").unwrap(), e3);
    }

    #[test]
    fn header_and_whitespace_tolerated() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(from_graph6(">>graph6<<Bw\n").unwrap(), k3);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(from_graph6("B"), {
            Err(Graph6Error::WrongLength {
                expected: 1,
                got: 0,
            })
        });
        assert!(matches!(
            from_graph6("B\u{1}"),
            Err(Graph6Error::ByteOutOfRange(1))
        ));
    }

    #[test]
    fn large_order_header_roundtrip() {
        // a path on 70 vertices exercises the 18-bit order header
        let p = Graph::from_edges(70, (0..69).map(|i| (i, i + 1))).unwrap();
        let enc = to_graph6(&p);
        assert_eq!(enc.as_bytes()[0], 126);
        assert_eq!(from_graph6(&enc).unwrap(), p);
    }
}
