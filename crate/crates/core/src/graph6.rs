//! graph6 text encoding for graphs of order at most 62.
//!
//! One order byte (`order + 63`) followed by the upper-triangle adjacency
//! bits in column-major order, packed six bits per byte (most significant
//! first) and offset by 63.

use crate::graph::{Graph, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("illegal graph6 byte {byte:#04x} at position {pos}")]
    IllegalByte { pos: usize, byte: u8 },
    #[error("graph6 order {0} not supported (maximum 62)")]
    UnsupportedOrder(u32),
    #[error("graph6 string has {got} bytes, expected {expected} for order {order}")]
    BadLength { order: u32, expected: usize, got: usize },
    #[error("nonzero padding bits after the edge data")]
    TrailingBits,
}

/// Pairs `(u, v)` with `u < v` in graph6 bit order: column-major over the
/// upper triangle, i.e. (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
pub fn pair_order(order: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..order).flat_map(move |v| (0..v).map(move |u| (u, v)))
}

fn bit_count(n: u32) -> usize {
    n as usize * (n as usize).saturating_sub(1) / 2
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (bit_count(n) + 5) / 6);
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0u8;
    for (u, v) in pair_order(n) {
        acc <<= 1;
        if g.has_edge(u, v) {
            acc |= 1;
        }
        filled += 1;
        if filled == 6 {
            out.push(acc + 63);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::IllegalByte { pos, byte: b });
        }
    }
    let head = (bytes[0] - 63) as u32;
    if head == 63 {
        // Multi-byte order prefix; such orders exceed the supported cap.
        return Err(Graph6Error::UnsupportedOrder(63));
    }
    let n = head;
    if n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let bits = bit_count(n);
    let expected = 1 + (bits + 5) / 6;
    if bytes.len() != expected {
        return Err(Graph6Error::BadLength {
            order: n,
            expected,
            got: bytes.len(),
        });
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for (u, v) in pair_order(n) {
        let byte = bytes[1 + k / 6] - 63;
        if byte & (1 << (5 - (k % 6))) != 0 {
            edges.push((u, v));
        }
        k += 1;
    }
    // Padding bits beyond the edge data must be zero.
    if bits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        let pad = 6 - (bits % 6);
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::TrailingBits);
        }
    }
    Ok(Graph::build(n, &edges).expect("decoded edges are in range"))
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
        decode(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_encodes_to_at_sign() {
        let g = Graph::build(1, &[]).unwrap();
        assert_eq!(encode(&g), "@");
    }

    #[test]
    fn empty_graph_encodes_to_question_mark() {
        let g = Graph::build(0, &[]).unwrap();
        assert_eq!(encode(&g), "?");
        assert_eq!(decode("?").unwrap().order(), 0);
    }

    #[test]
    fn p3_encodes_to_bg() {
        let g = Graph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(encode(&g), "Bg");
    }

    #[test]
    fn k4_encodes_to_tilde() {
        let g = Graph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode(&g), "C~");
    }

    #[test]
    fn decode_rejects_illegal_byte() {
        assert_eq!(
            decode("B\n"),
            Err(Graph6Error::IllegalByte { pos: 1, byte: 10 })
        );
    }

    #[test]
    fn decode_rejects_bad_length() {
        assert!(matches!(decode("B"), Err(Graph6Error::BadLength { .. })));
        assert!(matches!(decode("Bgg"), Err(Graph6Error::BadLength { .. })));
    }

    #[test]
    fn decode_rejects_nonzero_padding() {
        // Order 3 uses three edge bits; the low three bits must stay clear.
        let bad = String::from_utf8(vec![b'B', 63 + 0b000001]).unwrap();
        assert_eq!(decode(&bad), Err(Graph6Error::TrailingBits));
    }

    #[test]
    fn decode_rejects_empty_and_multibyte_order() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("~??"), Err(Graph6Error::UnsupportedOrder(63)));
    }

    #[test]
    fn round_trip_small() {
        for text in ["?", "@", "A_", "A?", "Bg", "C~", "Cl", "DQc"] {
            let g = decode(text).unwrap();
            assert_eq!(encode(&g), text);
        }
    }
}
