//! The graph6 interchange format, short form only (`n <= 62`).
//!
//! A record is one printable line: the byte `n + 63`, then the upper
//! triangle of the adjacency matrix in column-major order (`x(0,1)`,
//! `x(0,2)`, `x(1,2)`, `x(0,3)`, ...) packed six bits per byte, each byte
//! offset by 63. Trailing pad bits must be zero.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Decodes a graph6 record into a vertex count and edge list. Tolerates an
/// optional `>>graph6<<` prefix and surrounding whitespace; performs no
/// degree or connectivity checks.
pub fn decode(text: &str) -> Result<(usize, Vec<(usize, usize)>), Graph6Error> {
    let mut body = text.trim();
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] == b'~' {
        return Err(Graph6Error::LongForm);
    }
    if bytes[0] < OFFSET || bytes[0] > OFFSET + 62 {
        return Err(Graph6Error::BadByte(bytes[0]));
    }
    let n = (bytes[0] - OFFSET) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    let bit_count = n * (n - 1) / 2;
    let expected = 1 + bit_count.div_ceil(6);
    if bytes.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            got: bytes.len(),
        });
    }
    let mut bits = Vec::with_capacity(bytes.len() * 6);
    for &b in &bytes[1..] {
        if !(OFFSET..=OFFSET + 63).contains(&b) {
            return Err(Graph6Error::BadByte(b));
        }
        let group = b - OFFSET;
        for k in (0..6).rev() {
            bits.push(group >> k & 1 == 1);
        }
    }
    if bits[bit_count..].iter().any(|&b| b) {
        return Err(Graph6Error::Padding);
    }
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[pos] {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    Ok((n, edges))
}

/// Encodes `n` vertices and the given adjacency predicate as a graph6
/// record. `n` must be in `1..=62`.
pub fn encode(n: usize, is_edge: impl Fn(usize, usize) -> bool) -> String {
    assert!((1..=62).contains(&n), "graph6 short form needs 1 <= n <= 62");
    let bit_count = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + bit_count.div_ceil(6));
    out.push(OFFSET + n as u8);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(is_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (group << (6 - filled)));
    }
    // All bytes are in 63..=126, always valid ASCII.
    String::from_utf8(out).unwrap()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Graph6Error {
    Empty,
    /// First byte is `~`: the long form is not supported.
    LongForm,
    ZeroVertices,
    BadByte(u8),
    Length { expected: usize, got: usize },
    /// Nonzero bits past the end of the upper triangle.
    Padding,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty record"),
            Graph6Error::LongForm => write!(f, "long form (n > 62) not supported"),
            Graph6Error::ZeroVertices => write!(f, "record encodes zero vertices"),
            Graph6Error::BadByte(b) => write!(f, "byte 0x{:02x} outside graph6 range", b),
            Graph6Error::Length { expected, got } => {
                write!(f, "record length {} but {} bytes expected", got, expected)
            }
            Graph6Error::Padding => write!(f, "nonzero padding bits"),
        }
    }
}

impl core::error::Error for Graph6Error {}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn decodes_known_records() {
        // Star on five vertices.
        let (n, edges) = decode("Ds_").unwrap();
        assert_eq!(n, 5);
        assert_eq!(edges, vec![(0, 1), (0, 2), (0, 3), (0, 4)]);
        // Path on five vertices.
        let (n, edges) = decode("DhC").unwrap();
        assert_eq!(n, 5);
        assert_eq!(edges, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        // Cycle on five vertices; edges come out in column-major order.
        let (n, edges) = decode("Dhc").unwrap();
        assert_eq!(n, 5);
        assert_eq!(edges, vec![(0, 1), (1, 2), (2, 3), (0, 4), (3, 4)]);
        // Single vertex, single edge.
        assert_eq!(decode("@").unwrap(), (1, vec![]));
        assert_eq!(decode("A_").unwrap(), (2, vec![(0, 1)]));
    }

    #[test]
    fn tolerates_header_and_whitespace() {
        assert_eq!(decode(">>graph6<<Ds_\n").unwrap().0, 5);
        assert_eq!(decode("  Ds_  ").unwrap().0, 5);
    }

    #[test]
    fn encodes_known_records() {
        let star = [(0usize, 1usize), (0, 2), (0, 3), (0, 4)];
        let enc = encode(5, |u, v| star.contains(&(u, v)) || star.contains(&(v, u)));
        assert_eq!(enc, "Ds_");
        assert_eq!(encode(1, |_, _| false), "@");
        // Complete graph on five vertices.
        assert_eq!(encode(5, |_, _| true), "D~{");
    }

    #[test]
    fn rejects_malformed_records() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("~??"), Err(Graph6Error::LongForm));
        assert_eq!(decode("?"), Err(Graph6Error::ZeroVertices));
        assert_eq!(decode("Ds"), Err(Graph6Error::Length { expected: 3, got: 2 }));
        assert_eq!(decode("Ds_W"), Err(Graph6Error::Length { expected: 3, got: 4 }));
        assert_eq!(decode("D\x20_"), Err(Graph6Error::BadByte(0x20)));
        // "A" + group with a bit outside the single valid position.
        assert_eq!(decode("A?"), Ok((2, vec![])));
        assert_eq!(decode("AO"), Err(Graph6Error::Padding));
    }

    #[test]
    fn round_trips_cycle() {
        let (n, edges) = decode("EhEG").unwrap();
        assert_eq!(n, 6);
        let enc = encode(n, |u, v| edges.contains(&(u, v)) || edges.contains(&(v, u)));
        assert_eq!(enc, "EhEG");
    }
}
