//! graph6 encoding, single-byte size form only (n <= 62).

use crate::graph::{Graph, MAX_VERTICES};
use crate::{Error, Result};

const BIAS: u8 = 63;

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse { offset, reason: reason.into() }
}

/// Parse one graph6 record. A trailing line terminator is tolerated.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(parse_err(0, "empty record"));
    };
    if !(BIAS..=126).contains(&first) {
        return Err(parse_err(0, format!("byte {first} outside 63..126")));
    }
    if first == 126 {
        return Err(parse_err(0, "multi-byte size form is not supported"));
    }
    let n = (first - BIAS) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    for (offset, &b) in bytes.iter().enumerate().skip(1).take(expected - 1) {
        if !(BIAS..=126).contains(&b) {
            return Err(parse_err(offset, format!("byte {b} outside 63..126")));
        }
    }
    if bytes.len() < expected {
        return Err(parse_err(bytes.len(), format!("truncated: expected {expected} bytes")));
    }
    if bytes.len() > expected {
        return Err(parse_err(expected, "trailing bytes after record"));
    }

    let bit = |k: usize| (bytes[1 + k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if !nbits.is_multiple_of(6) {
        let last = expected - 1;
        if (bytes[last] - BIAS) & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
            return Err(parse_err(last, "nonzero padding bits"));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Encode `g` as a graph6 record (no line terminator).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::UnsupportedSize { n, limit: MAX_VERTICES, what: "graph6" });
    }
    let mut out = vec![BIAS + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
