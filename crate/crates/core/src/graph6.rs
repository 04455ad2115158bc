//! graph6 encoding and decoding.

use crate::error::GraphError;
use crate::graph::Graph;

const BIAS: u8 = 63;
const LONG: u8 = 126;

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([LONG, LONG]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Encodes `g` as a graph6 string (no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 { offset, reason: reason.into() }
}

fn sextet(bytes: &[u8], at: usize) -> Result<usize, GraphError> {
    match bytes.get(at) {
        None => Err(err(at, "unexpected end of input")),
        Some(&b) if (BIAS..=LONG).contains(&b) => Ok((b - BIAS) as usize),
        Some(&b) => Err(err(at, format!("byte {b:#04x} outside the printable range"))),
    }
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn decode(input: &[u8]) -> Result<Graph, GraphError> {
    let mut start = 0;
    let header = b">>graph6<<";
    if input.starts_with(header) {
        start = header.len();
    }
    let mut end = input.len();
    while end > start && input[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    while start < end && input[start].is_ascii_whitespace() {
        start += 1;
    }
    let bytes = &input[..end];
    if start >= end {
        return Err(err(start, "empty record"));
    }
    let (n, mut pos) = if bytes[start] != LONG {
        (sextet(bytes, start)?, start + 1)
    } else if bytes.get(start + 1) != Some(&LONG) {
        let mut n = 0;
        for i in 0..3 {
            n = n << 6 | sextet(bytes, start + 1 + i)?;
        }
        (n, start + 4)
    } else {
        let mut n = 0;
        for i in 0..6 {
            n = n << 6 | sextet(bytes, start + 2 + i)?;
        }
        (n, start + 8)
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    let have = end - pos;
    if have < need {
        return Err(err(end, format!("truncated bit vector: expected {need} data bytes, found {have}")));
    }
    if have > need {
        return Err(err(pos + need, format!("trailing data: expected {need} data bytes, found {have}")));
    }
    let mut g_edges = Vec::new();
    let mut k = 0usize;
    let mut word = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            if k % 6 == 0 {
                word = sextet(bytes, pos)?;
                pos += 1;
            }
            if word >> (5 - k % 6) & 1 == 1 {
                g_edges.push((u, v));
            }
            k += 1;
            if k == pairs {
                break 'outer;
            }
        }
    }
    if pairs % 6 != 0 && need > 0 {
        let pad = 6 - pairs % 6;
        if word & ((1 << pad) - 1) != 0 {
            return Err(err(pos - 1, "nonzero padding bits"));
        }
    }
    Graph::new(n, g_edges)
}

/// Decodes a graph6 string.
pub fn decode_str(s: &str) -> Result<Graph, GraphError> {
    decode(s.as_bytes())
}
