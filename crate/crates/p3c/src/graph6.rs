//! Encoder and decoder for the graph6 text format.
//!
//! graph6 packs the upper triangle of the adjacency matrix, column by
//! column, six bits per printable byte (offset 63). Orders up to 62 use a
//! single size byte; larger orders use `~` followed by an 18-bit size. The
//! optional `>>graph6<<` header is accepted and never emitted.

use crate::Error;
use p3c_core::Graph;

const HEADER: &str = ">>graph6<<";

/// Encodes a graph as a graph6 string (no header, no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        // 18-bit size: '~' then three bytes of six bits each, high first.
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 0x3f) as u8);
        bytes.push(63 + ((n >> 6) & 0x3f) as u8);
        bytes.push(63 + (n & 0x3f) as u8);
    }
    let mut acc: u8 = 0;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                bytes.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string, tolerating surrounding whitespace.
pub fn decode(s: &str) -> Result<Graph, Error> {
    let mut body = s.trim();
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest.trim_start();
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    match bytes[0] {
        b':' => return Err(Error::Graph6("sparse6 input is not supported".into())),
        b'&' => return Err(Error::Graph6("digraph6 input is not supported".into())),
        _ => {}
    }
    let (n, data) = decode_order(bytes)?;
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!(
                "byte {} at position {} is outside the printable range 63..=126",
                b,
                i + (bytes.len() - data.len())
            )));
        }
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if data.len() != expected {
        return Err(Error::Graph6(format!(
            "order {} needs {} data bytes, found {}",
            n,
            expected,
            data.len()
        )));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[idx / 6] - 63;
            if byte & (1 << (5 - idx % 6)) != 0 {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    // Strict padding: the unused low bits of the final byte must be zero.
    if idx % 6 != 0 {
        let tail = data[idx / 6] - 63;
        let mask = (1u8 << (6 - idx % 6)) - 1;
        if tail & mask != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(Graph::new(n, &edges)?)
}

/// Splits off the size prefix, returning the order and the data bytes.
fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), Error> {
    if bytes[0] != 126 {
        let b = bytes[0];
        if !(63..=125).contains(&b) {
            return Err(Error::Graph6(format!("invalid size byte {b}")));
        }
        return Ok(((b - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(Error::Graph6(
            "orders beyond 258047 (the '~~' size form) are not supported".into(),
        ));
    }
    if bytes.len() < 4 {
        return Err(Error::Graph6("truncated 18-bit size".into()));
    }
    let mut n = 0usize;
    for &b in &bytes[1..4] {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("invalid size byte {b}")));
        }
        n = (n << 6) | (b - 63) as usize;
    }
    if n <= 62 {
        return Err(Error::Graph6(format!(
            "order {n} must use the single-byte size form"
        )));
    }
    Ok((n, &bytes[4..]))
}
