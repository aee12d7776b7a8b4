//! graph6 encoder/decoder.
//!
//! The standard format: an optional `>>graph6<<` prefix, a vertex-count
//! header in offset-63 bytes (one byte for n <= 62, `~` plus three bytes up
//! to n = 258047), then the upper triangle of the adjacency matrix in
//! column order `(0,1), (0,2), (1,2), (0,3), …`, packed big-endian six bits
//! per byte, zero-padded, each byte offset by 63.

use crate::error::Error;
use crate::graph::Graph;

const OFFSET: u8 = 63;
const MAX_SHORT_N: usize = 62;
const MAX_LONG_N: usize = 258_047;
const OPTIONAL_PREFIX: &str = ">>graph6<<";

/// Encodes a graph in canonical (shortest-header) graph6 form.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(
        n <= MAX_LONG_N,
        "graph6 encoding supports up to {MAX_LONG_N} vertices"
    );
    let mut bytes = Vec::new();
    if n <= MAX_SHORT_N {
        bytes.push(n as u8 + OFFSET);
    } else {
        bytes.push(b'~');
        bytes.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        bytes.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        bytes.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | u8::from(g.has_edge(row, col));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(bytes).expect("offset-63 bytes are ASCII")
}

/// Decodes a graph6 string. The whole input must be one encoding; trailing
/// characters (beyond an optional final newline) are an error.
pub fn parse_graph6(text: &str) -> Result<Graph, Error> {
    let text = text.strip_prefix(OPTIONAL_PREFIX).unwrap_or(text);
    let text = text.trim_end_matches(['\n', '\r']);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6MalformedHeader {
            detail: "empty input".into(),
        });
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(OFFSET..=126).contains(&b)) {
        return Err(Error::Graph6MalformedHeader {
            detail: format!("byte {bad:#04x} outside the printable graph6 range"),
        });
    }

    let (n, data) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Error::Graph6MalformedHeader {
                detail: "8-byte vertex counts (n > 258047) are not supported".into(),
            });
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6MalformedHeader {
                detail: "long-form header needs three bytes after '~'".into(),
            });
        }
        let n = ((bytes[1] - OFFSET) as usize) << 12
            | ((bytes[2] - OFFSET) as usize) << 6
            | (bytes[3] - OFFSET) as usize;
        if n <= MAX_SHORT_N {
            return Err(Error::Graph6MalformedHeader {
                detail: format!("long-form header used for n = {n} <= 62"),
            });
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - OFFSET) as usize, &bytes[1..])
    };

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    match data.len() {
        got if got < expected => {
            return Err(Error::Graph6BitCountMismatch {
                expected,
                got: data.len(),
            })
        }
        got if got > expected => {
            return Err(Error::Graph6TrailingGarbage {
                detail: format!("{} extra character(s)", got - expected),
            })
        }
        _ => {}
    }

    let mut edges = Vec::new();
    let mut bit_index = 0;
    for col in 1..n {
        for row in 0..col {
            let byte = data[bit_index / 6] - OFFSET;
            if byte >> (5 - bit_index % 6) & 1 == 1 {
                edges.push((row, col));
            }
            bit_index += 1;
        }
    }
    // Padding bits, if any, must be zero.
    while bit_index < expected * 6 {
        let byte = data[bit_index / 6] - OFFSET;
        if byte >> (5 - bit_index % 6) & 1 == 1 {
            return Err(Error::Graph6TrailingGarbage {
                detail: "nonzero padding bits".into(),
            });
        }
        bit_index += 1;
    }
    Graph::from_edge_list(n, &edges)
}
