//! graph6 text encoding of small simple graphs.
//!
//! The format: an optional `>>graph6<<` header, a length byte `n + 63` for
//! `n <= 62`, then the upper triangle of the adjacency matrix read
//! column-wise (for `j = 1..n-1`, for `i = 0..j-1`, bit `x(i,j)`), packed
//! most-significant-bit first into 6-bit groups, zero-padded, each group
//! `+63` giving printable bytes in `63..=126`. Orders above 62 use a
//! multi-byte length prefix that this tool does not read or write.

use crate::graph::Graph;
use thiserror::Error;

const HEADER: &[u8] = b">>graph6<<";

/// Largest order the codec accepts; the single-byte length prefix covers
/// exactly `0..=62`.
pub const MAX_IO_VERTICES: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input: missing length byte at offset {offset}")]
    MissingLength { offset: usize },
    #[error("malformed length byte {byte:#04x} at offset {offset}")]
    MalformedLength { byte: u8, offset: usize },
    #[error("order {n} exceeds the supported maximum {MAX_IO_VERTICES} (length prefix at offset {offset})")]
    OrderTooLarge { n: usize, offset: usize },
    #[error("non-printable body byte {byte:#04x} at offset {offset}")]
    NonPrintableByte { byte: u8, offset: usize },
    #[error("truncated bit field at offset {offset}: need {needed} body bytes, found {found}")]
    Truncated {
        offset: usize,
        needed: usize,
        found: usize,
    },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
}

/// Parses one graph6 record. Trailing whitespace after the record is
/// tolerated; anything else trailing is an error.
pub fn parse_graph6(input: &[u8]) -> Result<Graph, Graph6Error> {
    let mut off = 0usize;
    if input.starts_with(HEADER) {
        off += HEADER.len();
    }
    let &len_byte = input
        .get(off)
        .ok_or(Graph6Error::MissingLength { offset: off })?;
    if len_byte == b'~' {
        // Multi-byte length form: the order is at least 63, beyond the cap.
        return Err(Graph6Error::OrderTooLarge {
            n: extended_order(&input[off..]).unwrap_or(63),
            offset: off,
        });
    }
    if !(63..=125).contains(&len_byte) {
        return Err(Graph6Error::MalformedLength {
            byte: len_byte,
            offset: off,
        });
    }
    let n = (len_byte - 63) as usize;
    off += 1;

    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    let mut adj = vec![0u64; n];
    let mut bit_index = 0usize;
    for k in 0..needed {
        let &byte = input.get(off + k).ok_or(Graph6Error::Truncated {
            offset: input.len(),
            needed,
            found: k,
        })?;
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::NonPrintableByte {
                byte,
                offset: off + k,
            });
        }
        let group = byte - 63;
        for b in 0..6 {
            if bit_index >= bit_count {
                break;
            }
            if (group >> (5 - b)) & 1 == 1 {
                let (i, j) = triangle_position(bit_index);
                adj[i] |= 1u64 << j;
                adj[j] |= 1u64 << i;
            }
            bit_index += 1;
        }
    }
    off += needed;
    if let Some(pos) = input[off..]
        .iter()
        .position(|b| !b" \t\r\n".contains(b))
    {
        return Err(Graph6Error::TrailingData { offset: off + pos });
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is symmetric and loop-free"))
}

/// Encodes a graph exactly as labelled. Fails only when the order exceeds
/// the single-byte length prefix.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_IO_VERTICES {
        return Err(Graph6Error::OrderTooLarge { n, offset: 0 });
    }
    let mut out = Vec::with_capacity(1 + (n * n / 2).div_ceil(6));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Maps a bit index in the column-wise upper-triangle stream to `(i, j)`.
fn triangle_position(index: usize) -> (usize, usize) {
    // Column j holds j bits, starting at offset j*(j-1)/2.
    let mut j = 1usize;
    while (j + 1) * j / 2 <= index {
        j += 1;
    }
    (index - j * (j - 1) / 2, j)
}

/// Best effort decode of the multi-byte length prefix, for error messages.
fn extended_order(bytes: &[u8]) -> Option<usize> {
    if bytes.len() >= 4 && bytes[0] == b'~' && bytes[1] != b'~' {
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return None;
            }
            n = (n << 6) | (b - 63) as usize;
        }
        return Some(n);
    }
    None
}
