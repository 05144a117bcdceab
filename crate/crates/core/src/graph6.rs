//! graph6 encoding (the format used by nauty's `geng`/`showg`).
//!
//! A line is `N(n) R(x)`: the order, then the upper triangle of the adjacency
//! matrix in column order `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed six bits
//! per byte, each byte offset by 63.

use std::io::BufRead;

use crate::{Error, Graph, Result};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";
/// Largest order accepted by [`parse_graph6`].
pub const MAX_ORDER: usize = 1 << 18;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

fn sextet(bytes: &[u8], at: usize) -> Result<u64> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - OFFSET) as u64),
        Some(&b) => Err(err(at, format!("character {b:#04x} outside 63..=126"))),
        None => Err(err(at, "truncated")),
    }
}

fn read_order(bytes: &[u8], start: usize) -> Result<(usize, usize)> {
    let first = sextet(bytes, start)?;
    if first < 63 {
        return Ok((first as usize, start + 1));
    }
    let (width, from) = if bytes.get(start + 1) == Some(&126) { (6, start + 2) } else { (3, start + 1) };
    let mut n: u64 = 0;
    for i in 0..width {
        n = (n << 6) | sextet(bytes, from + i).map_err(|_| err(from + i, "malformed order header"))?;
    }
    Ok((n as usize, from + width))
}

/// Decodes one graph6 line. A leading `>>graph6<<` and trailing line-ending
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let start = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = text.as_bytes();
    if bytes.len() == start {
        return Err(err(start, "empty input"));
    }
    let (n, body) = read_order(bytes, start)?;
    if n == 0 {
        return Err(err(start, "order 0 is not a graph"));
    }
    if n > MAX_ORDER {
        return Err(err(start, format!("order {n} exceeds {MAX_ORDER}")));
    }
    let bits = n * (n - 1) / 2;
    let len = bits.div_ceil(6);
    if bytes.len() < body + len {
        return Err(err(bytes.len(), format!("truncated body: expected {len} bytes")));
    }
    if bytes.len() > body + len {
        return Err(err(body + len, "trailing characters after body"));
    }
    let mut g = Graph::empty(n)?;
    let (mut u, mut v) = (0usize, 1usize);
    for k in 0..len {
        let value = sextet(bytes, body + k)?;
        for shift in (0..6).rev() {
            let index = k * 6 + (5 - shift);
            let bit = value >> shift & 1 == 1;
            if index >= bits {
                if bit {
                    return Err(err(body + k, "nonzero padding bits"));
                }
                continue;
            }
            if bit {
                g.add_edge(u, v);
            }
            u += 1;
            if u == v {
                u = 0;
                v += 1;
            }
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 line without a trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    if n < 63 {
        out.push(OFFSET + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| OFFSET + ((n >> (6 * i)) & 63) as u8));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| OFFSET + ((n >> (6 * i)) & 63) as u8));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        let row = g.neighbors(v);
        for u in 0..v {
            acc = (acc << 1) | row.contains(u) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// One non-comment line of a graph6 corpus.
#[derive(Debug)]
pub struct CorpusEntry {
    /// 1-based line number in the source.
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph>,
}

/// Reads a corpus: one graph6 string per line, blank lines and `#` comments skipped.
pub fn read_corpus<R: BufRead>(reader: R) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        out.push(CorpusEntry { line: i + 1, text: text.to_string(), graph: parse_graph6(text) });
    }
    Ok(out)
}
