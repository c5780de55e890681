//! Text interchange formats: graph6 (canonical) and a plain edge list
//! (human-editable).
//!
//! graph6: a size header (`63 + n` as one byte for `n < 63`, or `~` followed by
//! three 6-bit groups for `n < 258048`), then the upper triangle of the
//! adjacency matrix in column-major order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed big-endian into 6-bit groups each offset by 63, zero padded.
//!
//! Edge list: first line `n m`, then `m` lines `u v`. Blank lines and anything
//! after `#` are ignored.

use log::warn;

use crate::error::{Error, Result};
use crate::graph::Graph;

const G6_MAX_N: usize = 258_047;

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(parse_err(0, "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(i, format!("byte {b:#04x} outside the printable range 63..=126")));
        }
    }
    let (n, body_start) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(parse_err(1, "graphs with more than 258047 vertices are not supported"));
        }
        if bytes.len() < 4 {
            return Err(parse_err(bytes.len(), "truncated size header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = body_start + nbits.div_ceil(6);
    if bytes.len() < expected {
        return Err(parse_err(
            bytes.len(),
            format!("truncated bit vector: expected {expected} bytes for n = {n}"),
        ));
    }
    if bytes.len() > expected {
        return Err(parse_err(expected, "trailing bytes after the bit vector"));
    }

    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[body_start + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= G6_MAX_N, "graph6 supports at most {G6_MAX_N} vertices");
    let mut out = Vec::new();
    if n < 63 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            k += 1;
            if k == 6 {
                out.push(63 + acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(63 + (acc << (6 - k)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Strips `#` comments and blank lines, keeping 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn line_err(line: usize, message: impl Into<String>) -> Error {
    // Edge-list errors report the line number in the offset slot.
    Error::Parse {
        offset: line,
        message: format!("line {line}: {}", message.into()),
    }
}

pub(crate) fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| line_err(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| line_err(line_no, format!("{what} {tok:?} is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(line_err(line_no, "expected exactly two fields"));
    }
    Ok((a, b))
}

/// Parses the edge-list header and `m` edge lines, returning the graph and the
/// number of content lines consumed. Shared with the orientation text format.
pub(crate) fn parse_edge_list_prefix<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<Graph> {
    let (hline, header) = lines
        .next()
        .ok_or_else(|| line_err(1, "missing header line \"n m\""))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut g = Graph::new(n);
    for i in 0..m {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| line_err(hline, format!("expected {m} edge lines, found {i}")))?;
        let (u, v) = parse_pair(line_no, line)?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::Loop {
                line: line_no,
                vertex: u,
            });
        }
        if g.has_edge(u, v) {
            warn!("line {line_no}: duplicate edge {u} {v} ignored");
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let g = parse_edge_list_prefix(&mut lines)?;
    if let Some((line_no, _)) = lines.next() {
        return Err(line_err(line_no, "more edge lines than the header announced"));
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
