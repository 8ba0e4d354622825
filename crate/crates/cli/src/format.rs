//! graph6 and plain edge-list text formats.

use compfactor_core::Graph;

/// Largest order expressible with the single-byte graph6 header.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("graph6: byte {byte:#04x} at position {pos} is outside 63..=126")]
    BadByte { pos: usize, byte: u8 },
    #[error("graph6: order {0} needs a multi-byte header, only n <= 62 is supported")]
    Overlong(usize),
    #[error("graph6: expected {expected} data bytes for n = {n}, found {found}")]
    Length {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph6: nonzero padding bits")]
    Padding,
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("{0}")]
    Graph(#[from] compfactor_core::Error),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 string (an optional `>>graph6<<` prefix is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (&head, data) = bytes.split_first().ok_or(FormatError::Empty)?;
    for (pos, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(FormatError::BadByte { pos, byte });
        }
    }
    if head == 126 {
        let n = data
            .get(..3)
            .map(|h| {
                h.iter()
                    .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63))
            })
            .unwrap_or(63);
        return Err(FormatError::Overlong(n.max(63)));
    }
    let n = usize::from(head - 63);
    let expected = data_len(n);
    if data.len() != expected {
        return Err(FormatError::Length {
            n,
            expected,
            found: data.len(),
        });
    }
    let bit = |i: usize| (data[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(i) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    if (i..expected * 6).any(bit) {
        return Err(FormatError::Padding);
    }
    Ok(Graph::new(n, &edges)?)
}

/// Encodes `g` as graph6 (no trailing newline).
pub fn write_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(FormatError::Overlong(n));
    }
    let mut out = vec![0u8; data_len(n)];
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                out[i / 6] |= 1 << (5 - i % 6);
            }
            i += 1;
        }
    }
    let mut s = String::with_capacity(out.len() + 1);
    s.push(char::from(n as u8 + 63));
    s.extend(out.into_iter().map(|b| char::from(b + 63)));
    Ok(s)
}

/// Parses `n m` followed by `m` lines `u v`. Blank lines and `#` comments
/// are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(FormatError::Empty)?;
    let [n, m] = two_numbers(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        if edges.len() == m {
            return Err(FormatError::EdgeList {
                line,
                msg: format!("more than the declared {m} edges"),
            });
        }
        let [u, v] = two_numbers(line, l)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::EdgeList {
            line: 1,
            msg: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::new(n, &edges)?)
}

fn two_numbers(line: usize, l: &str) -> Result<[usize; 2], FormatError> {
    let err = |msg: String| FormatError::EdgeList { line, msg };
    let mut it = l.split_whitespace();
    let mut next = || -> Result<usize, FormatError> {
        let tok = it
            .next()
            .ok_or_else(|| err("expected two integers".into()))?;
        tok.parse()
            .map_err(|_| err(format!("not a nonnegative integer: {tok:?}")))
    };
    let pair = [next()?, next()?];
    if it.next().is_some() {
        return Err(err("expected exactly two integers".into()));
    }
    Ok(pair)
}

/// Writes the edge-list format with a trailing newline.
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Reads a file's contents as either format: a first non-comment line
/// with two integers means edge list, anything else is graph6.
pub fn parse_auto(text: &str) -> Result<Graph, FormatError> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .ok_or(FormatError::Empty)?;
    let looks_numeric = first.split_whitespace().count() == 2
        && first
            .split_whitespace()
            .all(|t| t.bytes().all(|b| b.is_ascii_digit()));
    if looks_numeric {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}
