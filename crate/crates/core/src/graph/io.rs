//! graph6 and plain edge-list text formats.

use super::{Graph, MAX_VERTICES};
use crate::error::{parse_err, Error, Result};

const HEADER: &str = ">>graph6<<";

/// Encodes `g` in graph6. Only the short size form (`n <= 62`) is needed here.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes one graph6 line (an optional `>>graph6<<` header is accepted).
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |msg: &str| parse_err(1, format!("graph6: {msg}"));
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let (n, body) = match bytes.first() {
        None => return Err(bad("empty input")),
        Some(126) => {
            if bytes.len() < 4 || bytes[1] == 126 {
                return Err(bad("unsupported size encoding"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    if n > MAX_VERTICES {
        return Err(Error::CapExceeded {
            what: "graph6 input",
            n,
            cap: MAX_VERTICES,
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(bad("body length does not match vertex count"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Edge-list text: the vertex count on the first line, then one `u v` pair
/// per line. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (ln, first) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing vertex count"))?;
    let n: usize = first
        .parse()
        .map_err(|_| parse_err(ln, format!("bad vertex count {first:?}")))?;
    let mut g = Graph::empty(n)?;
    for (ln, line) in lines {
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| parse_err(ln, format!("bad vertex {t:?}")))
            })
            .collect::<Result<_>>()?;
        let [u, v] = nums[..] else {
            return Err(parse_err(ln, "expected `u v`"));
        };
        g.add_edge(u, v).map_err(|e| parse_err(ln, e.to_string()))?;
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads either format: a first line that is a bare integer selects the edge
/// list, anything else is taken as graph6.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.parse::<usize>().is_ok() => parse_edge_list(text),
        Some(l) => from_graph6(l),
        None => Err(parse_err(1, "empty input")),
    }
}
