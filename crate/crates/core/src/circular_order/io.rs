//! Ordering files: the vertex count, then the cyclic sequence on one line,
//! then one `u v` edge per line.

use super::CircOrderedGraph;
use crate::error::{parse_err, Result};
use crate::graph::Graph;

pub fn write_ordering(cog: &CircOrderedGraph) -> String {
    let seq: Vec<String> = cog.seq().iter().map(ToString::to_string).collect();
    let mut out = format!("{}\n{}\n", cog.n(), seq.join(" "));
    for (u, v) in cog.graph().edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub(crate) fn numbers(line: &str, ln: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| parse_err(ln, format!("bad number {t:?}")))
        })
        .collect()
}

pub fn parse_ordering(text: &str) -> Result<CircOrderedGraph> {
    let (g, seq, ln) = parse_sequenced(text)?;
    CircOrderedGraph::from_sequence(g, &seq).map_err(|e| parse_err(ln, e.to_string()))
}

/// The graph and the sequence exactly as written, plus the sequence's line.
pub(crate) fn parse_sequenced(text: &str) -> Result<(Graph, Vec<usize>, usize)> {
    let mut content = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (ln, first) = content
        .next()
        .ok_or_else(|| parse_err(1, "missing vertex count"))?;
    let n: usize = first
        .parse()
        .map_err(|_| parse_err(ln, format!("bad vertex count {first:?}")))?;
    let (seq_ln, seq) = match content.next() {
        Some((ln, l)) => (ln, numbers(l, ln)?),
        None if n == 0 => (ln + 1, Vec::new()),
        None => return Err(parse_err(ln + 1, "missing sequence")),
    };
    if seq.len() != n {
        return Err(parse_err(
            seq_ln,
            format!("sequence has {} ids, expected {n}", seq.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    for (ln, l) in content {
        let [u, v] = numbers(l, ln)?[..] else {
            return Err(parse_err(ln, "expected `u v`"));
        };
        g.add_edge(u, v).map_err(|e| parse_err(ln, e.to_string()))?;
    }
    Ok((g, seq, seq_ln))
}
