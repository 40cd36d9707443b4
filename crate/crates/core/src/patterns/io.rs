//! Pattern files: the vertex count, then `E u v` and `NE u v` lines, then
//! `CYCLIC` or `LINEAR` followed by the sequence (on the same line or the
//! next). Several patterns may share a file, separated by `---` lines.

use super::{LinOrderedGraph, OrderedPattern};
use crate::circular_order::io::{numbers, parse_sequenced};
use crate::error::{parse_err, Result};
use crate::families::OrderKind;

/// A linearly ordered graph in the ordering-file layout, the sequence
/// listing vertices by rank.
pub fn write_linear_ordering(lin: &LinOrderedGraph) -> String {
    let seq: Vec<String> = lin.order().iter().map(ToString::to_string).collect();
    let mut out = format!("{}\n{}\n", lin.n(), seq.join(" "));
    for (u, v) in lin.graph().edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_linear_ordering(text: &str) -> Result<LinOrderedGraph> {
    let (g, seq, ln) = parse_sequenced(text)?;
    LinOrderedGraph::new(g, seq).map_err(|e| parse_err(ln, e.to_string()))
}

pub fn write_pattern(p: &OrderedPattern) -> String {
    let mut out = format!("{}\n", p.n());
    for (u, v) in p.required() {
        out.push_str(&format!("E {u} {v}\n"));
    }
    for (u, v) in p.forbidden() {
        out.push_str(&format!("NE {u} {v}\n"));
    }
    let kw = match p.kind() {
        OrderKind::Circular => "CYCLIC",
        OrderKind::Linear => "LINEAR",
    };
    let seq: Vec<String> = p.sequence().iter().map(ToString::to_string).collect();
    out.push_str(&format!("{kw} {}\n", seq.join(" ")));
    out
}

pub fn write_patterns(ps: &[OrderedPattern]) -> String {
    ps.iter()
        .map(write_pattern)
        .collect::<Vec<_>>()
        .join("---\n")
}

fn parse_block(lines: &[(usize, &str)]) -> Result<OrderedPattern> {
    let mut it = lines.iter().copied();
    let (ln, first) = it.next().ok_or_else(|| parse_err(1, "empty pattern"))?;
    let n: usize = first
        .parse()
        .map_err(|_| parse_err(ln, format!("bad vertex count {first:?}")))?;
    let (mut req, mut forb) = (Vec::new(), Vec::new());
    let mut order: Option<(OrderKind, Vec<usize>)> = None;
    let mut last = ln;
    while let Some((ln, line)) = it.next() {
        last = ln;
        if order.is_some() {
            return Err(parse_err(ln, "content after the ordering"));
        }
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match head {
            "E" | "NE" => {
                let [u, v] = numbers(rest, ln)?[..] else {
                    return Err(parse_err(ln, format!("expected `{head} u v`")));
                };
                if head == "E" { &mut req } else { &mut forb }.push((u, v));
            }
            "CYCLIC" | "LINEAR" => {
                let kind = if head == "CYCLIC" {
                    OrderKind::Circular
                } else {
                    OrderKind::Linear
                };
                let mut seq = numbers(rest, ln)?;
                if seq.is_empty() && n > 0 {
                    let (ln2, l2) = it.next().ok_or_else(|| parse_err(ln, "missing sequence"))?;
                    last = ln2;
                    seq = numbers(l2, ln2)?;
                }
                order = Some((kind, seq));
            }
            _ => return Err(parse_err(ln, format!("unexpected line {line:?}"))),
        }
    }
    let (kind, seq) = order.ok_or_else(|| parse_err(last, "missing CYCLIC/LINEAR line"))?;
    OrderedPattern::new(n, &req, &forb, kind, seq).map_err(|e| parse_err(last, e.to_string()))
}

pub fn parse_patterns(text: &str) -> Result<Vec<OrderedPattern>> {
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line == "---" {
            blocks.push(Vec::new());
        } else if !line.is_empty() {
            blocks.last_mut().expect("nonempty").push((i + 1, line));
        }
    }
    blocks
        .iter()
        .filter(|b| !b.is_empty())
        .map(|b| parse_block(b))
        .collect()
}

pub fn parse_pattern(text: &str) -> Result<OrderedPattern> {
    let mut ps = parse_patterns(text)?;
    if ps.len() != 1 {
        return Err(parse_err(
            1,
            format!("expected one pattern, found {}", ps.len()),
        ));
    }
    Ok(ps.remove(0))
}
