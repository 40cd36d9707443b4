use crate::circular_order::CircOrderedGraph;
use crate::error::{cap, Error, Result};
use crate::families::{avoids, family_cr};
use crate::graph::oracle::is_outerplanar_oracle;
use crate::graph::Graph;

pub const OUTERPLANAR_CAP: usize = 9;

/// A circular ordering in which no two edges cross, found by inserting the
/// vertices one at a time into every gap that keeps the placed edges
/// non-crossing.
pub fn order_outerplanar(g: &Graph) -> Result<CircOrderedGraph> {
    cap("outerplanar ordering", g.n(), OUTERPLANAR_CAP)?;
    if !is_outerplanar_oracle(g)? {
        return Err(Error::Precondition("graph is not outerplanar".into()));
    }
    if g.n() == 0 {
        return CircOrderedGraph::from_sequence(g.clone(), &[]);
    }
    let mut seq = vec![0];
    if !place(g, &mut seq) {
        return Err(Error::Verification("no non-crossing ordering found".into()));
    }
    let out = CircOrderedGraph::from_sequence(g.clone(), &seq)?;
    if !avoids(&out, &family_cr()) {
        return Err(Error::Verification(
            "outerplanar ordering has a crossing".into(),
        ));
    }
    Ok(out)
}

fn place(g: &Graph, seq: &mut Vec<usize>) -> bool {
    let Some(v) = (0..g.n()).find(|v| !seq.contains(v)) else {
        return true;
    };
    for gap in 1..=seq.len() {
        seq.insert(gap, v);
        if !crosses_at(g, seq, v) && place(g, seq) {
            return true;
        }
        seq.remove(gap);
    }
    false
}

/// Whether an edge at `v` crosses another placed edge.
fn crosses_at(g: &Graph, seq: &[usize], v: usize) -> bool {
    let n = seq.len();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &x) in seq.iter().enumerate() {
        pos[x] = i;
    }
    let placed: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| pos[a] != usize::MAX && pos[b] != usize::MAX)
        .collect();
    let between = |a: usize, b: usize, x: usize| {
        let (pa, pb, px) = (pos[a], pos[b], pos[x]);
        (px + n - pa) % n < (pb + n - pa) % n
    };
    placed
        .iter()
        .filter(|e| e.0 == v || e.1 == v)
        .any(|&(a, b)| {
            placed.iter().any(|&(c, d)| {
                c != a && c != b && d != a && d != b && between(a, b, c) != between(a, b, d)
            })
        })
}
