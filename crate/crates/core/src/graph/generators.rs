//! Named graphs. Each generator documents its role-to-id map.

use super::Graph;
use crate::error::{Error, Result};

/// The path `0 - 1 - ... - (k-1)`.
pub fn path(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidArgument("path needs k >= 1".into()));
    }
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::from_edges(k, &edges)
}

/// The cycle `0 - 1 - ... - (k-1) - 0`.
pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidArgument("cycle needs k >= 3".into()));
    }
    let mut g = path(k)?;
    g.add_edge(0, k - 1)?;
    Ok(g)
}

pub fn complete(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidArgument("complete graph needs k >= 1".into()));
    }
    Ok(Graph::empty(k)?.complement())
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let mut g = Graph::empty(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `K_{1,3}`: centre 0, leaves 1, 2, 3.
pub fn claw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).expect("static graph")
}

/// The claw with every edge subdivided: centre 0, middle vertices 1..=3,
/// leaves 4..=6 (leaf `i + 3` hangs off middle vertex `i`).
pub fn t2() -> Graph {
    Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).expect("static graph")
}

/// The rational complete graph `K_{p/q}`: vertices `0..p`, `ij` an edge iff the
/// circular distance between `i` and `j` is at least `q`.
pub fn rational_complete(p: usize, q: usize) -> Result<Graph> {
    if p < 1 || q < 1 || q > p {
        return Err(Error::InvalidArgument(format!(
            "K_{{{p}/{q}}} needs 1 <= q <= p"
        )));
    }
    let mut g = Graph::empty(p)?;
    for i in 0..p {
        for j in i + 1..p {
            let d = j - i;
            if d.min(p - d) >= q {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// `H^k_n = K_{(kn-1)/n}`.
pub fn h_graph(k: usize, n: usize) -> Result<Graph> {
    if k < 3 || n < 1 {
        return Err(Error::InvalidArgument(format!(
            "H^k_n needs k >= 3 and n >= 1 (got k={k}, n={n})"
        )));
    }
    rational_complete(k * n - 1, n)
}

/// The reduction gadget on `v1..v6` mapped to ids `0..6`: `{v3,v4,v5,v6}`
/// is a clique, plus `v1v6`, `v2v5`, `v2v6`.
pub fn g_aco() -> Graph {
    Graph::from_edges(
        6,
        &[
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
            (0, 5),
            (1, 4),
            (1, 5),
        ],
    )
    .expect("static graph")
}

/// Möbius ladder on `2m` vertices: the cycle `C_{2m}` plus the `m` antipodal
/// chords.
pub fn mobius_ladder(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidArgument("Mobius ladder needs m >= 2".into()));
    }
    let mut g = cycle(2 * m)?;
    for i in 0..m {
        g.add_edge(i, i + m)?;
    }
    Ok(g)
}
