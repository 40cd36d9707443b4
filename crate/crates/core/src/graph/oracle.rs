//! Brute-force recognition oracles. These are deliberately naive and share no
//! code with the ordering search; tests use them as independent references.

use std::collections::HashSet;

use super::{bit, bits, Graph};
use crate::error::{cap, Result};

/// Cap for [`is_outerplanar_oracle`].
pub const OUTERPLANAR_ORACLE_CAP: usize = 9;

fn has_k4_subgraph(adj: &[u64]) -> bool {
    let n = adj.len();
    (0..n).any(|a| {
        bits(adj[a]).filter(|&b| b > a).any(|b| {
            let common = adj[a] & adj[b];
            bits(common)
                .filter(|&c| c > b)
                .any(|c| common & adj[c] & !(bit(c + 1) - 1) != 0)
        })
    })
}

fn has_k23_subgraph(adj: &[u64]) -> bool {
    let n = adj.len();
    (0..n).any(|a| (a + 1..n).any(|b| (adj[a] & adj[b]).count_ones() >= 3))
}

/// Contracts edge `uv` (`u < v`): `v` merges into `u`, vertices above `v`
/// shift down by one.
fn contract(adj: &[u64], u: usize, v: usize) -> Vec<u64> {
    let squeeze = |mask: u64| -> u64 {
        let low = mask & (bit(v) - 1);
        let high = (mask >> 1) & !(bit(v) - 1);
        low | high
    };
    let mut out = Vec::with_capacity(adj.len() - 1);
    for (w, &row) in adj.iter().enumerate() {
        if w == v {
            continue;
        }
        let mut row = row;
        if row & bit(v) != 0 {
            row = (row & !bit(v)) | bit(u);
        }
        if w == u {
            row |= adj[v] & !bit(u) & !bit(v);
        }
        row &= !bit(w);
        out.push(squeeze(row));
    }
    // `u` gained neighbours from `v`; make the relation symmetric again.
    let nu = out[u];
    for w in bits(nu) {
        out[w] |= bit(u);
    }
    out
}

/// Outerplanarity by forbidden minors: `G` is outerplanar iff it has neither
/// `K_4` nor `K_{2,3}` as a minor. Every minor is a subgraph of some sequence
/// of edge contractions, so we explore all contraction sequences (memoised on
/// the labelled adjacency) and test each for a `K_4` or `K_{2,3}` subgraph.
pub fn is_outerplanar_oracle(g: &Graph) -> Result<bool> {
    cap("outerplanarity oracle", g.n(), OUTERPLANAR_ORACLE_CAP)?;
    let mut seen = HashSet::new();
    let mut stack = vec![g.adjacency().to_vec()];
    while let Some(adj) = stack.pop() {
        if !seen.insert(adj.clone()) {
            continue;
        }
        if has_k4_subgraph(&adj) || has_k23_subgraph(&adj) {
            return Ok(false);
        }
        if adj.len() <= 4 {
            continue;
        }
        for u in 0..adj.len() {
            for v in bits(adj[u]).filter(|&v| v > u) {
                stack.push(contract(&adj, u, v));
            }
        }
    }
    Ok(true)
}

/// The circular-arc condition on a circular arrangement `v_1, ..., v_n` (given
/// as a sequence of vertex ids): for `i < j` with `v_i v_j` an edge, either
/// `v_{i+1}, ..., v_j` are all neighbours of `v_i`, or `v_{j+1}, ..., v_i`
/// (indices taken cyclically) are all neighbours of `v_j`. Vertices are not
/// their own neighbours; `v_j` and `v_i` themselves are adjacent by assumption.
pub fn tucker_condition(g: &Graph, seq: &[usize]) -> bool {
    let n = seq.len();
    let adjacent = |a: usize, b: usize| a == b || g.has_edge(a, b);
    for i in 0..n {
        for j in i + 1..n {
            let (vi, vj) = (seq[i], seq[j]);
            if !g.has_edge(vi, vj) {
                continue;
            }
            let forward = (i + 1..=j).all(|t| t == j || adjacent(vi, seq[t]));
            let backward = (1..=(n - j + i))
                .map(|s| (j + s) % n)
                .all(|t| t == i || adjacent(vj, seq[t]));
            if !(forward || backward) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, enumerate_trees, path};

    #[test]
    fn forbidden_minors_themselves() {
        assert!(!is_outerplanar_oracle(&complete(4).unwrap()).unwrap());
        assert!(!is_outerplanar_oracle(&complete_bipartite(2, 3).unwrap()).unwrap());
    }

    #[test]
    fn outerplanar_examples() {
        for t in enumerate_trees(7).unwrap() {
            assert!(is_outerplanar_oracle(&t).unwrap());
        }
        assert!(is_outerplanar_oracle(&cycle(8).unwrap()).unwrap());
        let mut k4e = complete(4).unwrap();
        k4e.remove_edge(0, 1).unwrap();
        assert!(is_outerplanar_oracle(&k4e).unwrap());
        // K_4 subdivided: a minor, not a subgraph.
        let mut sub = complete(4).unwrap();
        sub.remove_edge(0, 1).unwrap();
        let mut g = Graph::empty(5).unwrap();
        for (u, v) in sub.edges() {
            g.add_edge(u, v).unwrap();
        }
        g.add_edge(0, 4).unwrap();
        g.add_edge(4, 1).unwrap();
        assert!(!is_outerplanar_oracle(&g).unwrap());
        assert!(is_outerplanar_oracle(&path(10).unwrap()).is_err());
    }

    #[test]
    fn contraction_keeps_symmetry() {
        let c5 = cycle(5).unwrap();
        let c4 = contract(c5.adjacency(), 0, 1);
        assert!(Graph::from_adjacency(c4.clone()).is_ok());
        assert_eq!(Graph::from_adjacency(c4).unwrap(), cycle(4).unwrap());
    }

    #[test]
    fn tucker_on_cycles() {
        let c4 = cycle(4).unwrap();
        assert!(tucker_condition(&c4, &[0, 1, 2, 3]));
        // A 4-cycle drawn as a crossed quadrilateral violates the condition.
        assert!(!tucker_condition(&c4, &[0, 2, 1, 3]));
    }
}
