//! Exhaustive enumeration of small graphs and trees.

use std::collections::{BTreeMap, HashSet};

use super::{bit, bits, Graph};
use crate::error::{cap, Result};

/// Largest `n` accepted by [`enumerate_graphs`].
pub const ENUMERATE_ISO_CAP: usize = 7;

const CANON_CAP: usize = 11;
const TREE_CAP: usize = 14;

/// Upper-triangle adjacency bitstring of `g` under the relabelling
/// `perm[new] = old`, first pair in the most significant position.
fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut code = 0u64;
    for i in 0..n {
        let row = g.neighbors_mask(perm[i]);
        for &pj in &perm[i + 1..n] {
            code = (code << 1) | ((row >> pj) & 1);
        }
    }
    code
}

/// Refinement key invariant under relabelling: degree, then the sorted
/// neighbour degrees.
fn vertex_key(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Canonical labelling: the minimum adjacency bitstring over all
/// relabellings that list vertices block by block in increasing key order.
/// The blocks are isomorphism invariant, so two graphs are isomorphic iff
/// their canonical forms coincide.
pub fn canonical_form(g: &Graph) -> Result<(u64, Graph)> {
    cap("canonical form", g.n(), CANON_CAP)?;
    let mut blocks: BTreeMap<(usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        blocks.entry(vertex_key(g, v)).or_default().push(v);
    }
    let blocks: Vec<Vec<usize>> = blocks.into_values().collect();
    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut perm = Vec::with_capacity(g.n());
    block_perms(&blocks, 0, 0, &mut perm, &mut |p| {
        let c = code_under(g, p);
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            best = Some((c, p.to_vec()));
        }
    });
    let (code, perm) = best.unwrap_or((0, Vec::new()));
    Ok((code, g.relabel_subset(&perm)))
}

fn block_perms(
    blocks: &[Vec<usize>],
    b: usize,
    used: u64,
    perm: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if b == blocks.len() {
        visit(perm);
        return;
    }
    let block = &blocks[b];
    let start = perm.len();
    let done = blocks[..b].iter().map(Vec::len).sum::<usize>();
    if start - done == block.len() {
        block_perms(blocks, b + 1, used, perm, visit);
        return;
    }
    for &v in block {
        if used & bit(v) == 0 {
            perm.push(v);
            block_perms(blocks, b, used | bit(v), perm, visit);
            perm.pop();
        }
    }
}

/// All graphs on `n` vertices: every labelled graph (`2^(n choose 2)` of
/// them), or one canonical representative per isomorphism class sorted by
/// edge count and canonical code.
pub fn enumerate_graphs(n: usize, up_to_iso: bool) -> Result<Vec<Graph>> {
    cap("graph enumeration", n, ENUMERATE_ISO_CAP)?;
    if !up_to_iso {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let total = 1u64 << pairs.len();
        return Ok((0..total)
            .map(|mask| {
                let mut adj = vec![0u64; n];
                for (k, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        adj[u] |= bit(v);
                        adj[v] |= bit(u);
                    }
                }
                Graph::from_adjacency_unchecked(adj)
            })
            .collect());
    }
    let mut classes: Vec<(u64, Graph)> = vec![(0, Graph::from_adjacency_unchecked(Vec::new()))];
    for m in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (_, g) in &classes {
            for nbhd in 0..(1u64 << (m - 1)) {
                let mut adj = g.adjacency().to_vec();
                for u in bits(nbhd) {
                    adj[u] |= bit(m - 1);
                }
                adj.push(nbhd);
                let (code, canon) = canonical_form(&Graph::from_adjacency_unchecked(adj))?;
                if seen.insert(code) {
                    next.push((code, canon));
                }
            }
        }
        classes = next;
    }
    classes.sort_by_key(|(code, g)| (g.edge_count(), *code));
    Ok(classes.into_iter().map(|(_, g)| g).collect())
}

/// AHU encoding of the tree rooted at `root`.
fn ahu(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .filter(|&u| u != parent)
        .map(|u| ahu(g, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn tree_code(g: &Graph) -> String {
    (0..g.n())
        .map(|r| ahu(g, r, usize::MAX))
        .min()
        .unwrap_or_default()
}

/// One representative of every unlabelled tree on `n` vertices, grown by
/// leaf attachment and deduplicated by rooted AHU codes.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    cap("tree enumeration", n, TREE_CAP)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut trees = vec![Graph::from_adjacency_unchecked(vec![0])];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &trees {
            for attach in 0..m - 1 {
                let mut adj = t.adjacency().to_vec();
                adj[attach] |= bit(m - 1);
                adj.push(bit(attach));
                let g = Graph::from_adjacency_unchecked(adj);
                if seen.insert(tree_code(&g)) {
                    next.push(g);
                }
            }
        }
        trees = next;
    }
    debug_assert!(trees
        .iter()
        .all(|t| t.edge_count() + 1 == t.n() && t.is_connected()));
    Ok(trees)
}
