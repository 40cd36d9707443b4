//! Simple finite graphs on dense vertex ids `0..n`.
//!
//! Adjacency is stored as one 64-bit neighbourhood mask per vertex, which caps
//! graphs at [`MAX_VERTICES`] vertices. Everything in this crate works at desk
//! scale, so the cap is never the binding constraint.

mod classes;
mod enumerate;
mod generators;
pub mod io;
mod iso;
pub mod oracle;

use std::fmt;

use crate::error::{Error, Result};

pub use classes::{components, is_caterpillar_forest, is_forest, is_linear_forest, is_tree};
pub use enumerate::{canonical_form, enumerate_graphs, enumerate_trees, ENUMERATE_ISO_CAP};
pub use generators::{
    claw, complete, complete_bipartite, cycle, g_aco, h_graph, mobius_ladder, path,
    rational_complete, t2,
};
pub use iso::{automorphism_count, find_isomorphism, is_isomorphic};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates over the set bits of a mask, lowest first.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph: no loops, no multi-edges.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        crate::error::cap("graph", n, MAX_VERTICES)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood masks. The masks must be symmetric and
    /// loop-free.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        crate::error::cap("graph", n, MAX_VERTICES)?;
        let full = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::InvalidArgument(format!(
                    "adjacency row {v} references a vertex >= {n}"
                )));
            }
            if row & bit(v) != 0 {
                return Err(Error::InvalidArgument(format!("self-loop at {v}")));
            }
            for u in bits(row) {
                if adj[u] & bit(v) == 0 {
                    return Err(Error::InvalidArgument(format!(
                        "adjacency not symmetric at {{{v},{u}}}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        Graph { n: adj.len(), adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at {u}")));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        Ok(())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(bits(self.adj[u]).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&r| r == 0)
    }

    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & full & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `subset`, relabelled `0..|subset|` in ascending id
    /// order.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Graph> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            self.check_vertex(v)?;
        }
        Ok(self.relabel_subset(&sorted))
    }

    /// Graph induced on `order`, where `order[i]` becomes vertex `i`.
    pub(crate) fn relabel_subset(&self, order: &[usize]) -> Graph {
        let adj = order
            .iter()
            .map(|&u| {
                let mut row = 0u64;
                for (j, &w) in order.iter().enumerate() {
                    if self.adj[u] & bit(w) != 0 {
                        row |= bit(j);
                    }
                }
                row
            })
            .collect();
        Graph {
            n: order.len(),
            adj,
        }
    }

    /// Applies the relabelling `v -> perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Ok(Graph { n: self.n, adj })
    }

    /// True when the mask of vertices induces a connected subgraph (the empty
    /// mask counts as connected).
    pub(crate) fn is_connected_mask(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v] & mask;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == mask
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_mask(full_mask(self.n))
    }

    /// Disjoint union, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        crate::error::cap("graph", n, MAX_VERTICES)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::NotAPermutation(n));
    }
    let mut seen = 0u128;
    for &p in perm {
        if p >= n || p >= 128 || seen & (1u128 << p) != 0 {
            return Err(Error::NotAPermutation(n));
        }
        seen |= 1u128 << p;
    }
    Ok(())
}

/// A positive rational number kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    p: u64,
    q: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidArgument(format!(
                "rational {p}/{q}: numerator and denominator must be positive"
            )));
        }
        let g = gcd(p, q);
        Ok(Rational { p: p / g, q: q / g })
    }

    pub fn integer(k: u64) -> Result<Self> {
        Rational::new(k, 1)
    }

    pub fn numer(self) -> u64 {
        self.p
    }

    pub fn denom(self) -> u64 {
        self.q
    }

    pub fn to_f64(self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.p as u128 * other.q as u128).cmp(&(other.p as u128 * self.q as u128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl std::str::FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not a rational: {s:?}"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        Rational::new(p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?)
    }
}
