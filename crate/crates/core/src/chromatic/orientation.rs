//! Circular chromatic number from acyclic orientations and cycle ratios.

use std::collections::HashSet;

use crate::error::{cap, Error, Result};
use crate::graph::{bit, bits, is_forest, Graph, Rational};

pub const ORIENTATION_CAP: usize = 8;

/// An orientation of every edge of `base`. Bit `e` of `forward` is set when
/// the `e`-th edge of `base.edges()` points from its smaller endpoint to its
/// larger one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    base: Graph,
    edges: Vec<(usize, usize)>,
    forward: u64,
}

impl Orientation {
    pub fn new(base: Graph, forward: u64) -> Result<Self> {
        let edges = base.edges();
        if edges.len() > 64 {
            return Err(Error::InvalidArgument("more than 64 edges".into()));
        }
        Ok(Orientation {
            base,
            edges,
            forward,
        })
    }

    /// Orients every edge from the earlier vertex of `order` to the later.
    pub fn from_order(base: &Graph, order: &[usize]) -> Result<Self> {
        let mut rank = vec![0; base.n()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let forward = base
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| rank[u] < rank[v])
            .fold(0u64, |m, (e, _)| m | bit(e));
        Self::new(base.clone(), forward)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// The arcs as `(tail, head)` pairs in edge order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| {
                if self.forward >> e & 1 == 1 {
                    (u, v)
                } else {
                    (v, u)
                }
            })
            .collect()
    }

    pub fn points(&self, from: usize, to: usize) -> bool {
        self.arcs().contains(&(from, to))
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm on the out-neighbourhood masks.
        let n = self.base.n();
        let mut out = vec![0u64; n];
        let mut indeg = vec![0usize; n];
        for (t, h) in self.arcs() {
            out[t] |= bit(h);
            indeg[h] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for w in bits(out[v]) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        seen == n
    }
}

/// A cycle walked in the direction of its vertex list, with its arcs split
/// into those traversed forwards and backwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTraversal {
    pub vertices: Vec<usize>,
    pub forward_count: usize,
    pub backward_count: usize,
}

pub fn cycle_traversal(o: &Orientation, cycle: &[usize]) -> CycleTraversal {
    let k = cycle.len();
    let forward_count = (0..k)
        .filter(|&i| o.points(cycle[i], cycle[(i + 1) % k]))
        .count();
    CycleTraversal {
        vertices: cycle.to_vec(),
        forward_count,
        backward_count: k - forward_count,
    }
}

/// Every simple cycle once, as a vertex list starting at its smallest vertex
/// with the second vertex smaller than the last.
pub fn simple_cycles(g: &Graph) -> Vec<Vec<usize>> {
    fn walk(g: &Graph, s: usize, path: &mut Vec<usize>, used: u64, out: &mut Vec<Vec<usize>>) {
        let cur = *path.last().expect("nonempty");
        for w in bits(g.neighbors_mask(cur)) {
            if w == s && path.len() >= 3 && path[1] < cur {
                out.push(path.clone());
            } else if w > s && used & bit(w) == 0 {
                path.push(w);
                walk(g, s, path, used | bit(w), out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        walk(g, s, &mut vec![s], bit(s), &mut out);
    }
    out
}

/// Distinct acyclic orientations, one per topological order class.
pub fn acyclic_orientations(g: &Graph) -> Result<Vec<Orientation>> {
    cap("acyclic orientations", g.n(), ORIENTATION_CAP)?;
    let edges = g.edges();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut order: Vec<usize> = Vec::with_capacity(g.n());
    fn rec(
        g: &Graph,
        edges: &[(usize, usize)],
        order: &mut Vec<usize>,
        used: u64,
        seen: &mut HashSet<u64>,
        out: &mut Vec<Orientation>,
    ) {
        if order.len() == g.n() {
            let mut rank = vec![0; g.n()];
            for (i, &v) in order.iter().enumerate() {
                rank[v] = i;
            }
            let fwd = edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| rank[u] < rank[v])
                .fold(0u64, |m, (e, _)| m | bit(e));
            if seen.insert(fwd) {
                out.push(Orientation::new(g.clone(), fwd).expect("at most 28 edges"));
            }
            return;
        }
        for v in 0..g.n() {
            if used & bit(v) == 0 {
                order.push(v);
                rec(g, edges, order, used | bit(v), seen, out);
                order.pop();
            }
        }
    }
    rec(g, &edges, &mut order, 0, &mut seen, &mut out);
    Ok(out)
}

/// Minimum over acyclic orientations of the maximum over cycles (in either
/// direction) of `1 + forward/backward`. Forests give 2, or 1 when edgeless.
pub fn chi_c_orientation(g: &Graph) -> Result<Rational> {
    cap("orientation method", g.n(), ORIENTATION_CAP)?;
    if is_forest(g) {
        return Rational::integer(if g.is_edgeless() { 1 } else { 2 });
    }
    let edges = g.edges();
    let mut idx = vec![vec![usize::MAX; g.n()]; g.n()];
    for (e, &(u, v)) in edges.iter().enumerate() {
        idx[u][v] = e;
        idx[v][u] = e;
    }
    // Per cycle: edges walked low-to-high, edges walked high-to-low, length.
    let cycles: Vec<(u64, u64, u32)> = simple_cycles(g)
        .iter()
        .map(|c| {
            let k = c.len();
            let (mut up, mut down) = (0u64, 0u64);
            for i in 0..k {
                let (a, b) = (c[i], c[(i + 1) % k]);
                if a < b {
                    up |= bit(idx[a][b]);
                } else {
                    down |= bit(idx[a][b]);
                }
            }
            (up, down, k as u32)
        })
        .collect();
    let mut best: Option<Rational> = None;
    for o in acyclic_orientations(g)? {
        let fwd = o.forward;
        let mut worst: Option<Rational> = None;
        for &(up, down, k) in &cycles {
            let f = (up & fwd).count_ones() + (down & !fwd).count_ones();
            let b = k - f;
            // Both directions: 1 + max(f,b)/min(f,b) = k / min(f,b).
            let value = Rational::new(k as u64, f.min(b) as u64)?;
            if worst.is_none_or(|w| value > w) {
                worst = Some(value);
            }
            if best.is_some_and(|b| worst.is_some_and(|w| w >= b)) {
                break;
            }
        }
        let worst = worst.expect("graph has a cycle");
        if best.is_none_or(|b| worst < b) {
            best = Some(worst);
        }
    }
    Ok(best.expect("some acyclic orientation exists"))
}
