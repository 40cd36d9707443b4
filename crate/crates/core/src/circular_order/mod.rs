//! Circular orderings and circularly ordered graphs.
//!
//! A circular ordering is stored as a cyclic sequence rotated so that the
//! smallest id comes first. The ternary relation is derived from positions:
//! `(x, y, z)` holds when `y` is met strictly before `z` walking forward from
//! `x`.
//!
//! Much of the heavy lifting happens in *position space*: the ordered graph is
//! relabelled so that the vertex at position `i` becomes vertex `i`. Two
//! circularly ordered graphs are then isomorphic iff one position-space graph
//! is a rotation of the other.

mod catalog;
pub mod io;

use std::collections::HashSet;

use crate::code::{self, CODE_CAP};
use crate::error::{cap, Error, Result};
use crate::graph::{bits, check_permutation, Graph};

pub use catalog::{enumerate_catalog, CATALOG_CAP};

/// A circular ordering of `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircularOrdering {
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl CircularOrdering {
    /// The circular closure of the linear order given by `linear`.
    pub fn circular_closure(linear: &[usize]) -> Result<Self> {
        let n = linear.len();
        check_permutation(linear, n)?;
        let start = linear.iter().position(|&v| v == 0).unwrap_or(0);
        let seq: Vec<usize> = (0..n).map(|i| linear[(start + i) % n]).collect();
        Ok(Self::from_canonical(seq))
    }

    fn from_canonical(seq: Vec<usize>) -> Self {
        let mut pos = vec![0; seq.len()];
        for (i, &v) in seq.iter().enumerate() {
            pos[v] = i;
        }
        CircularOrdering { seq, pos }
    }

    /// The ordering `0, 1, ..., n-1`.
    pub fn identity(n: usize) -> Self {
        Self::from_canonical((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// The canonical cyclic sequence (starts with 0 when nonempty).
    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    /// Index of `v` in [`seq`](Self::seq).
    pub fn position(&self, v: usize) -> Option<usize> {
        self.pos.get(v).copied()
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.len(),
            })
        }
    }

    /// The linear order obtained by starting the cycle at `x`.
    pub fn cut_at(&self, x: usize) -> Result<Vec<usize>> {
        self.check(x)?;
        let n = self.len();
        let s = self.pos[x];
        Ok((0..n).map(|i| self.seq[(s + i) % n]).collect())
    }

    /// Whether `(x, y, z)` belongs to the ternary relation.
    pub fn triple_in(&self, x: usize, y: usize, z: usize) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        self.check(z)?;
        if x == y || y == z || x == z {
            return Err(Error::InvalidArgument(format!(
                "triple ({x}, {y}, {z}) has repeated entries"
            )));
        }
        Ok(self.triple_unchecked(x, y, z))
    }

    #[inline]
    pub(crate) fn triple_unchecked(&self, x: usize, y: usize, z: usize) -> bool {
        let n = self.len();
        let px = self.pos[x];
        (self.pos[y] + n - px) % n < (self.pos[z] + n - px) % n
    }

    /// The reflected ordering.
    pub fn reversed(&self) -> Self {
        let rev: Vec<usize> = self.seq.iter().rev().copied().collect();
        Self::circular_closure(&rev).expect("reversal of a permutation")
    }
}

impl std::fmt::Debug for CircularOrdering {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Circ{:?}", self.seq)
    }
}

/// Free-function form of [`CircularOrdering::circular_closure`].
pub fn circular_closure(linear: &[usize]) -> Result<CircularOrdering> {
    CircularOrdering::circular_closure(linear)
}

/// A graph together with a circular ordering of its vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CircOrderedGraph {
    graph: Graph,
    ord: CircularOrdering,
}

impl CircOrderedGraph {
    pub fn new(graph: Graph, ord: CircularOrdering) -> Result<Self> {
        if graph.n() != ord.len() {
            return Err(Error::InvalidArgument(format!(
                "ordering has {} vertices, graph has {}",
                ord.len(),
                graph.n()
            )));
        }
        Ok(CircOrderedGraph { graph, ord })
    }

    /// `graph` ordered by the circular closure of `seq`.
    pub fn from_sequence(graph: Graph, seq: &[usize]) -> Result<Self> {
        let ord = CircularOrdering::circular_closure(seq)?;
        Self::new(graph, ord)
    }

    /// A graph read in position space: vertex `i` sits at position `i`.
    pub fn from_positional(graph: Graph) -> Self {
        let ord = CircularOrdering::identity(graph.n());
        CircOrderedGraph { graph, ord }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn ordering(&self) -> &CircularOrdering {
        &self.ord
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn seq(&self) -> &[usize] {
        self.ord.seq()
    }

    /// The graph relabelled so that position `i` holds vertex `i`.
    pub fn positional(&self) -> Graph {
        self.graph.relabel_subset(self.ord.seq())
    }

    pub fn dual(&self) -> Self {
        CircOrderedGraph {
            graph: self.graph.clone(),
            ord: self.ord.reversed(),
        }
    }

    pub fn complement(&self) -> Self {
        CircOrderedGraph {
            graph: self.graph.complement(),
            ord: self.ord.clone(),
        }
    }

    /// Induced circularly ordered subgraph on `subset`, relabelled
    /// `0..|subset|` in ascending id order.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        let mut ids = subset.to_vec();
        ids.sort_unstable();
        ids.dedup();
        if ids.is_empty() {
            return Err(Error::InvalidArgument(
                "restriction to the empty set".into(),
            ));
        }
        let graph = self.graph.induced_subgraph(&ids)?;
        let mut relabel = vec![usize::MAX; self.n()];
        for (i, &v) in ids.iter().enumerate() {
            relabel[v] = i;
        }
        let seq: Vec<usize> = self
            .seq()
            .iter()
            .filter(|&&v| relabel[v] != usize::MAX)
            .map(|&v| relabel[v])
            .collect();
        Self::from_sequence(graph, &seq)
    }

    /// Two edges whose endpoints interleave around the circle.
    pub fn has_crossing_edges(&self) -> bool {
        let p = self.positional();
        p.edges().into_iter().any(|(a, b)| {
            // A chord (c, d) with a < c < b < d crosses (a, b).
            (a + 1..b).any(|c| bits(p.neighbors_mask(c)).any(|d| d > b))
        })
    }

    /// Canonical code: the smallest position-space code over all rotations.
    /// Equal codes on equal vertex counts mean isomorphic ordered graphs.
    pub fn canonical_code(&self) -> Result<u64> {
        cap("circular canonical code", self.n(), CODE_CAP)?;
        Ok(code::circular_code(self.positional().adjacency()))
    }

    /// The position-space representative with the smallest code.
    pub fn canonical_form(&self) -> Result<Self> {
        let c = self.canonical_code()?;
        let adj = code::decode(self.n(), c);
        Ok(Self::from_positional(Graph::from_adjacency_unchecked(adj)))
    }

    /// Points `(vertex, x, y)` on the unit circle: the `k`-th vertex of the
    /// sequence (counting from 1) sits at `(cos(2πk/n), -sin(2πk/n))`, so a
    /// clockwise sweep reads the sequence in order.
    pub fn unit_circle_embedding(&self) -> Vec<(usize, f64, f64)> {
        let n = self.n() as f64;
        self.seq()
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let t = (i + 1) as f64 * std::f64::consts::TAU / n;
                (v, t.cos(), -t.sin())
            })
            .collect()
    }
}

impl std::fmt::Debug for CircOrderedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CircOrderedGraph(seq={:?}, edges={:?})",
            self.seq(),
            self.graph.edges()
        )
    }
}

/// Isomorphism of circularly ordered graphs: some rotation of `b`'s
/// position-space graph equals `a`'s.
pub fn circ_iso(a: &CircOrderedGraph, b: &CircOrderedGraph) -> bool {
    if a.n() != b.n() || a.graph.edge_count() != b.graph.edge_count() {
        return false;
    }
    let pa = a.positional();
    let pb = b.positional();
    (0..a.n().max(1)).any(|r| code::rotate(pb.adjacency(), r) == pa.adjacency())
}

/// Whether `pattern` is isomorphic to an induced circularly ordered subgraph
/// of `host`.
pub fn contains_induced(host: &CircOrderedGraph, pattern: &CircOrderedGraph) -> bool {
    let m = pattern.n();
    let n = host.n();
    if m > n {
        return false;
    }
    if m == 0 {
        return true;
    }
    let ph = host.positional();
    if m > CODE_CAP {
        return subsets(n, m).any(|s| {
            let seq: Vec<usize> = s.iter().map(|&p| host.seq()[p]).collect();
            host.restrict(&seq).is_ok_and(|r| circ_iso(&r, pattern))
        });
    }
    let pp = pattern.positional();
    let targets: HashSet<u64> = code::rotation_codes(pp.adjacency()).into_iter().collect();
    let want_edges = pp.edge_count();
    subsets(n, m).any(|s| {
        let c = code::code_at(ph.adjacency(), &s);
        c.count_ones() as usize == want_edges && targets.contains(&c)
    })
}

/// All `m`-subsets of `0..n` as ascending vectors, in lexicographic order.
pub(crate) fn subsets(n: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = if m <= n { Some((0..m).collect()) } else { None };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let c = cur.as_mut().expect("checked above");
        let mut i = m;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if c[i] < n - m + i {
                c[i] += 1;
                for j in i + 1..m {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    fn perms(n: usize) -> Vec<Vec<usize>> {
        fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    go(cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    #[test]
    fn closure_and_cut() {
        let o = circular_closure(&[0, 1, 2, 3]).unwrap();
        assert!(o.triple_in(0, 1, 2).unwrap());
        assert!(!o.triple_in(0, 2, 1).unwrap());
        assert_eq!(circular_closure(&[2, 0, 1]).unwrap().seq(), &[0, 1, 2]);
        assert_eq!(o.cut_at(2).unwrap(), vec![2, 3, 0, 1]);
        assert_eq!(circular_closure(&[0]).unwrap().cut_at(0).unwrap(), vec![0]);
        assert!(o.triple_in(0, 0, 1).is_err());
        assert!(o.cut_at(4).is_err());
        assert!(circular_closure(&[0, 0]).is_err());
    }

    #[test]
    fn cut_round_trips_exhaustively() {
        for n in 1..=5 {
            for l in perms(n) {
                let o = circular_closure(&l).unwrap();
                assert_eq!(o.cut_at(l[0]).unwrap(), l);
                for x in 0..n {
                    assert_eq!(circular_closure(&o.cut_at(x).unwrap()).unwrap(), o);
                }
            }
        }
    }

    #[test]
    fn axioms_hold_exhaustively() {
        for n in 3..=6 {
            for l in perms(n) {
                let o = circular_closure(&l).unwrap();
                let t = |x, y, z| o.triple_in(x, y, z).unwrap();
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            if x == y || y == z || x == z {
                                continue;
                            }
                            // Cyclicity, asymmetry and totality.
                            assert_eq!(t(x, y, z), t(y, z, x));
                            assert_ne!(t(x, y, z), t(x, z, y));
                            // Transitivity.
                            for w in 0..n {
                                if [x, y, z].contains(&w) {
                                    continue;
                                }
                                if t(x, y, z) && t(x, z, w) {
                                    assert!(t(x, y, w));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rotations_give_the_same_ordering() {
        for l in perms(6) {
            let base = circular_closure(&l).unwrap();
            for r in 1..6 {
                let rot: Vec<usize> = (0..6).map(|i| l[(i + r) % 6]).collect();
                assert_eq!(circular_closure(&rot).unwrap(), base);
            }
        }
    }

    #[test]
    fn restrict_examples() {
        let sc5 = CircOrderedGraph::from_sequence(cycle(5).unwrap(), &[0, 1, 2, 3, 4]).unwrap();
        let sp4 = CircOrderedGraph::from_sequence(path(4).unwrap(), &[0, 1, 2, 3]).unwrap();
        assert!(circ_iso(&sc5.restrict(&[1, 2, 3, 4]).unwrap(), &sp4));
        assert_eq!(sc5.restrict(&[0, 1, 2, 3, 4]).unwrap(), sc5);
        let sc4 = CircOrderedGraph::from_sequence(cycle(4).unwrap(), &[0, 1, 2, 3]).unwrap();
        let r = sc4.restrict(&[0, 2]).unwrap();
        assert_eq!((r.n(), r.graph().edge_count()), (2, 0));
        assert!(sc4.restrict(&[]).is_err());
        assert!(contains_induced(&sc5, &sp4));
        assert!(contains_induced(&sc5, &sc5));
    }

    #[test]
    fn iso_distinguishes_crossings() {
        let c4 = cycle(4).unwrap();
        let simple = CircOrderedGraph::from_sequence(c4.clone(), &[0, 1, 2, 3]).unwrap();
        let crossed = CircOrderedGraph::from_sequence(c4, &[0, 2, 1, 3]).unwrap();
        assert!(!circ_iso(&simple, &crossed));
        let e = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let f = Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        let e = CircOrderedGraph::from_sequence(e, &[0, 1, 2, 3]).unwrap();
        let f = CircOrderedGraph::from_sequence(f, &[0, 1, 2, 3]).unwrap();
        assert!(!circ_iso(&e, &f));
        assert!(f.has_crossing_edges() && !e.has_crossing_edges());
        assert!(!contains_induced(&simple, &f));
        let rotated =
            CircOrderedGraph::from_sequence(simple.graph().clone(), &[1, 2, 3, 0]).unwrap();
        assert!(circ_iso(&simple, &rotated));
    }

    #[test]
    fn duality_and_complement_are_involutions() {
        let g = Graph::from_edges(5, &[(0, 2), (1, 4), (3, 4)]).unwrap();
        let x = CircOrderedGraph::from_sequence(g, &[0, 3, 1, 4, 2]).unwrap();
        assert_eq!(x.dual().dual(), x);
        assert_eq!(x.complement().complement(), x);
        assert_eq!(x.dual().seq(), &[0, 2, 4, 1, 3]);
    }

    #[test]
    fn embedding_reads_clockwise_and_mirrors_under_duality() {
        let x = CircOrderedGraph::from_sequence(cycle(4).unwrap(), &[0, 1, 2, 3]).unwrap();
        let pts = x.unit_circle_embedding();
        assert!(pts
            .iter()
            .all(|&(_, a, b)| (a * a + b * b - 1.0).abs() < 1e-12));
        assert!(pts[0].1.abs() < 1e-12 && (pts[0].2 + 1.0).abs() < 1e-12);
        // Clockwise means decreasing mathematical angle.
        let angle = |p: &(usize, f64, f64)| (-p.2).atan2(p.1).rem_euclid(std::f64::consts::TAU);
        let mut sorted = pts.clone();
        sorted.sort_by(|a, b| angle(a).total_cmp(&angle(b)));
        let read: Vec<usize> = sorted.iter().map(|p| p.0).collect();
        assert_eq!(circular_closure(&read).unwrap().seq(), x.seq());

        // Mirroring every labelled point across the y-axis and reading
        // clockwise again yields the dual.
        let g = Graph::from_edges(5, &[(0, 2)]).unwrap();
        let y = CircOrderedGraph::from_sequence(g, &[0, 3, 1, 4, 2]).unwrap();
        let mut mirrored: Vec<(usize, f64, f64)> = y
            .unit_circle_embedding()
            .into_iter()
            .map(|(v, a, b)| (v, -a, b))
            .collect();
        mirrored.sort_by(|a, b| angle(a).total_cmp(&angle(b)));
        let read: Vec<usize> = mirrored.iter().map(|p| p.0).collect();
        assert_eq!(&circular_closure(&read).unwrap(), y.dual().ordering());
    }

    #[test]
    fn subsets_enumerates_binomials() {
        assert_eq!(subsets(5, 2).count(), 10);
        assert_eq!(subsets(6, 0).count(), 1);
        assert_eq!(subsets(3, 4).count(), 0);
        assert_eq!(subsets(4, 2).next(), Some(vec![0, 1]));
    }

    #[test]
    fn crossing_edges_of_simple_cycles() {
        for k in 3..=8 {
            let x = CircOrderedGraph::from_positional(cycle(k).unwrap());
            assert!(!x.has_crossing_edges());
        }
    }
}
