//! Ordered patterns, linear orderings and linearization.

pub mod io;

use std::collections::BTreeSet;

use crate::circular_order::{subsets, CircOrderedGraph};
use crate::code::{self, CODE_CAP};
use crate::error::{cap, Error, Result};
use crate::families::{ForbiddenFamily, OrderKind, Semantics};
use crate::graph::{check_permutation, Graph};

/// A graph with a linear ordering: `order[i]` is the vertex of rank `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinOrderedGraph {
    graph: Graph,
    order: Vec<usize>,
}

impl LinOrderedGraph {
    pub fn new(graph: Graph, order: Vec<usize>) -> Result<Self> {
        check_permutation(&order, graph.n())?;
        Ok(LinOrderedGraph { graph, order })
    }

    /// A graph read in position space: vertex `i` has rank `i`.
    pub fn from_positional(graph: Graph) -> Self {
        let order = (0..graph.n()).collect();
        LinOrderedGraph { graph, order }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn positional(&self) -> Graph {
        self.graph.relabel_subset(&self.order)
    }

    /// The reversed order.
    pub fn dual(&self) -> Self {
        let order = self.order.iter().rev().copied().collect();
        LinOrderedGraph {
            graph: self.graph.clone(),
            order,
        }
    }

    /// The circularly ordered graph given by the circular closure.
    pub fn circular_closure(&self) -> CircOrderedGraph {
        CircOrderedGraph::from_sequence(self.graph.clone(), &self.order)
            .expect("order is a permutation")
    }
}

impl std::fmt::Debug for LinOrderedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "LinOrderedGraph(order={:?}, edges={:?})",
            self.order,
            self.graph.edges()
        )
    }
}

/// Required edges, forbidden edges and an ordering of `0..n`. The pattern
/// stands for every ordered graph that has all required edges, none of the
/// forbidden ones, and anything on the remaining pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPattern {
    n: usize,
    required: Vec<(usize, usize)>,
    forbidden: Vec<(usize, usize)>,
    kind: OrderKind,
    sequence: Vec<usize>,
}

fn normalize_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let mut out = BTreeSet::new();
    for &(u, v) in pairs {
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange {
                vertex: u.max(v),
                n,
            });
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("pair ({u}, {u}) is a loop")));
        }
        out.insert((u.min(v), u.max(v)));
    }
    Ok(out.into_iter().collect())
}

impl OrderedPattern {
    pub fn new(
        n: usize,
        required: &[(usize, usize)],
        forbidden: &[(usize, usize)],
        kind: OrderKind,
        sequence: Vec<usize>,
    ) -> Result<Self> {
        cap("pattern", n, CODE_CAP)?;
        check_permutation(&sequence, n)?;
        let required = normalize_pairs(n, required)?;
        let forbidden = normalize_pairs(n, forbidden)?;
        if let Some(p) = required.iter().find(|p| forbidden.contains(p)) {
            return Err(Error::InvalidArgument(format!(
                "pair {p:?} is both required and forbidden"
            )));
        }
        Ok(OrderedPattern {
            n,
            required,
            forbidden,
            kind,
            sequence,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn required(&self) -> &[(usize, usize)] {
        &self.required
    }

    pub fn forbidden(&self) -> &[(usize, usize)] {
        &self.forbidden
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// Pairs in neither set.
    pub fn unconstrained(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|p| !self.required.contains(p) && !self.forbidden.contains(p))
            .collect()
    }

    /// Every labelled graph the pattern represents, one per subset of the
    /// unconstrained pairs.
    pub fn represented(&self) -> Vec<Graph> {
        let free = self.unconstrained();
        let base = Graph::from_edges(self.n, &self.required).expect("validated pairs");
        (0..1u64 << free.len())
            .map(|mask| {
                let mut g = base.clone();
                for (k, &(u, v)) in free.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        g.add_edge(u, v).expect("validated pairs");
                    }
                }
                g
            })
            .collect()
    }

    pub fn represented_circular(&self) -> Vec<CircOrderedGraph> {
        self.represented()
            .into_iter()
            .map(|g| CircOrderedGraph::from_sequence(g, &self.sequence).expect("validated"))
            .collect()
    }

    pub fn represented_linear(&self) -> Vec<LinOrderedGraph> {
        self.represented()
            .into_iter()
            .map(|g| LinOrderedGraph::new(g, self.sequence.clone()).expect("validated"))
            .collect()
    }

    /// The represented graphs in position space.
    pub(crate) fn represented_positional(&self) -> Vec<Graph> {
        self.represented()
            .into_iter()
            .map(|g| g.relabel_subset(&self.sequence))
            .collect()
    }

    /// The expanded family (induced semantics, duplicates removed).
    pub fn to_family(&self, name: &str) -> Result<ForbiddenFamily> {
        ForbiddenFamily::new(
            name,
            self.kind,
            Semantics::Induced,
            self.represented_positional(),
        )
    }
}

/// All circularly ordered spanning supergraphs of `seed`.
pub fn spanning_supergraph_closure(name: &str, seed: &CircOrderedGraph) -> Result<ForbiddenFamily> {
    OrderedPattern::new(
        seed.n(),
        &seed.graph().edges(),
        &[],
        OrderKind::Circular,
        seed.seq().to_vec(),
    )?
    .to_family(name)
}

/// The linear orderings whose circular closure lies in `family`: every cut of
/// every member, duplicates removed.
pub fn linearize(family: &ForbiddenFamily) -> Result<ForbiddenFamily> {
    if family.kind() != OrderKind::Circular {
        return Err(Error::InvalidArgument(format!(
            "family {} is not circular",
            family.name()
        )));
    }
    let mut members = Vec::new();
    for m in family.members() {
        for r in 0..m.n().max(1) {
            members.push(Graph::from_adjacency_unchecked(code::rotate(
                m.adjacency(),
                r,
            )));
        }
    }
    ForbiddenFamily::new(
        &format!("L({})", family.name()),
        OrderKind::Linear,
        family.semantics(),
        members,
    )
}

/// Order-preserving containment of `pat` in `host`.
pub fn lin_contains(host: &LinOrderedGraph, pat: &LinOrderedGraph, semantics: Semantics) -> bool {
    let m = pat.n();
    if m > host.n() {
        return false;
    }
    let h = host.positional();
    let p = pat.positional();
    if m > CODE_CAP {
        return subsets(host.n(), m).any(|s| {
            s.iter().enumerate().all(|(i, &a)| {
                s.iter().enumerate().skip(i + 1).all(|(j, &b)| {
                    let (he, pe) = (h.has_edge(a, b), p.has_edge(i, j));
                    match semantics {
                        Semantics::Induced => he == pe,
                        Semantics::Subgraph => he || !pe,
                    }
                })
            })
        });
    }
    let want = code::code(p.adjacency());
    subsets(host.n(), m).any(|s| {
        let c = code::code_at(h.adjacency(), &s);
        match semantics {
            Semantics::Induced => c == want,
            Semantics::Subgraph => want & !c == 0,
        }
    })
}

pub fn lin_avoids(host: &LinOrderedGraph, family: &ForbiddenFamily, semantics: Semantics) -> bool {
    family
        .linear_members()
        .iter()
        .all(|p| !lin_contains(host, p, semantics))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circular_order::circ_iso;
    use crate::graph::{complete, cycle, path};

    fn st(k: usize) -> LinOrderedGraph {
        LinOrderedGraph::from_positional(path(k).unwrap())
    }

    #[test]
    fn represented_counts() {
        let all = OrderedPattern::new(
            3,
            &[(0, 1), (0, 2), (1, 2)],
            &[],
            OrderKind::Circular,
            vec![0, 1, 2],
        )
        .unwrap();
        assert_eq!(all.represented().len(), 1);
        let free = OrderedPattern::new(3, &[], &[], OrderKind::Circular, vec![0, 1, 2]).unwrap();
        assert_eq!(free.represented().len(), 8);
        assert!(
            OrderedPattern::new(3, &[(0, 1)], &[(1, 0)], OrderKind::Linear, vec![0, 1, 2]).is_err()
        );
    }

    #[test]
    fn represented_respects_constraints() {
        let p = OrderedPattern::new(
            4,
            &[(1, 3)],
            &[(0, 3), (1, 2)],
            OrderKind::Circular,
            vec![0, 1, 2, 3],
        )
        .unwrap();
        for g in p.represented() {
            assert!(g.has_edge(1, 3) && !g.has_edge(0, 3) && !g.has_edge(1, 2));
        }
    }

    #[test]
    fn closure_of_complete_is_itself() {
        let k4 = CircOrderedGraph::from_positional(complete(4).unwrap());
        let f = spanning_supergraph_closure("K4", &k4).unwrap();
        assert_eq!(f.len(), 1);
        assert!(circ_iso(&f.circular_members()[0], &k4));
    }

    #[test]
    fn linearize_three_vertices() {
        let p3 = CircOrderedGraph::from_positional(path(3).unwrap());
        let f = ForbiddenFamily::from_circular("P3", Semantics::Induced, &[p3]).unwrap();
        let l = linearize(&f).unwrap();
        assert_eq!(l.len(), 3);
        for m in l.linear_members() {
            assert!(f
                .circular_members()
                .iter()
                .any(|c| circ_iso(c, &m.circular_closure())));
        }
    }

    #[test]
    fn linear_containment() {
        assert!(lin_contains(&st(4), &st(3), Semantics::Subgraph));
        let stc4 = LinOrderedGraph::from_positional(cycle(4).unwrap());
        assert!(lin_contains(&stc4, &st(4), Semantics::Subgraph));
        assert!(!lin_contains(&stc4, &st(4), Semantics::Induced));
        let empty = LinOrderedGraph::from_positional(Graph::empty(5).unwrap());
        assert!(!lin_contains(&empty, &st(2), Semantics::Subgraph));
        let k3 = LinOrderedGraph::from_positional(complete(3).unwrap());
        assert!(lin_contains(&k3, &st(3), Semantics::Subgraph));
        let fam =
            ForbiddenFamily::new("none", OrderKind::Linear, Semantics::Induced, vec![]).unwrap();
        assert!(lin_avoids(&k3, &fam, Semantics::Induced));
    }

    #[test]
    fn dual_reverses() {
        let x = LinOrderedGraph::new(path(3).unwrap(), vec![2, 0, 1]).unwrap();
        assert_eq!(x.dual().order(), &[1, 0, 2]);
        assert_eq!(x.dual().dual(), x);
    }
}
