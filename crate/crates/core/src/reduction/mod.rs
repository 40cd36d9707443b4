//! The gadget reduction from the cyclic ordering problem to finding a
//! circular ordering that avoids every non-distinguished ordering of the
//! gadget graph.

mod io;

use std::collections::HashSet;

use crate::circular_order::{CircOrderedGraph, CircularOrdering};
use crate::error::{cap, Error, Result};
use crate::families::{avoids, family_fco};
use crate::graph::{g_aco, is_isomorphic, Graph, MAX_VERTICES};

pub use io::{parse_instance, write_instance, write_role_map};

/// Largest element count accepted by [`solve_cyclic_ordering`].
pub const SOLVE_CAP: usize = 8;

/// Elements `A` (by name) and ordered triples `R` over their indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicOrderingInstance {
    elements: Vec<String>,
    triples: Vec<[usize; 3]>,
}

impl CyclicOrderingInstance {
    pub fn new(elements: Vec<String>, triples: Vec<[usize; 3]>) -> Result<Self> {
        let mut seen = HashSet::new();
        for e in &elements {
            if !seen.insert(e.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate element {e}")));
            }
        }
        for t in &triples {
            if t.iter().any(|&x| x >= elements.len()) {
                return Err(Error::InvalidArgument(format!(
                    "triple {t:?} is out of range"
                )));
            }
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(Error::InvalidArgument(format!(
                    "triple {t:?} repeats an element"
                )));
            }
        }
        Ok(CyclicOrderingInstance { elements, triples })
    }

    /// Elements named `0, 1, ..., n - 1`.
    pub fn numbered(n: usize, triples: Vec<[usize; 3]>) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()).collect(), triples)
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    /// Whether the cyclic sequence `order` of element indices generates every
    /// triple.
    pub fn satisfied_by(&self, order: &[usize]) -> bool {
        if order.len() != self.elements.len() {
            return false;
        }
        let Ok(ord) = CircularOrdering::circular_closure(order) else {
            return false;
        };
        self.triples
            .iter()
            .all(|&[a, b, c]| ord.triple_unchecked(a, b, c))
    }
}

/// The reduction graph with its vertex roles. Element `i` is vertex `i`;
/// triple `j` owns the gadget vertices `|A| + 3j + {0, 1, 2}`.
#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub a_ids: Vec<usize>,
    /// `(r_x, r_y, r_z)` per triple.
    pub gadget_ids: Vec<[usize; 3]>,
    triples: Vec<[usize; 3]>,
}

impl ReductionOutput {
    /// Per triple, the vertices playing `v1, ..., v6` of the gadget:
    /// `a, b, c, r_x, r_y, r_z`.
    pub fn role_map(&self) -> Vec<[usize; 6]> {
        self.triples
            .iter()
            .zip(&self.gadget_ids)
            .map(|(&[a, b, c], &[x, y, z])| [self.a_ids[a], self.a_ids[b], self.a_ids[c], x, y, z])
            .collect()
    }
}

pub fn build_reduction(inst: &CyclicOrderingInstance) -> Result<ReductionOutput> {
    let na = inst.elements.len();
    let n = na + 3 * inst.triples.len();
    cap("reduction graph", n, MAX_VERTICES)?;
    let mut g = Graph::empty(n)?;
    let a_ids: Vec<usize> = (0..na).collect();
    let mut gadget_ids = Vec::with_capacity(inst.triples.len());
    for (j, &[a, b, c]) in inst.triples.iter().enumerate() {
        let (x, y, z) = (na + 3 * j, na + 3 * j + 1, na + 3 * j + 2);
        for (u, v) in [
            (x, y),
            (x, z),
            (y, z),
            (z, a),
            (z, b),
            (z, c),
            (y, b),
            (y, c),
            (x, c),
        ] {
            g.add_edge(u, v)?;
        }
        gadget_ids.push([x, y, z]);
    }
    Ok(ReductionOutput {
        graph: g,
        a_ids,
        gadget_ids,
        triples: inst.triples.clone(),
    })
}

/// A cyclic order of the elements (starting with element 0) that generates
/// every triple, by trying all of them.
pub fn solve_cyclic_ordering(inst: &CyclicOrderingInstance) -> Result<Option<Vec<usize>>> {
    let n = inst.elements.len();
    cap("cyclic ordering solver", n, SOLVE_CAP)?;
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut seq: Vec<usize> = (0..n).collect();
    let mut found = None;
    permute_tail(&mut seq, 1, &mut |s| {
        if inst.satisfied_by(s) {
            found = Some(s.to_vec());
            true
        } else {
            false
        }
    });
    Ok(found)
}

fn permute_tail(seq: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k + 1 >= seq.len() {
        return visit(seq);
    }
    for i in k..seq.len() {
        seq.swap(k, i);
        if permute_tail(seq, k + 1, visit) {
            return true;
        }
        seq.swap(k, i);
    }
    false
}

/// Every 6-vertex set inducing a copy of the gadget graph, each as a sorted
/// list. The gadget has exactly one vertex adjacent to all the others, so
/// each copy is found from that vertex and five of its neighbours.
pub fn find_gaco_copies(g: &Graph) -> Vec<Vec<usize>> {
    let gadget = g_aco();
    let mut out = HashSet::new();
    for u in 0..g.n() {
        let nbrs: Vec<usize> = g.neighbors(u).collect();
        if nbrs.len() < 5 {
            continue;
        }
        for pick in crate::circular_order::subsets(nbrs.len(), 5) {
            let mut set: Vec<usize> = pick.iter().map(|&i| nbrs[i]).collect();
            set.push(u);
            set.sort_unstable();
            let sub = g.induced_subgraph(&set).expect("distinct vertices");
            if sub.edge_count() == 9 && is_isomorphic(&sub, &gadget) {
                out.insert(set);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = out.into_iter().collect();
    out.sort();
    out
}

/// The cyclic order the elements inherit from a witness ordering of the
/// reduction graph. The witness is re-checked first.
pub fn extract_cyclic_order(
    red: &ReductionOutput,
    witness: &CircularOrdering,
) -> Result<Vec<usize>> {
    let cog = CircOrderedGraph::new(red.graph.clone(), witness.clone())?;
    if !avoids(&cog, &family_fco()) {
        return Err(Error::Verification(
            "witness contains a forbidden ordering of the gadget".into(),
        ));
    }
    let order: Vec<usize> = witness
        .seq()
        .iter()
        .filter_map(|v| red.a_ids.iter().position(|a| a == v))
        .collect();
    let ok = red.triples.iter().all(|&[a, b, c]| {
        let p = |x: usize| order.iter().position(|&e| e == x).expect("element");
        let (pa, pb, pc) = (p(a), p(b), p(c));
        let n = order.len();
        (pb + n - pa) % n < (pc + n - pa) % n
    });
    if !ok {
        return Err(Error::Verification(
            "inherited order misses a triple".into(),
        ));
    }
    Ok(order)
}

/// Extends a satisfying cyclic order of the elements to the reduction graph:
/// each triple's `r_x, r_y, r_z` go right after its third element.
pub fn embed_solution(red: &ReductionOutput, order: &[usize]) -> Result<CircularOrdering> {
    let na = red.a_ids.len();
    let inst_ok = order.len() == na
        && CircularOrdering::circular_closure(order).is_ok_and(|o| {
            red.triples
                .iter()
                .all(|&[a, b, c]| o.triple_unchecked(a, b, c))
        });
    if !inst_ok {
        return Err(Error::Precondition(
            "order does not satisfy every triple".into(),
        ));
    }
    let mut seq = Vec::with_capacity(red.graph.n());
    for &e in order {
        seq.push(red.a_ids[e]);
        for (t, g) in red.triples.iter().zip(&red.gadget_ids) {
            if t[2] == e {
                seq.extend_from_slice(g);
            }
        }
    }
    let ord = CircularOrdering::circular_closure(&seq)?;
    let cog = CircOrderedGraph::new(red.graph.clone(), ord.clone())?;
    if !avoids(&cog, &family_fco()) {
        return Err(Error::Verification(
            "embedded ordering is not gadget-free".into(),
        ));
    }
    Ok(ord)
}
