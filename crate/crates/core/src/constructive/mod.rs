//! Direct constructions of avoiding circular orderings.
//!
//! Every construction re-checks its output against the relevant forbidden
//! family and reports [`Error::Verification`] if the check fails.

mod outerplanar;

use std::collections::VecDeque;

use crate::circular_order::{circ_iso, CircOrderedGraph};
use crate::error::{Error, Result};
use crate::families::{avoids, family_cf, family_forest, z, z_star};
use crate::graph::{
    bits, components, is_caterpillar_forest, is_tree, path, rational_complete, Graph,
};

pub use outerplanar::{order_outerplanar, OUTERPLANAR_CAP};

/// A BFS plan for the tree construction: vertices by distance from the root,
/// ties broken by ascending id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTreePlan {
    pub root: usize,
    pub order: Vec<usize>,
    pub parent: Vec<Option<usize>>,
}

impl RootedTreePlan {
    pub fn new(t: &Graph, root: usize) -> Result<Self> {
        if !is_tree(t) {
            return Err(Error::Precondition("input is not a tree".into()));
        }
        t.check_vertex(root)?;
        let n = t.n();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![None; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in t.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (dist[v], v));
        Ok(RootedTreePlan {
            root,
            order,
            parent,
        })
    }
}

fn insert_behind(seq: &mut Vec<usize>, x: usize, v: usize) {
    let i = seq.iter().position(|&y| y == x).expect("placed");
    seq.insert(i, v);
}

fn insert_ahead(seq: &mut Vec<usize>, x: usize, v: usize) {
    let i = seq.iter().position(|&y| y == x).expect("placed");
    seq.insert(i + 1, v);
}

/// Clockwise order of three placed vertices: `x` then `y` then `z`.
fn clockwise(seq: &[usize], x: usize, y: usize, z: usize) -> bool {
    let n = seq.len();
    let p = |v: usize| seq.iter().position(|&w| w == v).expect("placed");
    let (px, py, pz) = (p(x), p(y), p(z));
    (py + n - px) % n < (pz + n - px) % n
}

/// Circular ordering of a tree with no forest obstruction. Vertices are added
/// in [`RootedTreePlan`] order; each goes right next to its parent `a`, on the
/// side fixed by where the grandparent `b` and great-grandparent `c` sit.
pub fn order_tree(t: &Graph, root: usize) -> Result<CircOrderedGraph> {
    let plan = RootedTreePlan::new(t, root)?;
    let parent = |v: usize| plan.parent[v].expect("non-root");
    let mut seq = vec![root];
    for &v in &plan.order[1..] {
        let a = parent(v);
        if a == root || parent(a) == root {
            insert_behind(&mut seq, a, v);
            continue;
        }
        let b = parent(a);
        let c = parent(b);
        if clockwise(&seq, a, b, c) {
            insert_ahead(&mut seq, a, v);
        } else {
            insert_behind(&mut seq, a, v);
        }
    }
    let out = CircOrderedGraph::from_sequence(t.clone(), &seq)?;
    if !avoids(&out, &family_forest()) {
        return Err(Error::Verification(
            "tree ordering contains a forest obstruction".into(),
        ));
    }
    Ok(out)
}

/// Forests: each component is ordered by [`order_tree`] from its smallest
/// vertex and the components follow one another.
pub fn order_forest(g: &Graph) -> Result<CircOrderedGraph> {
    if !crate::graph::is_forest(g) {
        return Err(Error::Precondition("input is not a forest".into()));
    }
    let mut seq = Vec::with_capacity(g.n());
    for comp in components(g) {
        let verts: Vec<usize> = bits(comp).collect();
        let tree = g.induced_subgraph(&verts)?;
        let local = order_tree(&tree, 0)?;
        seq.extend(local.seq().iter().map(|&i| verts[i]));
    }
    let out = CircOrderedGraph::from_sequence(g.clone(), &seq)?;
    if !avoids(&out, &family_forest()) {
        return Err(Error::Verification(
            "forest ordering contains a forest obstruction".into(),
        ));
    }
    Ok(out)
}

/// Path vertex sequence of the zigzag on `k` vertices: odd indices ascending,
/// then even indices descending.
fn zigzag_sequence(k: usize) -> Vec<usize> {
    (1..k).step_by(2).chain((0..k).step_by(2).rev()).collect()
}

/// A circular ordering of `P_k` in which every induced `P_4` is ordered as
/// `Z` or `Z*`.
pub fn zigzag(k: usize) -> Result<CircOrderedGraph> {
    if k == 0 {
        return Err(Error::InvalidArgument("zigzag needs k >= 1".into()));
    }
    let out = CircOrderedGraph::from_sequence(path(k)?, &zigzag_sequence(k))?;
    if !is_zigzag(&out)? {
        return Err(Error::Verification(format!("zigzag({k}) self-check")));
    }
    Ok(out)
}

/// Whether every induced `P_4` of an ordered path is ordered as `Z` or `Z*`.
/// Errors when the underlying graph is not a path.
pub fn is_zigzag(cog: &CircOrderedGraph) -> Result<bool> {
    let g = cog.graph();
    let n = g.n();
    let ends: Vec<usize> = (0..n).filter(|&v| g.degree(v) <= 1).collect();
    let is_path =
        n > 0 && g.is_connected() && g.edge_count() + 1 == n && (0..n).all(|v| g.degree(v) <= 2);
    if !is_path {
        return Err(Error::Precondition("underlying graph is not a path".into()));
    }
    if n < 4 {
        return Ok(true);
    }
    let walk = walk_path(g, ends[0]);
    let (za, zb) = (z(), z_star());
    Ok(walk.windows(4).all(|w| {
        let sub = cog.restrict(w).expect("distinct vertices");
        circ_iso(&sub, &za) || circ_iso(&sub, &zb)
    }))
}

/// The vertices of a path component met walking from the end `start`.
fn walk_path(g: &Graph, start: usize) -> Vec<usize> {
    let mut out = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = g.neighbors(cur).find(|&w| w != prev) {
        out.push(next);
        prev = cur;
        cur = next;
    }
    out
}

/// Caterpillar forests: each component's spine, extended by a leaf at each
/// end, is laid out as a zigzag; the other leaves of a spine vertex go in the
/// gap between its two path neighbours. Components follow one another.
pub fn order_caterpillar(g: &Graph) -> Result<CircOrderedGraph> {
    if !is_caterpillar_forest(g) {
        return Err(Error::Precondition(
            "input is not a caterpillar forest".into(),
        ));
    }
    let mut seq = Vec::with_capacity(g.n());
    for comp in components(g) {
        seq.extend(caterpillar_component(g, comp));
    }
    let out = CircOrderedGraph::from_sequence(g.clone(), &seq)?;
    if !avoids(&out, &family_cf()) {
        return Err(Error::Verification(
            "caterpillar ordering contains a CF member".into(),
        ));
    }
    Ok(out)
}

fn caterpillar_component(g: &Graph, comp: u64) -> Vec<usize> {
    let verts: Vec<usize> = bits(comp).collect();
    if verts.len() <= 2 {
        return verts;
    }
    let spine_mask = verts
        .iter()
        .filter(|&&v| g.degree(v) >= 2)
        .fold(0u64, |m, &v| m | 1 << v);
    let spine_nbrs = |v: usize| (g.neighbors_mask(v) & spine_mask).count_ones();
    let first = bits(spine_mask)
        .find(|&v| spine_nbrs(v) <= 1)
        .expect("spine of a tree is a path");
    let mut dom = vec![first];
    let mut prev = usize::MAX;
    let mut cur = first;
    while let Some(next) = bits(g.neighbors_mask(cur) & spine_mask).find(|&w| w != prev) {
        dom.push(next);
        prev = cur;
        cur = next;
    }
    let leaf_of = |v: usize, skip: Option<usize>| {
        bits(g.neighbors_mask(v) & !spine_mask).find(|&l| Some(l) != skip)
    };
    let head = leaf_of(dom[0], None).expect("spine end has a leaf");
    let tail = leaf_of(*dom.last().expect("nonempty"), Some(head)).expect("spine end has a leaf");
    dom.insert(0, head);
    dom.push(tail);

    let k = dom.len();
    let base: Vec<usize> = zigzag_sequence(k).into_iter().map(|i| dom[i]).collect();
    let mut out = Vec::with_capacity(verts.len());
    for (i, &x) in base.iter().enumerate() {
        out.push(x);
        let y = base[(i + 1) % k];
        // The spine vertex whose two path neighbours are `x` and `y`.
        let mid = (1..k - 1).find(|&j| {
            (dom[j - 1] == x && dom[j + 1] == y) || (dom[j - 1] == y && dom[j + 1] == x)
        });
        if let Some(j) = mid {
            let v = dom[j];
            out.extend(bits(g.neighbors_mask(v) & !spine_mask).filter(|l| !dom.contains(l)));
        }
    }
    out
}

/// `K_{p/q}` ordered `0, 1, ..., p - 1`.
pub fn canonical_kpq_ordering(p: usize, q: usize) -> Result<CircOrderedGraph> {
    Ok(CircOrderedGraph::from_positional(rational_complete(p, q)?))
}

/// Pulls an ordering of `target` back along a homomorphism `h -> target`:
/// each target vertex is replaced by its preimage, in ascending id order.
pub fn lift_ordering(
    h: &Graph,
    hom: &[usize],
    target: &CircOrderedGraph,
) -> Result<CircOrderedGraph> {
    if hom.len() != h.n() {
        return Err(Error::InvalidArgument(format!(
            "map has {} entries for {} vertices",
            hom.len(),
            h.n()
        )));
    }
    for &x in hom {
        target.graph().check_vertex(x)?;
    }
    if let Some((u, v)) = h
        .edges()
        .into_iter()
        .find(|&(u, v)| !target.graph().has_edge(hom[u], hom[v]))
    {
        return Err(Error::Precondition(format!(
            "edge {u}-{v} is not preserved by the map"
        )));
    }
    let seq: Vec<usize> = target
        .seq()
        .iter()
        .flat_map(|&x| (0..h.n()).filter(move |&v| hom[v] == x))
        .collect();
    CircOrderedGraph::from_sequence(h.clone(), &seq)
}
