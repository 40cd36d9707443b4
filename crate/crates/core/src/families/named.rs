//! Named ordered graphs and the fixed forbidden families.
//!
//! Four-vertex drawings use positions `0..4` for `v1..v4` read clockwise.

use super::{ForbiddenFamily, OrderKind, Semantics};
use crate::circular_order::CircOrderedGraph;
use crate::error::{Error, Result};
use crate::graph::{claw, cycle, g_aco, path, Graph};
use crate::patterns::{spanning_supergraph_closure, OrderedPattern};

fn positional(n: usize, edges: &[(usize, usize)]) -> CircOrderedGraph {
    CircOrderedGraph::from_positional(Graph::from_edges(n, edges).expect("static graph"))
}

/// The simple `k`-path: `P_k` in its natural order.
pub fn sp(k: usize) -> Result<CircOrderedGraph> {
    Ok(CircOrderedGraph::from_positional(path(k)?))
}

/// The simple `k`-cycle.
pub fn sc(k: usize) -> Result<CircOrderedGraph> {
    Ok(CircOrderedGraph::from_positional(cycle(k)?))
}

/// `C_5` on `v1..v5` ordered `v1, v4, v2, v5, v3`.
pub fn c5_star() -> CircOrderedGraph {
    CircOrderedGraph::from_sequence(cycle(5).expect("static"), &[0, 3, 1, 4, 2])
        .expect("static ordering")
}

/// Two crossing edges, `v1v3` and `v2v4`.
pub fn cr() -> CircOrderedGraph {
    positional(4, &[(0, 2), (1, 3)])
}

/// The path `v3 v1 v4 v2`, whose first and last edges cross.
pub fn crossed_p4() -> CircOrderedGraph {
    positional(4, &[(0, 2), (0, 3), (1, 3)])
}

/// The 4-cycle `v1 v2 v4 v3`.
pub fn crossed_c4() -> CircOrderedGraph {
    positional(4, &[(0, 1), (1, 3), (2, 3), (0, 2)])
}

/// The path `v1 v2 v4 v3`.
pub fn z() -> CircOrderedGraph {
    positional(4, &[(0, 1), (1, 3), (2, 3)])
}

/// The path `v2 v1 v3 v4`, the dual of [`z`].
pub fn z_star() -> CircOrderedGraph {
    positional(4, &[(0, 1), (0, 2), (2, 3)])
}

/// The unique circular ordering of the claw.
pub fn claw_ordering() -> CircOrderedGraph {
    CircOrderedGraph::from_positional(claw())
}

/// Required `v2v4`, forbidden `v1v4` and `v2v3`.
pub fn pattern_ca() -> OrderedPattern {
    OrderedPattern::new(
        4,
        &[(1, 3)],
        &[(0, 3), (1, 2)],
        OrderKind::Circular,
        vec![0, 1, 2, 3],
    )
    .expect("static pattern")
}

/// The two linear patterns generating the linearization of the CA pattern.
pub fn lca_patterns() -> [OrderedPattern; 2] {
    let seq = vec![0, 1, 2, 3];
    [
        OrderedPattern::new(
            4,
            &[(0, 2)],
            &[(0, 1), (2, 3)],
            OrderKind::Linear,
            seq.clone(),
        )
        .expect("static pattern"),
        OrderedPattern::new(4, &[(1, 3)], &[(1, 2), (0, 3)], OrderKind::Linear, seq)
            .expect("static pattern"),
    ]
}

pub fn family_ca() -> ForbiddenFamily {
    pattern_ca().to_family("CA").expect("static family")
}

/// Spanning supergraphs of [`cr`].
pub fn family_cr() -> ForbiddenFamily {
    spanning_supergraph_closure("CR", &cr()).expect("static family")
}

fn lf_members() -> Vec<CircOrderedGraph> {
    vec![
        sc(3).expect("static"),
        sc(4).expect("static"),
        crossed_c4(),
        sp(4).expect("static"),
        crossed_p4(),
        claw_ordering(),
    ]
}

pub fn family_lf() -> ForbiddenFamily {
    ForbiddenFamily::from_circular("LF", Semantics::Induced, &lf_members()).expect("static")
}

/// [`family_lf`] without the claw.
pub fn family_cf() -> ForbiddenFamily {
    let mut m = lf_members();
    m.pop();
    ForbiddenFamily::from_circular("CF", Semantics::Induced, &m).expect("static")
}

/// The seven-member family characterising forests.
pub fn family_forest() -> ForbiddenFamily {
    let m = [
        sc(3).expect("static"),
        sc(4).expect("static"),
        crossed_c4(),
        cr(),
        crossed_p4(),
        sc(5).expect("static"),
        sp(5).expect("static"),
    ];
    ForbiddenFamily::from_circular("F", Semantics::Induced, &m).expect("static")
}

/// The gadget graph in its distinguished order `v1, ..., v6`.
pub fn aco() -> CircOrderedGraph {
    CircOrderedGraph::from_positional(g_aco())
}

/// Every circular ordering of the gadget graph not isomorphic to [`aco`].
pub fn family_fco() -> ForbiddenFamily {
    let g = g_aco();
    let mut members = Vec::new();
    let mut rest: Vec<usize> = (1..6).collect();
    permutations(&mut rest, 0, &mut |tail| {
        let mut seq = vec![0];
        seq.extend_from_slice(tail);
        members.push(g.relabel_subset(&seq));
    });
    let target = aco().canonical_code().expect("six vertices");
    members.retain(|m| crate::code::circular_code(m.adjacency()) != target);
    ForbiddenFamily::new("FCO", OrderKind::Circular, Semantics::Induced, members)
        .expect("static family")
}

fn permutations(xs: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == xs.len() {
        visit(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permutations(xs, k + 1, visit);
        xs.swap(k, i);
    }
}

/// The straight path `St_k`: `k` vertices `v_1 < ... < v_k` with each
/// `v_i v_{i+1}` an edge, matched as a linear subgraph.
pub fn family_st(k: usize) -> Result<ForbiddenFamily> {
    if k == 0 || k > crate::code::CODE_CAP {
        return Err(Error::InvalidArgument(format!(
            "St_k needs 1 <= k <= 11, got {k}"
        )));
    }
    ForbiddenFamily::new(
        &format!("St{k}"),
        OrderKind::Linear,
        Semantics::Subgraph,
        vec![path(k)?],
    )
}
