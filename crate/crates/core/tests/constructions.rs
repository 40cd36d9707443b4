mod common;

use circord::chromatic::{chi_c_min, find_homomorphism};
use circord::circular_order::CircOrderedGraph;
use circord::constructive::{
    canonical_kpq_ordering, lift_ordering, order_caterpillar, order_forest, order_outerplanar,
    order_tree, zigzag,
};
use circord::families::{avoids, family_cf, family_cr, family_forest, family_h, family_lf};
use circord::graph::{enumerate_trees, path};
use circord::reduction::{build_reduction, find_gaco_copies, CyclicOrderingInstance};

use common::*;

/// Every graph on at most 7 vertices, then every tree on 8 to 10.
fn graphs_and_trees() -> Vec<circord::Graph> {
    let mut out = graphs_up_to(7);
    for n in 8..=10 {
        out.extend(enumerate_trees(n).unwrap());
    }
    out
}

#[test]
fn forest_orderings() {
    let f = family_forest();
    for g in graphs_and_trees() {
        match order_forest(&g) {
            Ok(c) => {
                assert!(forest_oracle(&g));
                assert!(!naive_occurs(&g, c.seq(), f.members(), f.semantics(), true));
            }
            Err(_) => assert!(!forest_oracle(&g)),
        }
    }
}

#[test]
fn caterpillar_orderings() {
    let cf = family_cf();
    for g in graphs_and_trees() {
        match order_caterpillar(&g) {
            Ok(c) => {
                assert!(caterpillar_oracle(&g), "{g:?}");
                assert!(!naive_occurs(
                    &g,
                    c.seq(),
                    cf.members(),
                    cf.semantics(),
                    true
                ));
            }
            Err(_) => assert!(!caterpillar_oracle(&g), "{g:?}"),
        }
    }
}

#[test]
fn zigzags_avoid_linear_forest_patterns() {
    let lf = family_lf();
    for k in 1..=11 {
        let z = zigzag(k).unwrap();
        assert_eq!(z.graph(), &path(k).unwrap());
        assert!(!naive_occurs(
            z.graph(),
            z.seq(),
            lf.members(),
            lf.semantics(),
            true
        ));
    }
}

#[test]
fn outerplanar_constructions_avoid_crossings() {
    let cr = family_cr();
    for g in graphs_up_to(7) {
        if let Ok(c) = order_outerplanar(&g) {
            assert!(!c.has_crossing_edges());
            assert!(!naive_occurs(
                &g,
                c.seq(),
                cr.members(),
                cr.semantics(),
                true
            ));
        }
    }
}

/// Lifting the natural ordering of `K_{p/q}` along a homomorphism from `g`,
/// with `p/q` the circular chromatic number, avoids `H_{k+1}` whenever
/// `p/q < k`.
#[test]
fn lifted_orderings_avoid_h() {
    for g in graphs_up_to(6) {
        let r = chi_c_min(&g).unwrap();
        let (p, q) = (r.numer() as usize, r.denom() as usize);
        let target = canonical_kpq_ordering(p, q).unwrap();
        let hom = find_homomorphism(&g, target.graph()).unwrap().unwrap();
        let lifted = lift_ordering(&g, &hom, &target).unwrap();
        for k in 3..=5 {
            if p < k * q {
                assert!(avoids(&lifted, &family_h(k + 1).unwrap()), "{g:?}, k = {k}");
            }
        }
    }
}

#[test]
fn every_gadget_is_found_exactly_once() {
    for na in 3..=6 {
        let triples: Vec<[usize; 3]> = (0..na - 2).map(|i| [i, i + 1, i + 2]).collect();
        let r = triples.len();
        let inst = CyclicOrderingInstance::numbered(na, triples).unwrap();
        let red = build_reduction(&inst).unwrap();
        let copies = find_gaco_copies(&red.graph);
        assert_eq!(copies.len(), r);
        for roles in red.role_map() {
            let mut want = roles.to_vec();
            want.sort_unstable();
            assert!(copies.iter().any(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c == want
            }));
        }
    }
}

#[test]
fn single_vertex_and_positional_orderings() {
    let one = CircOrderedGraph::from_positional(path(1).unwrap());
    assert!(avoids(&one, &family_forest()));
    assert_eq!(order_tree(&path(1).unwrap(), 0).unwrap().seq(), &[0]);
}
