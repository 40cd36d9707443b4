mod common;

use std::collections::BTreeSet;

use itertools::Itertools;

use circord::chromatic::{chi_c_min, find_homomorphism, hom_exists};
use circord::circular_order::{circ_iso, contains_induced, enumerate_catalog, CircOrderedGraph};
use circord::constructive::{lift_ordering, order_tree, RootedTreePlan};
use circord::families::{
    avoids, by_name, family_h, family_ph, family_st, ph_generators, ForbiddenFamily, OrderKind,
    Semantics,
};
use circord::graph::{enumerate_graphs, enumerate_trees, is_isomorphic, rational_complete};
use circord::par::with_threads;
use circord::patterns::{lin_avoids, linearize, LinOrderedGraph};
use circord::reduction::{build_reduction, find_gaco_copies, CyclicOrderingInstance};
use circord::search::{find_free_circular_ordering, SearchOptions};
use circord::Graph;

use common::*;

fn all_sequences(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).permutations(n)
}

#[test]
fn rational_complete_homs_follow_the_ratio() {
    let fracs: Vec<(usize, usize)> = (2..=8)
        .flat_map(|p| (1..=p / 2).map(move |q| (p, q)))
        .filter(|&(p, q)| gcd(p as u64, q as u64) == 1)
        .collect();
    for &(p, q) in &fracs {
        let a = rational_complete(p, q).unwrap();
        for &(r, s) in &fracs {
            let b = rational_complete(r, s).unwrap();
            assert_eq!(
                hom_exists(&a, &b).unwrap(),
                p * s <= r * q,
                "K_{p}/{q} -> K_{r}/{s}"
            );
        }
    }
}

#[test]
fn iso_classes_are_pairwise_distinct() {
    for n in 1..=5 {
        let classes = enumerate_graphs(n, true).unwrap();
        for (a, b) in classes.iter().tuple_combinations() {
            assert!(!is_isomorphic(a, b));
        }
        for g in &classes {
            let reversed: Vec<usize> = (0..n).rev().collect();
            assert!(is_isomorphic(g, &g.permute(&reversed).unwrap()));
        }
    }
}

/// Restricting a linear ordering and then closing it gives the same
/// circularly ordered graph as closing and then restricting.
#[test]
fn closure_commutes_with_restriction() {
    for g in graphs_up_to(5) {
        let n = g.n();
        for seq in all_sequences(n) {
            let lin = LinOrderedGraph::new(g.clone(), seq.clone()).unwrap();
            let closed = lin.circular_closure();
            for mask in 1u32..(1 << n) {
                let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let sub_graph = g.induced_subgraph(&subset).unwrap();
                let sub_seq: Vec<usize> = seq
                    .iter()
                    .filter_map(|v| subset.iter().position(|s| s == v))
                    .collect();
                let a = LinOrderedGraph::new(sub_graph, sub_seq)
                    .unwrap()
                    .circular_closure();
                let b = closed.restrict(&subset).unwrap();
                assert_eq!(a, b);
                assert!(contains_induced(&closed, &a));
            }
        }
    }
}

#[test]
fn induced_containment_is_transitive() {
    let small: Vec<CircOrderedGraph> = (2..=4)
        .flat_map(|n| enumerate_catalog(n).unwrap())
        .collect();
    let hosts = enumerate_catalog(5).unwrap();
    for host in hosts.iter().step_by(7) {
        for p in small.iter().filter(|p| p.n() >= 3) {
            if !contains_induced(host, p) {
                continue;
            }
            for q in small.iter().filter(|q| q.n() < p.n()) {
                if contains_induced(p, q) {
                    assert!(contains_induced(host, q));
                }
            }
        }
    }
}

fn code_set(f: &ForbiddenFamily) -> BTreeSet<Vec<u64>> {
    f.members().iter().map(|g| g.adjacency().to_vec()).collect()
}

#[test]
fn closing_a_linearization_gives_the_family_back() {
    for name in ["forest", "lf", "cf", "ca", "cr", "fco", "h3", "h4", "h5"] {
        let f = by_name(name).unwrap();
        let closed: Vec<CircOrderedGraph> = linearize(&f)
            .unwrap()
            .linear_members()
            .iter()
            .map(LinOrderedGraph::circular_closure)
            .collect();
        let closed = ForbiddenFamily::from_circular("closed", f.semantics(), &closed).unwrap();
        assert_eq!(code_set(&closed), code_set(&f), "{name}");
    }
}

#[test]
fn members_are_distinct_and_h_is_an_antichain() {
    for name in ["forest", "lf", "cf", "ca", "cr", "fco", "h3", "h4", "h5"] {
        let members = by_name(name).unwrap().circular_members();
        for (a, b) in members.iter().tuple_combinations() {
            assert!(!circ_iso(a, b), "{name}");
        }
    }
    for k in 3..=5 {
        let members = family_h(k).unwrap().circular_members();
        for (a, b) in members.iter().tuple_combinations() {
            let (small, big) = if a.n() <= b.n() { (a, b) } else { (b, a) };
            assert!(!contains_induced(big, small), "H{k}");
        }
    }
}

/// Every linear ordering hitting a `PH_4` generator closes to a circular
/// ordering that hits `H_4`.
#[test]
fn ph_violations_close_to_h_violations() {
    let ph = family_ph(4).unwrap();
    let h = family_h(4).unwrap();
    for g in graphs_up_to(6) {
        for seq in all_sequences(g.n()) {
            let lin = LinOrderedGraph::new(g.clone(), seq).unwrap();
            if !lin_avoids(&lin, &ph, Semantics::Subgraph) {
                assert!(!avoids(&lin.circular_closure(), &h), "{lin:?}");
            }
        }
    }
}

#[test]
fn pruned_search_matches_generate_and_test() {
    let families: Vec<ForbiddenFamily> = ["ca", "cr", "lf", "cf", "forest", "h4"]
        .iter()
        .map(|n| by_name(n).unwrap())
        .collect();
    for g in graphs_up_to(6) {
        let sequences = circular_sequences(g.n());
        for f in &families {
            let naive = sequences
                .iter()
                .any(|s| !naive_occurs(&g, s, f.members(), f.semantics(), true));
            let out = find_free_circular_ordering(&g, f, &SearchOptions::default()).unwrap();
            assert_eq!(out.found, naive, "{} on {g:?}", f.name());
        }
    }
}

#[test]
fn deterministic_witnesses_ignore_thread_count() {
    let f = by_name("ca").unwrap();
    let graphs = graphs_up_to(6);
    let sequential: Vec<_> = graphs
        .iter()
        .map(|g| find_free_circular_ordering(g, &f, &SearchOptions::default()).unwrap())
        .collect();
    for threads in [1, 2, 4] {
        let opts = SearchOptions {
            parallel: true,
            deterministic: true,
            ..SearchOptions::default()
        };
        let got: Vec<_> = with_threads(threads, || {
            graphs
                .iter()
                .map(|g| find_free_circular_ordering(g, &f, &opts).unwrap())
                .collect()
        });
        for (a, b) in sequential.iter().zip(&got) {
            assert_eq!(a.found, b.found);
            assert_eq!(a.witness, b.witness);
        }
    }
}

/// After placing the first `m` vertices of the plan, the arrangement is the
/// one the algorithm produces on the subtree they span.
#[test]
fn tree_orderings_extend_prefix_orderings() {
    for n in 2..=8 {
        for t in enumerate_trees(n).unwrap() {
            for root in 0..n {
                let plan = RootedTreePlan::new(&t, root).unwrap();
                let full = order_tree(&t, root).unwrap();
                for m in 1..=n {
                    let mut kept = plan.order[..m].to_vec();
                    kept.sort_unstable();
                    let sub_root = kept.iter().position(|&v| v == root).unwrap();
                    let sub = t.induced_subgraph(&kept).unwrap();
                    assert_eq!(
                        order_tree(&sub, sub_root).unwrap(),
                        full.restrict(&kept).unwrap(),
                        "{t:?} root {root}, first {m}"
                    );
                }
            }
        }
    }
}

/// Pulling an `H_4`-free ordering of `g` back along `h -> g` gives an
/// `H_4`-free ordering of `h`.
#[test]
fn free_orderings_lift_along_homomorphisms() {
    let h4 = family_h(4).unwrap();
    let graphs = graphs_up_to(5);
    for g in &graphs {
        let Some(w) = find_free_circular_ordering(g, &h4, &SearchOptions::default())
            .unwrap()
            .witness
        else {
            continue;
        };
        let target = CircOrderedGraph::from_sequence(g.clone(), &w).unwrap();
        for h in graphs.iter().step_by(3) {
            if let Some(hom) = find_homomorphism(h, g).unwrap() {
                let lifted = lift_ordering(h, &hom, &target).unwrap();
                assert!(avoids(&lifted, &h4), "{h:?} -> {g:?}");
            }
        }
    }
}

/// With `k` the chromatic number, `chi_c = k` exactly when every linear
/// ordering free of the straight path on `k + 1` vertices hits one of the
/// other three generators.
#[test]
fn chromatic_equals_circular_chromatic_characterization() {
    for g in graphs_up_to(6) {
        let k = chromatic_oracle(&g);
        if k < 3 {
            continue;
        }
        let st = family_st(k + 1).unwrap();
        let others = ForbiddenFamily::new(
            "rest",
            OrderKind::Linear,
            Semantics::Subgraph,
            ph_generators(k + 1).unwrap()[1..].to_vec(),
        )
        .unwrap();
        let forced = all_sequences(g.n()).all(|seq| {
            let lin = LinOrderedGraph::new(g.clone(), seq).unwrap();
            !lin_avoids(&lin, &st, Semantics::Subgraph)
                || !lin_avoids(&lin, &others, Semantics::Subgraph)
        });
        let tight = chi_c_min(&g).unwrap().denom() == 1;
        assert_eq!(tight, forced, "{g:?}");
    }
}

#[test]
fn gadget_copies_are_triple_supports() {
    for na in 3..=5 {
        let triples: Vec<[usize; 3]> = (0..na)
            .permutations(3)
            .map(|t| [t[0], t[1], t[2]])
            .collect();
        for r in 1..=2 {
            for pick in triples.iter().combinations(r) {
                let inst =
                    CyclicOrderingInstance::numbered(na, pick.into_iter().copied().collect())
                        .unwrap();
                let red = build_reduction(&inst).unwrap();
                let mut found: Vec<Vec<usize>> = find_gaco_copies(&red.graph)
                    .into_iter()
                    .map(|mut c| {
                        c.sort_unstable();
                        c
                    })
                    .collect();
                found.sort();
                let mut want: Vec<Vec<usize>> = inst
                    .triples()
                    .iter()
                    .zip(&red.gadget_ids)
                    .map(|(t, g)| {
                        let mut s: Vec<usize> = t.iter().chain(g).copied().collect();
                        s.sort_unstable();
                        s
                    })
                    .collect();
                want.sort();
                assert_eq!(found, want, "{inst:?}");
            }
        }
    }
}

#[test]
fn edgeless_hosts_are_free_of_everything_with_edges() {
    let g = Graph::empty(6).unwrap();
    for name in ["lf", "ca", "cr", "h4"] {
        let f = by_name(name).unwrap();
        let out = find_free_circular_ordering(&g, &f, &SearchOptions::default()).unwrap();
        assert_eq!(out.witness, Some((0..6).collect()));
    }
}
