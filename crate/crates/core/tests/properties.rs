mod common;

use proptest::prelude::*;

use circord::circular_order::io::{parse_ordering, write_ordering};
use circord::circular_order::{circ_iso, CircOrderedGraph};
use circord::constructive::order_tree;
use circord::families::{avoids, by_name, family_forest, BUILTIN_NAMES};
use circord::graph::canonical_form;
use circord::graph::io::{from_graph6, to_graph6};
use circord::patterns::{lin_avoids, linearize, LinOrderedGraph};
use circord::search::{find_free_circular_ordering, SearchOptions};
use circord::Graph;

use common::naive_occurs;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn ordered(max_n: usize) -> impl Strategy<Value = CircOrderedGraph> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(move |s| CircOrderedGraph::from_sequence(g.clone(), &s).unwrap())
    })
}

/// A random labelled tree from a Prüfer sequence.
fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2).prop_map(move |code| {
            let mut degree = vec![1usize; n];
            for &x in &code {
                degree[x] += 1;
            }
            let mut g = Graph::empty(n).unwrap();
            for &x in &code {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                g.add_edge(leaf, x).unwrap();
                degree[leaf] -= 1;
                degree[x] -= 1;
            }
            let ends: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            g.add_edge(ends[0], ends[1]).unwrap();
            g
        })
    })
}

fn family_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(BUILTIN_NAMES.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn avoids_matches_naive(c in ordered(7), name in family_name()) {
        let f = by_name(name).unwrap();
        let naive = !naive_occurs(c.graph(), c.seq(), f.members(), f.semantics(), true);
        prop_assert_eq!(avoids(&c, &f), naive);
    }

    #[test]
    fn rotation_and_reflection_keep_class(c in ordered(7), r in 0usize..7, name in family_name()) {
        let n = c.n();
        let mut s = c.seq().to_vec();
        s.rotate_left(r % n);
        let rotated = CircOrderedGraph::from_sequence(c.graph().clone(), &s).unwrap();
        prop_assert!(circ_iso(&c, &rotated));
        let f = by_name(name).unwrap();
        prop_assert_eq!(avoids(&c, &f), avoids(&rotated, &f));
        prop_assert_eq!(c.canonical_code().unwrap(), rotated.canonical_code().unwrap());
        prop_assert!(circ_iso(&c.dual().dual(), &c));
    }

    #[test]
    fn ordering_text_round_trip(c in ordered(9)) {
        let back = parse_ordering(&write_ordering(&c)).unwrap();
        prop_assert_eq!(back.graph(), c.graph());
        prop_assert!(circ_iso(&back, &c));
    }

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(8), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn tree_orderings_avoid_forest_family(t in tree(14), root in 0usize..14) {
        let root = root % t.n();
        let c = order_tree(&t, root).unwrap();
        prop_assert!(avoids(&c, &family_forest()));
        prop_assert!(!c.has_crossing_edges());
    }

    #[test]
    fn witnesses_avoid_family(g in graph(7), name in family_name()) {
        let f = by_name(name).unwrap();
        let out = find_free_circular_ordering(&g, &f, &SearchOptions::default()).unwrap();
        prop_assert!(out.exhaustive);
        if let Some(w) = out.witness {
            prop_assert_eq!(w[0], 0);
            let c = CircOrderedGraph::from_sequence(g.clone(), &w).unwrap();
            prop_assert!(avoids(&c, &f));
            // Every cut of a free circular ordering is free for the linearization.
            let lin = linearize(&f).unwrap();
            for r in 0..g.n() {
                let mut s = w.clone();
                s.rotate_left(r);
                let l = LinOrderedGraph::new(g.clone(), s).unwrap();
                prop_assert!(lin_avoids(&l, &lin, f.semantics()));
            }
        }
    }

    #[test]
    fn parallel_search_matches_sequential(g in graph(8), name in family_name()) {
        let f = by_name(name).unwrap();
        let seq = find_free_circular_ordering(&g, &f, &SearchOptions::default()).unwrap();
        let par = SearchOptions { parallel: true, ..SearchOptions::default() };
        let par = find_free_circular_ordering(&g, &f, &par).unwrap();
        prop_assert_eq!(seq.found, par.found);
        prop_assert_eq!(seq.witness, par.witness);
    }
}
