use std::collections::HashSet;

use super::CircOrderedGraph;
use crate::code;
use crate::error::{cap, Result};
use crate::graph::{enumerate_graphs, Graph};

/// Largest `n` accepted by [`enumerate_catalog`].
pub const CATALOG_CAP: usize = 6;

/// One representative per isomorphism class of circularly ordered graphs on
/// `n` vertices, in position space, sorted by edge count then canonical code.
/// Each representative is the rotation with the smallest code.
pub fn enumerate_catalog(n: usize) -> Result<Vec<CircOrderedGraph>> {
    cap("catalog", n, CATALOG_CAP)?;
    let mut seen = HashSet::new();
    let mut reps: Vec<(usize, u64, Graph)> = Vec::new();
    for g in enumerate_graphs(n, false)? {
        let c = code::circular_code(g.adjacency());
        if seen.insert(c) {
            let canon = Graph::from_adjacency_unchecked(code::decode(n, c));
            reps.push((canon.edge_count(), c, canon));
        }
    }
    reps.sort_by_key(|&(e, c, _)| (e, c));
    Ok(reps
        .into_iter()
        .map(|(_, _, g)| CircOrderedGraph::from_positional(g))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circular_order::circ_iso;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| enumerate_catalog(n).unwrap().len())
            .collect();
        // Burnside over the rotation group gives these independently.
        assert_eq!(counts, vec![1, 1, 2, 4, 22, 208, 5560]);
        assert!(enumerate_catalog(7).is_err());
    }

    #[test]
    fn members_pairwise_distinct_and_cover_everything() {
        let cat = enumerate_catalog(4).unwrap();
        for (i, a) in cat.iter().enumerate() {
            for b in &cat[i + 1..] {
                assert!(!circ_iso(a, b));
            }
        }
        for g in enumerate_graphs(4, false).unwrap() {
            let x = CircOrderedGraph::from_positional(g);
            assert_eq!(cat.iter().filter(|m| circ_iso(m, &x)).count(), 1);
        }
    }
}
