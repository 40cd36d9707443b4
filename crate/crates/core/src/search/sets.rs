//! Vertex-set enumerators used by the incremental occurrence check.

use crate::graph::bit;

/// Calls `visit` on every connected vertex set of size `m` inside `allowed`
/// that contains `root`, each exactly once. Stops early when `visit` returns
/// `true`, and reports whether it did.
pub(crate) fn connected_sets_with(
    adj: &[u64],
    allowed: u64,
    root: usize,
    m: usize,
    visit: &mut impl FnMut(u64) -> bool,
) -> bool {
    if m == 0 {
        return false;
    }
    let start = bit(root);
    extend(
        adj,
        allowed,
        start,
        1,
        adj[root] & allowed & !start,
        start,
        m,
        visit,
    )
}

#[allow(clippy::too_many_arguments)]
fn extend(
    adj: &[u64],
    allowed: u64,
    sub: u64,
    size: usize,
    mut ext: u64,
    mut forb: u64,
    m: usize,
    visit: &mut impl FnMut(u64) -> bool,
) -> bool {
    if size == m {
        return visit(sub);
    }
    while ext != 0 {
        let w = ext.trailing_zeros() as usize;
        ext &= ext - 1;
        forb |= bit(w);
        let next = ext | (adj[w] & allowed & !forb & !sub);
        if extend(adj, allowed, sub | bit(w), size + 1, next, forb, m, visit) {
            return true;
        }
    }
    false
}

/// Calls `visit` on `base | T` for every `k`-subset `T` of `pool`.
pub(crate) fn subsets_with(
    pool: u64,
    k: usize,
    base: u64,
    visit: &mut impl FnMut(u64) -> bool,
) -> bool {
    if k == 0 {
        return visit(base);
    }
    if (pool.count_ones() as usize) < k {
        return false;
    }
    let mut rest = pool;
    while rest.count_ones() as usize >= k {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if subsets_with(rest, k - 1, base | bit(w), visit) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bits, Graph};
    use std::collections::HashSet;

    fn brute_connected(g: &Graph, allowed: u64, root: usize, m: usize) -> HashSet<u64> {
        let mut out = HashSet::new();
        subsets_with(allowed & !bit(root), m - 1, bit(root), &mut |s| {
            if g.is_connected_mask(s) {
                out.insert(s);
            }
            false
        });
        out
    }

    #[test]
    fn connected_sets_match_brute_force() {
        let g = Graph::from_edges(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (2, 4),
                (4, 5),
                (5, 6),
                (1, 6),
            ],
        )
        .unwrap();
        for allowed in [0b1111111u64, 0b1011111, 0b0110111] {
            for root in bits(allowed) {
                for m in 1..=6 {
                    let mut got = Vec::new();
                    connected_sets_with(g.adjacency(), allowed, root, m, &mut |s| {
                        got.push(s);
                        false
                    });
                    let set: HashSet<u64> = got.iter().copied().collect();
                    assert_eq!(set.len(), got.len(), "duplicates");
                    assert_eq!(set, brute_connected(&g, allowed, root, m));
                }
            }
        }
    }

    #[test]
    fn subset_counts() {
        let mut c = 0;
        subsets_with(0b111110, 2, 1, &mut |s| {
            assert_eq!(s & 1, 1);
            c += 1;
            false
        });
        assert_eq!(c, 10);
    }
}
