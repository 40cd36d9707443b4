use super::{bit, bits, Graph};

/// Backtracking state for adjacency-preserving bijections `g -> h`.
struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
    used: u64,
}

impl Matcher<'_> {
    /// Visits every isomorphism; `visit` returns `false` to stop early.
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let u = self.order[depth];
        let du = self.g.degree(u);
        for x in 0..self.h.n() {
            if self.used & bit(x) != 0 || self.h.degree(x) != du {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&w| self.g.has_edge(u, w) == self.h.has_edge(x, self.map[w]));
            if !consistent {
                continue;
            }
            self.map[u] = x;
            self.used |= bit(x);
            let go_on = self.run(depth + 1, visit);
            self.used &= !bit(x);
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Connectivity-first vertex order so adjacency constraints bite early.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| {
                (
                    (g.neighbors_mask(v) & placed).count_ones(),
                    g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex exists");
        placed |= bit(next);
        order.push(next);
    }
    order
}

fn prefilter(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if !prefilter(g, h) {
        return None;
    }
    let mut m = Matcher {
        g,
        h,
        order: search_order(g),
        map: vec![usize::MAX; g.n()],
        used: 0,
    };
    let mut found = None;
    m.run(0, &mut |map| {
        found = Some(map.to_vec());
        false
    });
    found
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Number of graph automorphisms (brute-force backtracking, desk scale).
pub fn automorphism_count(g: &Graph) -> u64 {
    let mut m = Matcher {
        g,
        h: g,
        order: search_order(g),
        map: vec![usize::MAX; g.n()],
        used: 0,
    };
    let mut count = 0u64;
    m.run(0, &mut |map| {
        debug_assert!(
            (0..g.n()).all(|u| bits(g.neighbors_mask(u)).all(|v| g.has_edge(map[u], map[v])))
        );
        count += 1;
        true
    });
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn c5_is_self_complementary() {
        let c5 = cycle(5).unwrap();
        let map = find_isomorphism(&c5, &c5.complement()).unwrap();
        for (u, v) in c5.edges() {
            assert!(c5.complement().has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn triangle_is_not_a_path() {
        assert!(!is_isomorphic(&complete(3).unwrap(), &path(3).unwrap()));
    }

    #[test]
    fn automorphisms_of_small_graphs() {
        assert_eq!(automorphism_count(&cycle(5).unwrap()), 10);
        assert_eq!(automorphism_count(&complete(4).unwrap()), 24);
        assert_eq!(automorphism_count(&path(4).unwrap()), 2);
    }
}
