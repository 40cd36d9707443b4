//! Brute-force oracles shared by the integration tests. None of them calls
//! into the library beyond `Graph` accessors and graph enumeration.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use itertools::Itertools;

use circord::families::Semantics;
use circord::graph::{enumerate_graphs, g_aco};
use circord::Graph;

pub fn graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n)
        .flat_map(|k| enumerate_graphs(k, true).unwrap())
        .collect()
}

/// Every cyclic sequence of `0..n` starting at 0.
pub fn circular_sequences(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..n)
        .permutations(n - 1)
        .map(|rest| std::iter::once(0).chain(rest).collect())
        .collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    if parent[x] != x {
        let r = find(parent, parent[x]);
        parent[x] = r;
    }
    parent[x]
}

/// No edge closes a cycle (union-find).
pub fn forest_oracle(g: &Graph) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

pub fn linear_forest_oracle(g: &Graph) -> bool {
    forest_oracle(g) && (0..g.n()).all(|v| g.degree(v) <= 2)
}

/// A forest is a caterpillar forest iff it has no subdivided claw (each
/// edge of `K_{1,3}` subdivided once) as a subgraph.
pub fn caterpillar_oracle(g: &Graph) -> bool {
    if !forest_oracle(g) {
        return false;
    }
    for c in 0..g.n() {
        let arms: Vec<usize> = g
            .neighbors(c)
            .filter(|&a| g.neighbors(a).any(|b| b != c))
            .collect();
        // In a forest the arms' far ends are automatically distinct.
        if arms.len() >= 3 {
            return false;
        }
    }
    true
}

/// Least `k` admitting a proper colouring, trying every assignment.
pub fn chromatic_oracle(g: &Graph) -> usize {
    let n = g.n();
    let edges = g.edges();
    for k in 1..=n.max(1) {
        let proper = (0..n)
            .map(|_| 0..k)
            .multi_cartesian_product()
            .any(|col| edges.iter().all(|&(u, v)| col[u] != col[v]));
        if n == 0 || proper {
            return k;
        }
    }
    n
}

/// The circular-arc arrangement condition read off a cyclic sequence.
pub fn tucker_oracle(g: &Graph, seq: &[usize]) -> bool {
    let n = seq.len();
    let closed = |a: usize, b: usize| a == b || g.has_edge(a, b);
    for i in 0..n {
        for j in i + 1..n {
            if !g.has_edge(seq[i], seq[j]) {
                continue;
            }
            let forward = (i + 1..j).all(|t| closed(seq[i], seq[t]));
            let backward = (j + 1..n + i).all(|t| closed(seq[j], seq[t % n]));
            if !forward && !backward {
                return false;
            }
        }
    }
    true
}

/// Whether some member (vertex `i` at position `i`) occurs in `g` ordered by
/// `seq`. Circular members may be rotated.
pub fn naive_occurs(
    g: &Graph,
    seq: &[usize],
    members: &[Graph],
    semantics: Semantics,
    circular: bool,
) -> bool {
    members.iter().any(|m| {
        let k = m.n();
        if k > seq.len() {
            return false;
        }
        (0..seq.len()).combinations(k).any(|ps| {
            let verts: Vec<usize> = ps.iter().map(|&p| seq[p]).collect();
            let rotations = if circular { k } else { 1 };
            (0..rotations).any(|r| {
                let at = |i: usize| verts[(i + r) % k];
                (0..k).all(|i| {
                    (i + 1..k).all(|j| {
                        let want = m.has_edge(i, j);
                        let have = g.has_edge(at(i), at(j));
                        match semantics {
                            Semantics::Induced => want == have,
                            Semantics::Subgraph => !want || have,
                        }
                    })
                })
            })
        })
    })
}

/// Classes of circular orderings of the gadget graph, counted by reading
/// each of the 120 cyclic sequences as an adjacency string under every
/// rotation and keeping the least.
pub fn gadget_orbits() -> usize {
    let g = g_aco();
    let mut classes = BTreeSet::new();
    for s in circular_sequences(6) {
        let key = (0..6)
            .map(|r| {
                let at = |i: usize| s[(i + r) % 6];
                (0..6)
                    .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
                    .map(|(i, j)| g.has_edge(at(i), at(j)))
                    .collect::<Vec<bool>>()
            })
            .min()
            .expect("six rotations");
        classes.insert(key);
    }
    classes.len()
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(name)
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites it.
pub fn check_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return Ok(());
    }
    let expected =
        std::fs::read_to_string(&path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    let expected: String = expected
        .lines()
        .filter(|l| !l.starts_with("##"))
        .map(|l| format!("{l}\n"))
        .collect();
    if expected == actual {
        Ok(())
    } else {
        Err(format!(
            "{} differs from the computed value:\n{actual}",
            path.display()
        ))
    }
}
