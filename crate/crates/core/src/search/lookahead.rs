//! Host vertex sets on which only a few orderings avoid the family. Once
//! some of a set's vertices are placed their relative order is final, so a
//! branch can be cut as soon as it disagrees with every allowed ordering.

use crate::code::code_at;
use crate::families::{Semantics, SizeIndex};
use crate::graph::{bits, Graph};

use super::subsets_with;

/// Largest number of orderings enumerated per candidate set.
const MAX_ORDERINGS: usize = 120;

/// Sets are kept when at most this fraction (1 / `KEEP_RATIO`) of their
/// orderings are allowed.
const KEEP_RATIO: usize = 4;

pub(super) struct TightSet {
    pub mask: u64,
    /// Allowed orderings as vertex sequences. Circular ones start at the
    /// smallest vertex of the set.
    pub allowed: Vec<Vec<usize>>,
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn orderings(vs: &[usize], circular: bool, visit: &mut impl FnMut(&[usize])) {
    fn rec(seq: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
        if k == seq.len() {
            visit(seq);
            return;
        }
        for i in k..seq.len() {
            seq.swap(k, i);
            rec(seq, k + 1, visit);
            seq.swap(k, i);
        }
    }
    let mut seq = vs.to_vec();
    rec(&mut seq, usize::from(circular), visit);
}

pub(super) fn tight_sets(
    g: &Graph,
    index: &[SizeIndex],
    semantics: Semantics,
    circular: bool,
) -> Vec<TightSet> {
    let adj = g.adjacency();
    let mut out = Vec::new();
    for si in index {
        let total = if circular {
            factorial(si.m.saturating_sub(1))
        } else {
            factorial(si.m)
        };
        if si.m < 3 || si.m > g.n() || total > MAX_ORDERINGS {
            continue;
        }
        let all = if g.n() == 64 {
            u64::MAX
        } else {
            (1u64 << g.n()) - 1
        };
        subsets_with(all, si.m, 0, &mut |s| {
            let edges: u32 = bits(s).map(|v| (adj[v] & s).count_ones()).sum::<u32>() / 2;
            let plausible = match semantics {
                Semantics::Induced => {
                    si.edge_counts >> edges & 1 == 1 && (!si.connected || g.is_connected_mask(s))
                }
                Semantics::Subgraph => edges >= si.min_edges,
            };
            if !plausible {
                return false;
            }
            let vs: Vec<usize> = bits(s).collect();
            let mut allowed = Vec::new();
            let mut forbidden = 0;
            orderings(&vs, circular, &mut |seq| {
                if si.matches(code_at(adj, seq), semantics) {
                    forbidden += 1;
                } else {
                    allowed.push(seq.to_vec());
                }
            });
            if forbidden > 0 && allowed.len() * KEEP_RATIO <= total {
                out.push(TightSet { mask: s, allowed });
            }
            false
        });
    }
    out
}

/// Whether the placed vertices of `t`, read in `seq` order, agree with some
/// allowed ordering.
pub(super) fn consistent(t: &TightSet, seq: &[usize], placed: u64, circular: bool) -> bool {
    let part = t.mask & placed;
    let need = if circular { 3 } else { 2 };
    if t.allowed.is_empty() {
        return false;
    }
    if (part.count_ones() as usize) < need {
        return true;
    }
    let mut cur = [0usize; 8];
    let mut k = 0;
    for &v in seq {
        if part >> v & 1 == 1 {
            cur[k] = v;
            k += 1;
        }
    }
    let cur = &cur[..k];
    t.allowed.iter().any(|a| {
        let mut restricted = a.iter().copied().filter(|&v| part >> v & 1 == 1);
        if circular {
            let r: Vec<usize> = restricted.collect();
            let off = r
                .iter()
                .position(|&v| v == cur[0])
                .expect("same vertex set");
            (0..k).all(|i| r[(off + i) % k] == cur[i])
        } else {
            cur.iter().all(|&v| restricted.next() == Some(v))
        }
    })
}
