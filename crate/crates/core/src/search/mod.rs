//! Exhaustive search for orderings that avoid a forbidden family.
//!
//! Vertices are placed one at a time in a fixed order and each new vertex is
//! inserted into every gap of the current arrangement. Insertion never changes
//! the relative order of vertices already placed, so an occurrence found
//! among placed vertices survives every extension and the branch can be cut.
//! Only vertex sets containing the newest vertex need checking. For circular
//! searches the first vertex stays at the start, which removes rotations:
//! each circular ordering is reached by exactly one path.

mod lookahead;
mod sets;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::circular_order::{CircOrderedGraph, CircularOrdering};
use crate::error::{cap, Error, Result};
use crate::families::{avoids, ForbiddenFamily, OrderKind, Semantics, SizeIndex};
use crate::graph::{bit, bits, Graph};
use crate::par;
use crate::patterns::{lin_avoids, LinOrderedGraph};
use lookahead::{consistent, tight_sets, TightSet};

pub(crate) use sets::{connected_sets_with, subsets_with};

/// Largest graph accepted by [`count_free_orderings`].
pub const COUNT_CAP: usize = 8;

/// Frontier size at which parallel mode stops splitting.
const SPLIT_TARGET: usize = 64;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Largest accepted vertex count.
    pub max_n: usize,
    /// Split the search tree across the rayon pool.
    pub parallel: bool,
    /// In parallel mode, return the same witness as the sequential search.
    pub deterministic: bool,
    /// Give up after this many search nodes; the outcome is then marked
    /// non-exhaustive.
    pub node_limit: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_n: 9,
            parallel: false,
            deterministic: true,
            node_limit: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub found: bool,
    /// For circular searches the canonical cyclic sequence (starting at 0);
    /// for linear searches the vertex sequence by rank.
    pub witness: Option<Vec<usize>>,
    pub nodes_explored: u64,
    /// False when the node limit cut the search short.
    pub exhaustive: bool,
}

struct Budget {
    nodes: AtomicU64,
    limit: u64,
    aborted: AtomicBool,
}

impl Budget {
    fn new(limit: Option<u64>) -> Self {
        Budget {
            nodes: AtomicU64::new(0),
            limit: limit.unwrap_or(u64::MAX),
            aborted: AtomicBool::new(false),
        }
    }

    /// Charges one node; false once the limit is reached.
    #[inline]
    fn tick(&self) -> bool {
        let used = self.nodes.fetch_add(1, Ordering::Relaxed);
        if used >= self.limit {
            self.aborted.store(true, Ordering::Relaxed);
            false
        } else {
            !self.aborted.load(Ordering::Relaxed)
        }
    }
}

#[derive(Clone)]
struct State {
    seq: Vec<usize>,
    pos: Vec<usize>,
    placed: u64,
}

impl State {
    fn insert(&mut self, at: usize, v: usize) {
        self.seq.insert(at, v);
        for (i, &w) in self.seq.iter().enumerate().skip(at) {
            self.pos[w] = i;
        }
        self.placed |= bit(v);
    }

    fn remove(&mut self, at: usize) {
        let v = self.seq.remove(at);
        for (i, &w) in self.seq.iter().enumerate().skip(at) {
            self.pos[w] = i;
        }
        self.placed &= !bit(v);
    }
}

struct Engine<'a> {
    g: &'a Graph,
    index: &'a [SizeIndex],
    semantics: Semantics,
    circular: bool,
    order: Vec<usize>,
    tight: Vec<TightSet>,
    /// Indices into `tight` of the sets containing each vertex.
    tight_at: Vec<Vec<usize>>,
}

impl Engine<'_> {
    fn new<'a>(
        g: &'a Graph,
        family: &'a ForbiddenFamily,
        semantics: Semantics,
        circular: bool,
    ) -> Engine<'a> {
        let tight = tight_sets(g, family.index(), semantics, circular);
        let mut tight_at = vec![Vec::new(); g.n()];
        for (i, t) in tight.iter().enumerate() {
            for v in bits(t.mask) {
                tight_at[v].push(i);
            }
        }
        Engine {
            g,
            index: family.index(),
            semantics,
            circular,
            order: insertion_order(g),
            tight,
            tight_at,
        }
    }

    /// Code of the vertex set `s` read in current position order.
    #[inline]
    fn code_of(&self, st: &State, s: u64) -> u64 {
        let mut vs = [0usize; 64];
        let mut m = 0;
        for v in bits(s) {
            vs[m] = v;
            m += 1;
        }
        let vs = &mut vs[..m];
        vs.sort_unstable_by_key(|&v| st.pos[v]);
        let mut c = 0u64;
        for a in 0..m {
            let row = self.g.neighbors_mask(vs[a]);
            for &w in &vs[a + 1..] {
                c = (c << 1) | ((row >> w) & 1);
            }
        }
        c
    }

    /// Whether some occurrence uses the newest vertex `u`, or some tight set
    /// through `u` can no longer be completed.
    fn violated(&self, st: &State, u: usize) -> bool {
        let placed = st.placed;
        if self.tight_at[u]
            .iter()
            .any(|&i| !consistent(&self.tight[i], &st.seq, placed, self.circular))
        {
            return true;
        }
        let count = placed.count_ones() as usize;
        let adj = self.g.adjacency();
        for si in self.index {
            if si.m > count {
                break;
            }
            let mut check = |s: u64| {
                let edges: u32 = bits(s).map(|v| (adj[v] & s).count_ones()).sum::<u32>() / 2;
                let plausible = match self.semantics {
                    Semantics::Induced => si.edge_counts >> edges & 1 == 1,
                    Semantics::Subgraph => edges >= si.min_edges,
                };
                plausible && si.matches(self.code_of(st, s), self.semantics)
            };
            let hit = if si.connected {
                connected_sets_with(adj, placed, u, si.m, &mut check)
            } else {
                subsets_with(placed & !bit(u), si.m - 1, bit(u), &mut check)
            };
            if hit {
                return true;
            }
        }
        false
    }

    fn root(&self) -> State {
        let n = self.g.n();
        let mut st = State {
            seq: Vec::with_capacity(n),
            pos: vec![usize::MAX; n],
            placed: 0,
        };
        if n > 0 {
            st.insert(0, self.order[0]);
        }
        st
    }

    /// Gaps a new vertex may take when `len` vertices are placed.
    fn gaps(&self, len: usize) -> std::ops::RangeInclusive<usize> {
        if self.circular {
            1..=len
        } else {
            0..=len
        }
    }

    fn root_ok(&self, st: &State) -> bool {
        st.seq.is_empty() || !self.violated(st, st.seq[0])
    }

    /// Depth-first search from `st` (with `st.seq.len()` vertices placed).
    /// Calls `leaf` on each complete ordering; `leaf` returns true to stop.
    fn dfs(&self, st: &mut State, budget: &Budget, leaf: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let depth = st.seq.len();
        if depth == self.g.n() {
            return leaf(&st.seq);
        }
        let u = self.order[depth];
        for at in self.gaps(depth) {
            if !budget.tick() {
                return true;
            }
            st.insert(at, u);
            let stop = !self.violated(st, u) && self.dfs(st, budget, leaf);
            st.remove(at);
            if stop {
                return true;
            }
        }
        false
    }

    /// Breadth-first expansion to at least `target` states (or full depth),
    /// preserving depth-first order among the states.
    fn frontier(&self, target: usize, budget: &Budget) -> Vec<State> {
        let root = self.root();
        if !self.root_ok(&root) {
            return Vec::new();
        }
        let mut front = vec![root];
        let n = self.g.n();
        while !front.is_empty() && front.len() < target && front[0].seq.len() < n {
            let mut next = Vec::new();
            for st in &front {
                let depth = st.seq.len();
                let u = self.order[depth];
                for at in self.gaps(depth) {
                    budget.tick();
                    let mut child = st.clone();
                    child.insert(at, u);
                    if !self.violated(&child, u) {
                        next.push(child);
                    }
                }
            }
            front = next;
        }
        front
    }
}

/// Vertex 0 first, then repeatedly the vertex with the most placed
/// neighbours (ties: larger degree, then smaller id).
fn insertion_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut order = vec![0];
    let mut placed = bit(0);
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
            .expect("unplaced vertex");
        order.push(next);
        placed |= bit(next);
    }
    order
}

fn run_search(engine: &Engine, opts: &SearchOptions) -> (Option<Vec<usize>>, u64, bool) {
    let budget = Budget::new(opts.node_limit);
    let witness = if opts.parallel && par::enabled() {
        let front = engine.frontier(SPLIT_TARGET, &budget);
        let solve = |st: &State| {
            let mut st = st.clone();
            let mut found = None;
            engine.dfs(&mut st, &budget, &mut |seq| {
                found = Some(seq.to_vec());
                true
            });
            found
        };
        if opts.deterministic {
            par::find_map_first(&front, solve)
        } else {
            par::find_map_any(&front, solve)
        }
    } else {
        let mut st = engine.root();
        let mut found = None;
        if engine.root_ok(&st) {
            engine.dfs(&mut st, &budget, &mut |seq| {
                found = Some(seq.to_vec());
                true
            });
        }
        found
    };
    let exhaustive = witness.is_some() || !budget.aborted.load(Ordering::Relaxed);
    (witness, budget.nodes.load(Ordering::Relaxed), exhaustive)
}

fn check_family(family: &ForbiddenFamily, kind: OrderKind) -> Result<()> {
    if family.kind() == kind {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "family {} has {:?} members, the search needs {:?}",
            family.name(),
            family.kind(),
            kind
        )))
    }
}

/// Searches for a circular ordering of `g` avoiding `family` (under the
/// family's own semantics). The identity ordering is tried first.
pub fn find_free_circular_ordering(
    g: &Graph,
    family: &ForbiddenFamily,
    opts: &SearchOptions,
) -> Result<SearchOutcome> {
    check_family(family, OrderKind::Circular)?;
    cap("circular ordering search", g.n(), opts.max_n)?;
    let outcome = if !family.occurs_in_positional(g) {
        SearchOutcome {
            found: true,
            witness: Some((0..g.n()).collect()),
            nodes_explored: 1,
            exhaustive: true,
        }
    } else {
        let engine = Engine::new(g, family, family.semantics(), true);
        let (w, nodes, exhaustive) = run_search(&engine, opts);
        let witness = w.map(|seq| {
            CircularOrdering::circular_closure(&seq)
                .expect("search yields permutations")
                .seq()
                .to_vec()
        });
        SearchOutcome {
            found: witness.is_some(),
            witness,
            nodes_explored: nodes,
            exhaustive,
        }
    };
    if let Some(seq) = &outcome.witness {
        let cog = CircOrderedGraph::from_sequence(g.clone(), seq)?;
        if !avoids(&cog, family) {
            return Err(Error::Verification(format!(
                "witness {seq:?} contains a member of {}",
                family.name()
            )));
        }
    }
    Ok(outcome)
}

/// Searches for a linear ordering of `g` avoiding `family` under
/// `semantics`. The identity ordering is tried first.
pub fn find_free_linear_ordering(
    g: &Graph,
    family: &ForbiddenFamily,
    semantics: Semantics,
    opts: &SearchOptions,
) -> Result<SearchOutcome> {
    check_family(family, OrderKind::Linear)?;
    cap("linear ordering search", g.n(), opts.max_n)?;
    let family = family.clone().with_semantics(semantics);
    let outcome = if !family.occurs_in_positional(g) {
        SearchOutcome {
            found: true,
            witness: Some((0..g.n()).collect()),
            nodes_explored: 1,
            exhaustive: true,
        }
    } else {
        let engine = Engine::new(g, &family, semantics, false);
        let (witness, nodes, exhaustive) = run_search(&engine, opts);
        SearchOutcome {
            found: witness.is_some(),
            witness,
            nodes_explored: nodes,
            exhaustive,
        }
    };
    if let Some(seq) = &outcome.witness {
        let lin = LinOrderedGraph::new(g.clone(), seq.clone())?;
        if !lin_avoids(&lin, &family, semantics) {
            return Err(Error::Verification(format!(
                "witness {seq:?} contains a member of {}",
                family.name()
            )));
        }
    }
    Ok(outcome)
}

/// Number of circular orderings of `g` (as cyclic sequences starting at 0)
/// that avoid `family`.
pub fn count_free_orderings(g: &Graph, family: &ForbiddenFamily) -> Result<u64> {
    count_free_orderings_with(g, family, &SearchOptions::default())
}

pub fn count_free_orderings_with(
    g: &Graph,
    family: &ForbiddenFamily,
    opts: &SearchOptions,
) -> Result<u64> {
    check_family(family, OrderKind::Circular)?;
    cap("ordering count", g.n(), COUNT_CAP.min(opts.max_n.max(1)))?;
    let engine = Engine::new(g, family, family.semantics(), true);
    let budget = Budget::new(None);
    let count_from = |st: &State| {
        let mut st = st.clone();
        let mut c = 0u64;
        engine.dfs(&mut st, &budget, &mut |_| {
            c += 1;
            false
        });
        c
    };
    if opts.parallel && par::enabled() {
        let front = engine.frontier(SPLIT_TARGET, &budget);
        Ok(par::map(&front, count_from).into_iter().sum())
    } else {
        let root = engine.root();
        Ok(if engine.root_ok(&root) {
            count_from(&root)
        } else {
            0
        })
    }
}
