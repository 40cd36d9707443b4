//! Forbidden families and the named ordered graphs they are built from.

mod hom_images;
mod named;

use std::collections::{BTreeMap, HashSet};

use crate::circular_order::{contains_induced, subsets, CircOrderedGraph};
use crate::code::{self, CODE_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{lin_avoids, LinOrderedGraph};

pub use hom_images::{family_h, family_ph, is_sp_image, ph_generators, H_CAP};
pub use named::{
    aco, c5_star, claw_ordering, cr, crossed_c4, crossed_p4, family_ca, family_cf, family_cr,
    family_fco, family_forest, family_lf, family_st, lca_patterns, pattern_ca, sc, sp, z, z_star,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Circular,
    Linear,
}

/// How members are matched against a host. Induced: the chosen vertices
/// carry exactly the member's edges. Subgraph: they carry at least those.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Semantics {
    Induced,
    Subgraph,
}

/// Lookup tables for one member size.
#[derive(Clone, Debug)]
pub(crate) struct SizeIndex {
    pub m: usize,
    /// Induced semantics: every host code that is an occurrence.
    pub codes: HashSet<u64>,
    /// Subgraph semantics: an occurrence has all the bits of one mask.
    pub masks: Vec<u64>,
    /// Bit `e` set when some member of this size has `e` edges.
    pub edge_counts: u64,
    pub min_edges: u32,
    /// Every member of this size is connected, so only connected vertex
    /// sets can be occurrences.
    pub connected: bool,
}

impl SizeIndex {
    #[inline]
    pub fn matches(&self, c: u64, semantics: Semantics) -> bool {
        match semantics {
            Semantics::Induced => {
                self.edge_counts >> c.count_ones() & 1 == 1 && self.codes.contains(&c)
            }
            Semantics::Subgraph => {
                c.count_ones() >= self.min_edges && self.masks.iter().any(|&m| m & !c == 0)
            }
        }
    }
}

/// A named, deduplicated set of ordered graphs. Members are stored in
/// position space (vertex `i` at position `i`).
#[derive(Clone, Debug)]
pub struct ForbiddenFamily {
    name: String,
    kind: OrderKind,
    semantics: Semantics,
    members: Vec<Graph>,
    index: Vec<SizeIndex>,
}

impl ForbiddenFamily {
    pub fn new(
        name: &str,
        kind: OrderKind,
        semantics: Semantics,
        members: Vec<Graph>,
    ) -> Result<Self> {
        let mut by_code = BTreeMap::new();
        for g in members {
            if g.n() == 0 {
                return Err(Error::InvalidArgument(format!(
                    "family {name}: members need at least one vertex"
                )));
            }
            if g.n() > CODE_CAP {
                return Err(Error::CapExceeded {
                    what: "family member",
                    n: g.n(),
                    cap: CODE_CAP,
                });
            }
            let key = match kind {
                OrderKind::Circular => code::circular_code(g.adjacency()),
                OrderKind::Linear => code::code(g.adjacency()),
            };
            let canon = Graph::from_adjacency_unchecked(code::decode(g.n(), key));
            by_code.insert((g.n(), g.edge_count(), key), canon);
        }
        let members: Vec<Graph> = by_code.into_values().collect();
        let index = build_index(&members, kind);
        Ok(ForbiddenFamily {
            name: name.to_string(),
            kind,
            semantics,
            members,
            index,
        })
    }

    pub fn from_circular(
        name: &str,
        semantics: Semantics,
        members: &[CircOrderedGraph],
    ) -> Result<Self> {
        let gs = members.iter().map(CircOrderedGraph::positional).collect();
        Self::new(name, OrderKind::Circular, semantics, gs)
    }

    pub fn from_linear(
        name: &str,
        semantics: Semantics,
        members: &[LinOrderedGraph],
    ) -> Result<Self> {
        let gs = members.iter().map(LinOrderedGraph::positional).collect();
        Self::new(name, OrderKind::Linear, semantics, gs)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    /// Members in position space, sorted by size, edge count and code.
    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn circular_members(&self) -> Vec<CircOrderedGraph> {
        self.members
            .iter()
            .cloned()
            .map(CircOrderedGraph::from_positional)
            .collect()
    }

    pub fn linear_members(&self) -> Vec<LinOrderedGraph> {
        self.members
            .iter()
            .cloned()
            .map(LinOrderedGraph::from_positional)
            .collect()
    }

    /// The same members under different semantics.
    pub fn with_semantics(mut self, semantics: Semantics) -> Self {
        self.semantics = semantics;
        self
    }

    pub(crate) fn index(&self) -> &[SizeIndex] {
        &self.index
    }

    /// Whether a host given in position space contains an occurrence of some
    /// member. For circular families any rotation of the host works.
    pub fn occurs_in_positional(&self, host: &Graph) -> bool {
        let adj = host.adjacency();
        self.index.iter().any(|si| {
            subsets(host.n(), si.m).any(|s| si.matches(code::code_at(adj, &s), self.semantics))
        })
    }
}

fn build_index(members: &[Graph], kind: OrderKind) -> Vec<SizeIndex> {
    let mut out: Vec<SizeIndex> = Vec::new();
    for g in members {
        let m = g.n();
        if out.last().is_none_or(|s| s.m != m) {
            out.push(SizeIndex {
                m,
                codes: HashSet::new(),
                masks: Vec::new(),
                edge_counts: 0,
                min_edges: u32::MAX,
                connected: true,
            });
        }
        let si = out.last_mut().expect("just pushed");
        let variants = match kind {
            OrderKind::Circular => code::rotation_codes(g.adjacency()),
            OrderKind::Linear => vec![code::code(g.adjacency())],
        };
        for c in variants {
            if si.codes.insert(c) {
                si.masks.push(c);
            }
        }
        si.edge_counts |= 1 << g.edge_count();
        si.min_edges = si.min_edges.min(g.edge_count() as u32);
        si.connected &= g.is_connected();
    }
    out
}

/// Names accepted by [`by_name`] besides the parameterised `h<k>`, `ph<k>`,
/// `st<k>` and `lin-<name>`.
pub const BUILTIN_NAMES: [&str; 6] = ["forest", "lf", "cf", "ca", "cr", "fco"];

/// A built-in family by name: one of [`BUILTIN_NAMES`], `h3` to `h6`,
/// `ph<k>` (`k >= 4`), `st<k>` (`k >= 1`), or `lin-<name>` for the
/// linearization of a circular family.
pub fn by_name(name: &str) -> Result<ForbiddenFamily> {
    let lower = name.to_ascii_lowercase();
    if let Some(rest) = lower.strip_prefix("lin-") {
        return crate::patterns::linearize(&by_name(rest)?);
    }
    let numbered = |prefix: &str| {
        lower
            .strip_prefix(prefix)
            .and_then(|k| k.parse::<usize>().ok())
    };
    match lower.as_str() {
        "forest" => return Ok(family_forest()),
        "lf" => return Ok(family_lf()),
        "cf" => return Ok(family_cf()),
        "ca" => return Ok(family_ca()),
        "cr" => return Ok(family_cr()),
        "fco" => return Ok(family_fco()),
        _ => {}
    }
    if let Some(k) = numbered("ph") {
        return family_ph(k);
    }
    if let Some(k) = numbered("st") {
        return family_st(k);
    }
    if let Some(k) = numbered("h") {
        return family_h(k);
    }
    Err(Error::InvalidArgument(format!("unknown family {name:?}")))
}

/// Whether `host` contains no member of a circular `family`, member by
/// member. Subgraph-semantics families are matched against every spanning
/// supergraph occurrence.
pub fn avoids(host: &CircOrderedGraph, family: &ForbiddenFamily) -> bool {
    match (family.kind(), family.semantics()) {
        (OrderKind::Circular, Semantics::Induced) => family
            .circular_members()
            .iter()
            .all(|p| !contains_induced(host, p)),
        (OrderKind::Circular, Semantics::Subgraph) => {
            !family.occurs_in_positional(&host.positional())
        }
        // A linear family is read against the cut at the canonical start.
        (OrderKind::Linear, s) => {
            let lin = LinOrderedGraph::new(host.graph().clone(), host.seq().to_vec())
                .expect("ordering is a permutation");
            lin_avoids(&lin, family, s)
        }
    }
}
