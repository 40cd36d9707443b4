//! Homomorphisms, chromatic number and circular chromatic number.

mod orientation;
mod walks;

use crate::error::{cap, Result};
use crate::families::{family_h, family_ph, Semantics};
use crate::graph::{bit, bits, complete, full_mask, rational_complete, Graph, Rational};
use crate::search::{find_free_circular_ordering, find_free_linear_ordering, SearchOptions};

pub use orientation::{
    acyclic_orientations, chi_c_orientation, cycle_traversal, simple_cycles, CycleTraversal,
    Orientation, ORIENTATION_CAP,
};
pub use walks::sp_maps_to;

/// Cap on both sides of [`find_homomorphism`].
pub const HOM_CAP: usize = 12;
pub const CHROMATIC_CAP: usize = 10;
pub const CHI_C_CAP: usize = 9;
pub const KCIRC_CAP: usize = 7;

/// A homomorphism `g -> h` as a vertex map, if one exists. Backtracking
/// picks the unassigned vertex with the fewest remaining candidates and
/// prunes the candidates of its neighbours after each assignment.
pub fn find_homomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    cap("homomorphism source", g.n(), HOM_CAP)?;
    cap("homomorphism target", h.n(), HOM_CAP)?;
    if g.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    if h.n() == 0 {
        return Ok(None);
    }
    let mut domains = vec![full_mask(h.n()); g.n()];
    let mut map = vec![usize::MAX; g.n()];
    Ok(if assign(g, h, &mut domains, &mut map, 0) {
        Some(map)
    } else {
        None
    })
}

fn assign(g: &Graph, h: &Graph, domains: &mut [u64], map: &mut [usize], placed: u64) -> bool {
    let n = g.n();
    let Some(v) = (0..n)
        .filter(|&v| placed & bit(v) == 0)
        .min_by_key(|&v| (domains[v].count_ones(), std::cmp::Reverse(g.degree(v))))
    else {
        return true;
    };
    for x in bits(domains[v]) {
        let saved = domains.to_vec();
        let mut ok = true;
        for w in bits(g.neighbors_mask(v) & !placed) {
            domains[w] &= h.neighbors_mask(x);
            if domains[w] == 0 {
                ok = false;
                break;
            }
        }
        if ok {
            map[v] = x;
            if assign(g, h, domains, map, placed | bit(v)) {
                return true;
            }
        }
        domains.copy_from_slice(&saved);
    }
    false
}

pub fn hom_exists(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_homomorphism(g, h)?.is_some())
}

/// Least `k` with `g -> K_k` (0 for the empty graph).
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    cap("chromatic number", g.n(), CHROMATIC_CAP)?;
    for k in 1..=g.n() {
        if hom_exists(g, &complete(k)?)? {
            return Ok(k);
        }
    }
    Ok(0)
}

/// Reduced fractions `p/q` with `1 <= q <= p <= n`, in increasing order.
pub fn fractions_up_to(n: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = (1..=n as u64)
        .flat_map(|p| (1..=p).filter_map(move |q| Rational::new(p, q).ok()))
        .filter(|r| r.numer() as usize <= n)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The circular chromatic number as the least `p/q` (with `p <= n`) such
/// that `g -> K_{p/q}`. Edgeless graphs give 1.
pub fn chi_c_min(g: &Graph) -> Result<Rational> {
    cap("circular chromatic number", g.n(), CHI_C_CAP)?;
    for r in fractions_up_to(g.n()) {
        let target = rational_complete(r.numer() as usize, r.denom() as usize)?;
        if hom_exists(g, &target)? {
            return Ok(r);
        }
    }
    Rational::integer(1)
}

/// The three conditions that should coincide for `k >= 3`:
/// a circular ordering avoiding `H_{k+1}` exists, a linear ordering with no
/// `PH_{k+1}` subgraph exists, and the circular chromatic number is below `k`.
pub fn kcirc_triple(g: &Graph, k: usize) -> Result<(bool, bool, bool)> {
    if k < 3 {
        return Err(crate::Error::InvalidArgument(format!(
            "k must be >= 3, got {k}"
        )));
    }
    cap("k-circular check", g.n(), KCIRC_CAP)?;
    let opts = SearchOptions::default();
    let circ = find_free_circular_ordering(g, &family_h(k + 1)?, &opts)?.found;
    let lin = find_free_linear_ordering(g, &family_ph(k + 1)?, Semantics::Subgraph, &opts)?.found;
    let chi = chi_c_min(g)? < Rational::integer(k as u64)?;
    Ok((circ, lin, chi))
}
