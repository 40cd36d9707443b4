//! The antichain of minimal homomorphic images of simple paths, and the
//! linear families generated by straight paths and cycles.

use super::{ForbiddenFamily, OrderKind, Semantics};
use crate::circular_order::{contains_induced, enumerate_catalog, CircOrderedGraph};
use crate::error::{Error, Result};
use crate::graph::{cycle, path, Graph};

/// Largest `k` accepted by [`family_h`].
pub const H_CAP: usize = 6;

/// Whether `cog` is a vertex-surjective image of `SP_k` under a map that
/// keeps the path's vertices in clockwise order (the two ends may meet).
///
/// With `k` vertices the walk must visit them all in clockwise order, so the
/// ordered graph contains a spanning simple path. With `k - 1` vertices the
/// walk also returns to its start, so it contains a spanning simple cycle
/// (for `k - 1 = 2` that cycle degenerates to a single edge).
pub fn is_sp_image(k: usize, cog: &CircOrderedGraph) -> bool {
    let m = cog.n();
    if k < 2 || (m != k && m + 1 != k) || m < 2 {
        return false;
    }
    let p = cog.positional();
    (0..m).any(|s| {
        let at = |i: usize| (s + i) % m;
        let steps = if m == k { m - 1 } else { m };
        (0..steps).all(|i| p.has_edge(at(i), at(i + 1)))
    })
}

/// Minimal images of `SP_k`, computed from the catalog: keep the images on
/// `k - 1` and `k` vertices, then drop any that contain another as an
/// induced circularly ordered subgraph.
pub fn family_h(k: usize) -> Result<ForbiddenFamily> {
    if !(3..=H_CAP).contains(&k) {
        return Err(Error::InvalidArgument(format!(
            "H_k is available for 3 <= k <= {H_CAP}, got {k}"
        )));
    }
    let mut images: Vec<CircOrderedGraph> = Vec::new();
    for m in [k - 1, k] {
        images.extend(
            enumerate_catalog(m)?
                .into_iter()
                .filter(|c| is_sp_image(k, c)),
        );
    }
    let minimal: Vec<CircOrderedGraph> = images
        .iter()
        .filter(|x| {
            !images
                .iter()
                .any(|y| y.n() < x.n() && contains_induced(x, y))
        })
        .cloned()
        .collect();
    ForbiddenFamily::from_circular(&format!("H{k}"), Semantics::Induced, &minimal)
}

/// The four generators `St_k`, `sSt_k`, `StC_k`, `StC_{k-1}` in position
/// space.
pub fn ph_generators(k: usize) -> Result<[Graph; 4]> {
    if k < 4 {
        return Err(Error::InvalidArgument(format!(
            "PH_k needs k >= 4, got {k}"
        )));
    }
    let st = path(k)?;
    // The path's last vertex ranks first; the rest keep their order.
    let mut sst = Graph::empty(k)?;
    for i in 1..k - 1 {
        sst.add_edge(i, i + 1)?;
    }
    sst.add_edge(k - 1, 0)?;
    Ok([st, sst, cycle(k)?, cycle(k - 1)?])
}

/// Linear family matched with subgraph semantics, so it stands for every
/// spanning supergraph of the generators.
pub fn family_ph(k: usize) -> Result<ForbiddenFamily> {
    ForbiddenFamily::new(
        &format!("PH{k}"),
        OrderKind::Linear,
        Semantics::Subgraph,
        ph_generators(k)?.to_vec(),
    )
}
