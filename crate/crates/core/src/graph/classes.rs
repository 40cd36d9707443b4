use super::{bit, bits, full_mask, Graph};

/// Connected components as vertex masks, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<u64> {
    let mut left = full_mask(g.n());
    let mut out = Vec::new();
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut comp = bit(start);
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= g.neighbors_mask(v);
            }
            frontier = next & !comp;
            comp |= next;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

/// Acyclic: every component with `k` vertices has exactly `k - 1` edges.
pub fn is_forest(g: &Graph) -> bool {
    components(g).into_iter().all(|c| {
        let edges: usize = bits(c)
            .map(|v| (g.neighbors_mask(v) & c).count_ones() as usize)
            .sum::<usize>()
            / 2;
        edges + 1 == c.count_ones() as usize
    })
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() > 0 && g.is_connected() && is_forest(g)
}

pub fn is_linear_forest(g: &Graph) -> bool {
    is_forest(g) && (0..g.n()).all(|v| g.degree(v) <= 2)
}

/// Forest whose components become paths (possibly empty) once their leaves
/// are removed.
pub fn is_caterpillar_forest(g: &Graph) -> bool {
    if !is_forest(g) {
        return false;
    }
    let leaves: u64 = (0..g.n())
        .filter(|&v| g.degree(v) <= 1)
        .fold(0, |m, v| m | bit(v));
    let spine = full_mask(g.n()) & !leaves;
    bits(spine).all(|v| (g.neighbors_mask(v) & spine).count_ones() <= 2)
}
