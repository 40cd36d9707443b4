use crate::circular_order::CircOrderedGraph;

/// Whether `SP_k` maps to `cog`: some walk `u_1 ... u_k` with consecutive
/// vertices adjacent, pairwise distinct except that `u_1 = u_k` is allowed,
/// and met in this order walking clockwise from `u_1`.
pub fn sp_maps_to(k: usize, cog: &CircOrderedGraph) -> bool {
    let n = cog.n();
    if k == 0 {
        return true;
    }
    if k == 1 {
        return n > 0;
    }
    let p = cog.positional();
    let rel = |s: usize, w: usize| (w + n - s) % n;
    fn extend(
        p: &crate::graph::Graph,
        rel: &dyn Fn(usize, usize) -> usize,
        s: usize,
        cur: usize,
        len: usize,
        k: usize,
    ) -> bool {
        if len == k {
            return true;
        }
        let here = rel(s, cur);
        p.neighbors(cur).any(|w| {
            if w == s {
                // Closing the walk on its first vertex must be the last step.
                len + 1 == k && len >= 2
            } else {
                rel(s, w) > here && extend(p, rel, s, w, len + 1, k)
            }
        })
    }
    (0..n).any(|s| extend(&p, &rel, s, s, 1, k))
}
