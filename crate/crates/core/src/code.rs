//! Bit codes for ordered graphs in position space (vertex `i` sits at
//! position `i`). A code lists the pairs `(0,1), (0,2), ..., (m-2,m-1)` most
//! significant bit first, so it fits a `u64` for up to [`CODE_CAP`] vertices.

use crate::graph::{bit, full_mask};

pub(crate) const CODE_CAP: usize = 11;

pub(crate) fn code(adj: &[u64]) -> u64 {
    let m = adj.len();
    debug_assert!(m <= CODE_CAP);
    let mut c = 0u64;
    for (i, row) in adj.iter().enumerate() {
        for j in i + 1..m {
            c = (c << 1) | ((row >> j) & 1);
        }
    }
    c
}

/// Code of the ordered subgraph on `positions` (ascending) of a host given
/// in position space.
#[inline]
pub(crate) fn code_at(host: &[u64], positions: &[usize]) -> u64 {
    let mut c = 0u64;
    for (a, &i) in positions.iter().enumerate() {
        let row = host[i];
        for &j in &positions[a + 1..] {
            c = (c << 1) | ((row >> j) & 1);
        }
    }
    c
}

pub(crate) fn decode(m: usize, c: u64) -> Vec<u64> {
    let pairs = m * m.saturating_sub(1) / 2;
    let mut adj = vec![0u64; m];
    let mut k = pairs;
    for i in 0..m {
        for j in i + 1..m {
            k -= 1;
            if (c >> k) & 1 == 1 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
        }
    }
    adj
}

/// Rotates a position-space adjacency so that old position `r` becomes 0.
pub(crate) fn rotate(adj: &[u64], r: usize) -> Vec<u64> {
    let m = adj.len();
    if m == 0 {
        return Vec::new();
    }
    let r = r % m;
    let full = full_mask(m);
    (0..m)
        .map(|i| {
            let row = adj[(i + r) % m];
            if r == 0 {
                row
            } else {
                ((row >> r) | (row << (m - r))) & full
            }
        })
        .collect()
}

/// Codes of all `m` rotations (duplicates kept; callers dedupe if needed).
pub(crate) fn rotation_codes(adj: &[u64]) -> Vec<u64> {
    (0..adj.len().max(1))
        .map(|r| code(&rotate(adj, r)))
        .collect()
}

pub(crate) fn circular_code(adj: &[u64]) -> u64 {
    rotation_codes(adj).into_iter().min().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_inverts_code() {
        for m in 0..=5usize {
            for c in 0..(1u64 << (m * m.saturating_sub(1) / 2)) {
                assert_eq!(code(&decode(m, c)), c);
            }
        }
    }

    #[test]
    fn rotation_moves_positions() {
        // Edge between positions 0 and 1 of a 4-cycle of positions.
        let adj = decode(4, 0b100000);
        assert_eq!(adj[0], 0b10);
        let rot = rotate(&adj, 1);
        // Old position 1 is now 0 and old 0 is now 3.
        assert_eq!(rot[0], 0b1000);
        assert_eq!(rotation_codes(&adj).len(), 4);
    }

    #[test]
    fn code_at_matches_restriction() {
        let adj = decode(5, 0b1010011001);
        let sub: Vec<u64> = {
            let pos = [0, 2, 3];
            pos.iter()
                .map(|&i| {
                    pos.iter()
                        .enumerate()
                        .filter(|&(_, &j)| adj[i] >> j & 1 == 1)
                        .fold(0, |m, (k, _)| m | bit(k))
                })
                .collect()
        };
        assert_eq!(code_at(&adj, &[0, 2, 3]), code(&sub));
    }
}
