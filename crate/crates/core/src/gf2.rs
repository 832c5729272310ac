//! Bit-packed GF(2) row operations.
//!
//! A matrix over GF(2) with at most 32 columns is a slice of `u32` rows.
//! This is the fast path behind every rank computation the forbidden
//! subgraph search performs (on the order of 10^7 calls), so the routines
//! here work in place on plain words with no allocation.

/// Rank by in-place Gaussian elimination.
///
/// Pivot order is fixed: leftmost nonzero column, topmost remaining row.
pub fn rank_rows(rows: &mut [u32], cols: usize) -> usize {
    debug_assert!(cols <= 32);
    let m = rows.len();
    let mut rank = 0;
    for col in 0..cols {
        let bit = 1u32 << col;
        let Some(pivot) = (rank..m).find(|&r| rows[r] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank];
        for row in rows.iter_mut().skip(rank + 1) {
            if *row & bit != 0 {
                *row ^= pivot_row;
            }
        }
        rank += 1;
        if rank == m {
            break;
        }
    }
    rank
}

/// Rank of the symmetric GF(2) matrix `adj | diag` where `adj` holds the
/// off-diagonal bits (row masks) and `diag` the diagonal bits.
pub fn rank_adj_with_diagonal(adj: &[u16], n: usize, diag: u16) -> usize {
    debug_assert!(n <= 16);
    let mut rows = [0u32; 16];
    for i in 0..n {
        rows[i] = adj[i] as u32 | (((diag >> i) & 1) as u32) << i;
    }
    rank_rows(&mut rows[..n], n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity_and_ones() {
        let mut id = [1u32, 2, 4, 8];
        assert_eq!(rank_rows(&mut id, 4), 4);
        let mut ones = [0b111u32; 3];
        assert_eq!(rank_rows(&mut ones, 3), 1);
        let mut zero = [0u32; 5];
        assert_eq!(rank_rows(&mut zero, 5), 0);
    }

    #[test]
    fn rank_with_diagonal_matches_direct_elimination() {
        // P3 adjacency with diagonal (0,1,0) has rank 2.
        let adj = [0b010u16, 0b101, 0b010];
        assert_eq!(rank_adj_with_diagonal(&adj, 3, 0b010), 2);
        // All-zero diagonal on P3 also has rank 2.
        assert_eq!(rank_adj_with_diagonal(&adj, 3, 0), 2);
        // Diagonal (1,0,1) gives the third minimum-rank matrix of P3.
        assert_eq!(rank_adj_with_diagonal(&adj, 3, 0b101), 2);
        // Diagonal (1,1,1) is invertible.
        assert_eq!(rank_adj_with_diagonal(&adj, 3, 0b111), 3);
    }
}
