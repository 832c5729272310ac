//! Exact rank and column-space operations over GF(p).
//!
//! Elimination uses a fixed pivot order (leftmost nonzero column, topmost
//! remaining row), so every routine is deterministic. GF(2) matrices are
//! packed into machine words; other primes eliminate on byte entries.

use crate::error::{Error, Result};
use crate::field::{FMatrix, FVector};
use crate::gf2;

/// Row rank of `m` over its field.
pub fn rank(m: &FMatrix) -> usize {
    if m.field().p() == 2 && m.cols() <= 32 {
        let mut rows: Vec<u32> = (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (j, &e)| acc | (e as u32) << j)
            })
            .collect();
        gf2::rank_rows(&mut rows, m.cols())
    } else {
        rank_dense_mod_p(m)
    }
}

/// Rank by generic modular elimination, for any supported p.
///
/// Kept callable on GF(2) as an independent check of the bit-packed path.
pub(crate) fn rank_dense_mod_p(m: &FMatrix) -> usize {
    let f = m.field();
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.entries().to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for j in 0..cols {
                a.swap(rank * cols + j, pivot * cols + j);
            }
        }
        let inv = f.inv(a[rank * cols + col]);
        for j in col..cols {
            a[rank * cols + j] = f.mul(a[rank * cols + j], inv);
        }
        for r in rank + 1..rows {
            let factor = a[r * cols + col];
            if factor != 0 {
                for j in col..cols {
                    let sub = f.mul(factor, a[rank * cols + j]);
                    a[r * cols + j] = f.sub(a[r * cols + j], sub);
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Does `w` lie in the column space of `m`? If so, also return one
/// coefficient vector `a` with `m * a = w`.
///
/// The witness is the one obtained by back-substitution with all free
/// variables set to zero.
pub fn col_space_contains(m: &FMatrix, w: &FVector) -> Result<Option<FVector>> {
    if m.field() != w.field() {
        return Err(Error::FieldMismatch);
    }
    if w.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} against a {}x{} matrix",
            w.len(),
            m.rows(),
            m.cols()
        )));
    }
    let f = m.field();
    let (rows, cols) = (m.rows(), m.cols());
    let width = cols + 1;
    let mut a: Vec<u8> = Vec::with_capacity(rows * width);
    for i in 0..rows {
        a.extend_from_slice(m.row(i));
        a.push(w.get(i));
    }

    // Row echelon form over the coefficient columns, pivots normalized to 1.
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r * width + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for j in 0..width {
                a.swap(rank * width + j, pivot * width + j);
            }
        }
        let inv = f.inv(a[rank * width + col]);
        for j in col..width {
            a[rank * width + j] = f.mul(a[rank * width + j], inv);
        }
        for r in rank + 1..rows {
            let factor = a[r * width + col];
            if factor != 0 {
                for j in col..width {
                    let sub = f.mul(factor, a[rank * width + j]);
                    a[r * width + j] = f.sub(a[r * width + j], sub);
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == rows {
            break;
        }
    }

    // Inconsistent iff some eliminated row is 0 = nonzero.
    for r in rank..rows {
        if a[r * width + cols] != 0 {
            return Ok(None);
        }
    }

    let mut x = vec![0u8; cols];
    for &(r, c) in pivots.iter().rev() {
        let mut acc = a[r * width + cols];
        for j in c + 1..cols {
            acc = f.sub(acc, f.mul(a[r * width + j], x[j]));
        }
        x[c] = acc;
    }
    Ok(Some(FVector::new(f, x)?))
}

/// Do `a` and `b` span the same column space?
///
/// Checked as rank(A) = rank(B) = rank([A|B]).
pub fn col_space_equal(a: &FMatrix, b: &FMatrix) -> Result<bool> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} against {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let ra = rank(a);
    let rb = rank(b);
    if ra != rb {
        return Ok(false);
    }
    Ok(rank(&a.hstack(b)?) == ra)
}

/// Rank of the bordered matrix `[[m, u], [v^T, c]]`.
pub fn bordered_rank(m: &FMatrix, u: &FVector, v: &FVector, c: u8) -> Result<usize> {
    if m.field() != u.field() || m.field() != v.field() {
        return Err(Error::FieldMismatch);
    }
    if u.len() != m.rows() || v.len() != m.cols() {
        return Err(Error::DimensionMismatch(format!(
            "border vectors of lengths {} and {} on a {}x{} matrix",
            u.len(),
            v.len(),
            m.rows(),
            m.cols()
        )));
    }
    if c >= m.field().p() {
        return Err(Error::DimensionMismatch(format!(
            "corner {c} is not a residue mod {}",
            m.field().p()
        )));
    }
    let mut b = FMatrix::zeros(m.field(), m.rows() + 1, m.cols() + 1);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            b.set(i, j, m.get(i, j));
        }
        b.set(i, m.cols(), u.get(i));
    }
    for j in 0..m.cols() {
        b.set(m.rows(), j, v.get(j));
    }
    b.set(m.rows(), m.cols(), c);
    Ok(rank(&b))
}
