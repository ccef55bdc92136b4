//! Fraction-free (Bareiss) elimination over the integers.
//!
//! Every intermediate entry is a minor of the input, so all divisions are
//! exact. Arithmetic is checked `i128`; an overflow is reported rather than
//! wrapped.

use crate::error::{invalid, Error, Result};

fn widen(matrix: &[Vec<i64>]) -> Result<(Vec<Vec<i128>>, usize)> {
    let cols = matrix
        .first()
        .map(Vec::len)
        .ok_or_else(|| invalid("empty matrix"))?;
    if matrix.iter().any(|row| row.len() != cols) {
        return Err(Error::RaggedMatrix);
    }
    Ok((
        matrix
            .iter()
            .map(|row| row.iter().map(|&v| v as i128).collect())
            .collect(),
        cols,
    ))
}

/// Runs elimination in place; returns the rank and the sign of the row
/// permutation applied.
#[allow(clippy::needless_range_loop)]
fn eliminate(a: &mut [Vec<i128>], cols: usize) -> Result<(usize, i128)> {
    let rows = a.len();
    let mut rank = 0usize;
    let mut prev_pivot = 1i128;
    let mut sign = 1i128;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        if pivot_row != rank {
            a.swap(pivot_row, rank);
            sign = -sign;
        }
        let pivot = a[rank][col];
        for i in rank + 1..rows {
            let factor = a[i][col];
            for j in col + 1..cols {
                let lhs = pivot.checked_mul(a[i][j]).ok_or(Error::Overflow)?;
                let rhs = factor.checked_mul(a[rank][j]).ok_or(Error::Overflow)?;
                let num = lhs.checked_sub(rhs).ok_or(Error::Overflow)?;
                debug_assert_eq!(num % prev_pivot, 0, "Bareiss division must be exact");
                a[i][j] = num / prev_pivot;
            }
            a[i][col] = 0;
        }
        prev_pivot = pivot;
        rank += 1;
    }
    Ok((rank, sign))
}

/// Rank over the rationals of an integer matrix given as rows.
pub fn rank_exact(matrix: &[Vec<i64>]) -> Result<usize> {
    let (mut a, cols) = widen(matrix)?;
    Ok(eliminate(&mut a, cols)?.0)
}

/// Exact determinant of a square integer matrix.
pub fn determinant_exact(matrix: &[Vec<i64>]) -> Result<i128> {
    let (mut a, cols) = widen(matrix)?;
    if cols != a.len() {
        return Err(invalid("determinant needs a square matrix"));
    }
    let (rank, sign) = eliminate(&mut a, cols)?;
    if rank < cols {
        return Ok(0);
    }
    Ok(sign * a[cols - 1][cols - 1])
}
