//! The binary subset-sum arrangement `H_d` and its characteristic polynomial.

mod poly;
mod rank;
mod validity;

pub use poly::{
    char_poly, char_poly_interpolate, char_poly_whitney, interpolation_nodes, CharPoly, PolyMethod,
    WHITNEY_MAX_D,
};
pub use rank::{determinant_exact, rank_exact};
pub use validity::{
    gcd_factorial_criterion, hadamard_ceiling, improved_hadamard_ceiling, is_admissible,
    max_binary_determinant_scan, predict_alpha, predict_alpha_with, validity_bound, Prediction,
    ValidityBound, KNOWN_MAX_BINARY_DET,
};

use crate::error::{invalid, Result};

/// Largest dimension [`build_arrangement`] accepts.
pub const MAX_DIMENSION: u32 = 20;

/// `H_d`: the `d × (2^d - 1)` matrix whose columns are the nonzero 0/1
/// vectors of length `d`.
///
/// Column `k` is the binary expansion of `k + 1`, row `i` holding bit `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryArrangement {
    d: u32,
    columns: Vec<u64>,
}

pub fn build_arrangement(d: u32) -> Result<BinaryArrangement> {
    if d == 0 {
        return Err(invalid("d must be positive"));
    }
    if d > MAX_DIMENSION {
        return Err(invalid(format!(
            "d={d} exceeds the arrangement cap of {MAX_DIMENSION}"
        )));
    }
    Ok(BinaryArrangement {
        d,
        columns: (1..1u64 << d).collect(),
    })
}

impl BinaryArrangement {
    pub fn dimension(&self) -> u32 {
        self.d
    }

    /// Number of columns, `2^d - 1`.
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Columns as bitmasks, bit `i` being row `i`.
    pub fn columns(&self) -> &[u64] {
        &self.columns
    }

    pub fn column_vector(&self, k: usize) -> Vec<i64> {
        let c = self.columns[k];
        (0..self.d).map(|i| (c >> i & 1) as i64).collect()
    }

    /// The matrix as `d` rows of length `2^d - 1`.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.d)
            .map(|i| self.columns.iter().map(|&c| (c >> i & 1) as i64).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn small_arrangements() {
        let h1 = build_arrangement(1).unwrap();
        assert_eq!(h1.rows(), vec![vec![1]]);
        let h2 = build_arrangement(2).unwrap();
        let cols: BTreeSet<Vec<i64>> = (0..h2.len()).map(|k| h2.column_vector(k)).collect();
        let want: BTreeSet<Vec<i64>> = [vec![1, 0], vec![0, 1], vec![1, 1]].into_iter().collect();
        assert_eq!(cols, want);
    }

    #[test]
    fn three_has_every_nonzero_column_once() {
        let h3 = build_arrangement(3).unwrap();
        assert_eq!(h3.len(), 7);
        let cols: BTreeSet<Vec<i64>> = (0..h3.len()).map(|k| h3.column_vector(k)).collect();
        assert_eq!(cols.len(), 7);
        assert!(!cols.contains(&vec![0, 0, 0]));
        assert_eq!(rank_exact(&h3.rows()).unwrap(), 3);
    }

    #[test]
    fn dimension_cap() {
        assert!(build_arrangement(0).is_err());
        assert!(build_arrangement(MAX_DIMENSION + 1).is_err());
        assert_eq!(build_arrangement(10).unwrap().len(), 1023);
    }
}
