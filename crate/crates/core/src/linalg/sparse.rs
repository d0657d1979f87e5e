use alloc::vec::Vec;

use num_traits::Zero;

use super::{ComplexMatrix, ComplexVector, C64};
use crate::error::{Error, Result};

/// Compressed sparse row copy of a dense matrix, for repeated
/// matrix-vector products with mostly-zero operators.
#[derive(Debug, Clone)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    row_start: Vec<usize>,
    col_index: Vec<usize>,
    values: Vec<C64>,
}

impl SparseMatrix {
    /// Keeps every entry that is not exactly zero.
    pub fn from_dense(m: &ComplexMatrix) -> Self {
        let mut row_start = Vec::with_capacity(m.rows() + 1);
        let mut col_index = Vec::new();
        let mut values = Vec::new();
        row_start.push(0);
        for i in 0..m.rows() {
            for (j, z) in m.row(i).iter().enumerate() {
                if !z.is_zero() {
                    col_index.push(j);
                    values.push(*z);
                }
            }
            row_start.push(values.len());
        }
        Self {
            rows: m.rows(),
            cols: m.cols(),
            row_start,
            col_index,
            values,
        }
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn mul_vec(&self, v: &ComplexVector) -> Result<ComplexVector> {
        if v.dim() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "sparse mul_vec",
                expected: self.cols,
                found: v.dim(),
            });
        }
        let x = v.as_slice();
        let out = (0..self.rows)
            .map(|i| {
                let span = self.row_start[i]..self.row_start[i + 1];
                self.col_index[span.clone()]
                    .iter()
                    .zip(&self.values[span])
                    .map(|(&j, a)| a * x[j])
                    .sum()
            })
            .collect();
        Ok(ComplexVector::from_raw(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_dense_product() {
        let m = ComplexMatrix::from_fn(5, 4, |i, j| {
            if (i + j) % 3 == 0 {
                C64::new(i as f64 - 1.5, j as f64)
            } else {
                C64::zero()
            }
        });
        let v = ComplexVector::new((0..4).map(|k| C64::new(k as f64, 1.0 - k as f64)).collect())
            .unwrap();
        let sparse = SparseMatrix::from_dense(&m);
        assert!(sparse.nnz() < 20);
        assert_eq!(sparse.mul_vec(&v).unwrap(), m.mul_vec(&v).unwrap());
    }
}
