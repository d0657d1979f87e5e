use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut, Mul};

use num_traits::Zero;

use super::C64;
use crate::error::{Error, Result};
use crate::tol::MAX_DIM;

/// Dense complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

fn check_dims(rows: usize, cols: usize) -> Result<()> {
    if rows > MAX_DIM || cols > MAX_DIM {
        return Err(Error::DimensionOverflow {
            rows,
            cols,
            max: MAX_DIM,
        });
    }
    if rows == 0 || cols == 0 {
        return Err(Error::DimensionMismatch {
            op: "matrix construction",
            expected: 1,
            found: 0,
        });
    }
    Ok(())
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries, rejecting non-finite values.
    pub fn new(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        check_dims(rows, cols)?;
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "matrix construction",
                expected: rows * cols,
                found: data.len(),
            });
        }
        if let Some(k) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite {
                row: k / cols,
                col: k % cols,
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::new(rows, cols, data.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C64::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = C64::new(d, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: f64, other: &Self) -> Result<()> {
        self.same_shape(other, "add_scaled")?;
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b * s;
        }
        Ok(())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let src = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(src) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &ComplexVector) -> Result<ComplexVector> {
        if self.cols != v.dim() {
            return Err(Error::DimensionMismatch {
                op: "mul_vec",
                expected: self.cols,
                found: v.dim(),
            });
        }
        let data = (0..self.rows)
            .map(|i| self.row(i).iter().zip(v.as_slice()).map(|(a, b)| a * b).sum())
            .collect();
        Ok(ComplexVector { data })
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise `|self - other|`; infinite when shapes differ.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.rows != other.rows || self.cols != other.cols {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise `|h - h†|`; infinite for non-square input.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// `(h + h†)/2`, removing rounding asymmetry from products of Hermitian
    /// matrices.
    pub fn hermitian_part(&self) -> Self {
        let n = self.rows;
        Self::from_fn(n, n, |i, j| (self[(i, j)] + self[(j, i)].conj()) * 0.5)
    }

    /// Block-diagonal direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        check_dims(r, c)?;
        Ok(Self::from_fn(r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)]
            } else if i >= self.rows && j >= self.cols {
                other[(i - self.rows, j - self.cols)]
            } else {
                C64::zero()
            }
        }))
    }

    /// Relabels the basis: `out[i, j] = self[perm[i], perm[j]]`, i.e.
    /// `P† M P` for the permutation matrix sending `e_i` to `e_perm[i]`.
    pub fn permute_basis(&self, perm: &[usize]) -> Result<Self> {
        if !self.is_square() || perm.len() != self.rows {
            return Err(Error::DimensionMismatch {
                op: "permute_basis",
                expected: self.rows,
                found: perm.len(),
            });
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::DimensionMismatch {
                    op: "permute_basis (not a permutation)",
                    expected: perm.len(),
                    found: p,
                });
            }
            seen[p] = true;
        }
        let n = self.rows;
        Ok(Self::from_fn(n, n, |i, j| self[(perm[i], perm[j])]))
    }

    fn same_shape(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op,
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on shape mismatch; use [`ComplexMatrix::matmul`] for a checked product.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("matrix product shape mismatch")
    }
}

/// Dense complex column vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    data: Vec<C64>,
}

impl ComplexVector {
    pub fn new(data: Vec<C64>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::DimensionMismatch {
                op: "vector construction",
                expected: 1,
                found: 0,
            });
        }
        if let Some(k) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite { row: k, col: 0 });
        }
        Ok(Self { data })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            data: vec![C64::zero(); dim],
        }
    }

    /// Unit vector `e_index`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::DimensionMismatch {
                op: "basis vector",
                expected: dim,
                found: index,
            });
        }
        let mut v = Self::zeros(dim);
        v.data[index] = C64::new(1.0, 0.0);
        Ok(v)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub(crate) fn from_raw(data: Vec<C64>) -> Self {
        Self { data }
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `|v⟩⟨v|`
    pub fn outer(&self) -> ComplexMatrix {
        let n = self.dim();
        ComplexMatrix::from_fn(n, n, |i, j| self.data[i] * self.data[j].conj())
    }
}

impl Index<usize> for ComplexVector {
    type Output = C64;

    fn index(&self, i: usize) -> &C64 {
        &self.data[i]
    }
}

/// Kronecker product `a ⊗ b`. Block `(i, j)` of the result is `a[i, j] * b`.
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let rows = a.rows.saturating_mul(b.rows);
    let cols = a.cols.saturating_mul(b.cols);
    check_dims(rows, cols)?;
    Ok(ComplexMatrix::from_fn(rows, cols, |i, j| {
        a[(i / b.rows, j / b.cols)] * b[(i % b.rows, j % b.cols)]
    }))
}

/// Traces out the rightmost tensor factor of a `(keep·trace)`-dimensional
/// square matrix.
pub fn partial_trace_last(
    rho: &ComplexMatrix,
    dim_keep: usize,
    dim_trace: usize,
) -> Result<ComplexMatrix> {
    let n = dim_keep * dim_trace;
    if !rho.is_square() || rho.rows != n || n == 0 {
        return Err(Error::DimensionMismatch {
            op: "partial_trace_last",
            expected: n,
            found: rho.rows,
        });
    }
    Ok(ComplexMatrix::from_fn(dim_keep, dim_keep, |i, j| {
        (0..dim_trace)
            .map(|k| rho[(i * dim_trace + k, j * dim_trace + k)])
            .sum()
    }))
}

/// Partial trace of the pure state `|ψ⟩⟨ψ|` over the rightmost factor,
/// without forming the full outer product.
pub fn partial_trace_pure(
    psi: &ComplexVector,
    dim_keep: usize,
    dim_trace: usize,
) -> Result<ComplexMatrix> {
    let n = dim_keep * dim_trace;
    if psi.dim() != n || n == 0 {
        return Err(Error::DimensionMismatch {
            op: "partial_trace_pure",
            expected: n,
            found: psi.dim(),
        });
    }
    let amp = psi.as_slice();
    Ok(ComplexMatrix::from_fn(dim_keep, dim_keep, |i, j| {
        let a = &amp[i * dim_trace..(i + 1) * dim_trace];
        let b = &amp[j * dim_trace..(j + 1) * dim_trace];
        a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn int_matrix(rows: usize, cols: usize, seed: &[i32]) -> ComplexMatrix {
        ComplexMatrix::from_fn(rows, cols, |i, j| {
            let k = (i * cols + j) % seed.len();
            C64::new(seed[k] as f64, seed[(k + 1) % seed.len()] as f64)
        })
    }

    #[test]
    fn identity_kron_identity() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(tensor_product(&i2, &i2).unwrap(), ComplexMatrix::identity(4));
    }

    #[test]
    fn scalar_kron_scales() {
        let two = ComplexMatrix::from_real(1, 1, &[2.0]).unwrap();
        let m = int_matrix(3, 2, &[1, -2, 3, 5, 0, 7]);
        assert_eq!(tensor_product(&two, &m).unwrap(), m.scale(2.0));
    }

    #[test]
    fn raising_kron_annihilation() {
        // σ+ = |e⟩⟨g| with e = index 0; a on 3 Fock levels.
        let sp = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        let mut a = ComplexMatrix::zeros(3, 3);
        a[(0, 1)] = c(1.0);
        a[(1, 2)] = c(2f64.sqrt());
        let k = tensor_product(&sp, &a).unwrap();
        assert_eq!((k.rows(), k.cols()), (6, 6));
        // ⟨e,0| σ+ ⊗ a |g,1⟩: row e·3+0 = 0, column g·3+1 = 4.
        assert_eq!(k[(0, 4)], c(1.0));
        assert_eq!(k[(1, 5)], c(2f64.sqrt()));
        let nonzero = k.as_slice().iter().filter(|z| !z.is_zero()).count();
        assert_eq!(nonzero, 2);
    }

    #[test]
    fn kron_overflow_is_rejected() {
        let big = ComplexMatrix::identity(MAX_DIM / 2 + 1);
        let two = ComplexMatrix::identity(2);
        assert!(matches!(
            tensor_product(&big, &two),
            Err(Error::DimensionOverflow { .. })
        ));
    }

    #[test]
    fn kron_is_associative_on_integers() {
        let a = int_matrix(2, 2, &[1, 2, -1, 0, 3]);
        let b = int_matrix(2, 3, &[0, 1, 4, -2]);
        let cm = int_matrix(3, 2, &[5, -1, 2]);
        let left = tensor_product(&tensor_product(&a, &b).unwrap(), &cm).unwrap();
        let right = tensor_product(&a, &tensor_product(&b, &cm).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn partial_trace_of_product_state() {
        let rho_a = ComplexMatrix::new(
            2,
            2,
            vec![c(0.7), C64::new(0.1, 0.2), C64::new(0.1, -0.2), c(0.3)],
        )
        .unwrap();
        let rho_b = ComplexMatrix::from_diagonal(&[0.5, 0.25, 0.25]);
        let joint = tensor_product(&rho_a, &rho_b).unwrap();
        let reduced = partial_trace_last(&joint, 2, 3).unwrap();
        assert!(reduced.max_abs_diff(&rho_a) < 1e-15);
    }

    #[test]
    fn partial_trace_of_bell_state() {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let psi = ComplexVector::new(vec![c(h), c(0.0), c(0.0), c(h)]).unwrap();
        let reduced = partial_trace_last(&psi.outer(), 2, 2).unwrap();
        assert!(reduced.max_abs_diff(&ComplexMatrix::identity(2).scale(0.5)) < 1e-15);
    }

    #[test]
    fn partial_trace_dimension_mismatch() {
        let m = ComplexMatrix::identity(6);
        assert!(matches!(
            partial_trace_last(&m, 4, 2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn permute_basis_swaps() {
        let m = ComplexMatrix::from_diagonal(&[1.0, 2.0, 3.0]);
        let p = m.permute_basis(&[2, 0, 1]).unwrap();
        assert_eq!(p, ComplexMatrix::from_diagonal(&[3.0, 1.0, 2.0]));
        assert!(m.permute_basis(&[0, 0, 1]).is_err());
    }

    #[test]
    fn rejects_non_finite() {
        assert!(matches!(
            ComplexMatrix::from_real(1, 2, &[0.0, f64::NAN]),
            Err(Error::NonFinite { row: 0, col: 1 })
        ));
    }

    fn arb_state(keep: usize, trace: usize) -> impl Strategy<Value = ComplexVector> {
        proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), keep * trace).prop_filter_map(
            "nonzero",
            |v| {
                let data: Vec<C64> = v.into_iter().map(|(a, b)| C64::new(a, b)).collect();
                let n = data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                (n > 1e-3).then(|| ComplexVector::new(data.iter().map(|z| z / n).collect()).unwrap())
            },
        )
    }

    proptest! {
        #[test]
        fn partial_trace_preserves_trace(
            entries in proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 36)
        ) {
            let g = ComplexMatrix::new(6, 6, entries.into_iter().map(|(a, b)| C64::new(a, b)).collect()).unwrap();
            let h = g.hermitian_part();
            let reduced = partial_trace_last(&h, 3, 2).unwrap();
            prop_assert!((reduced.trace() - h.trace()).norm() < 1e-12);
        }

        #[test]
        fn pure_trace_matches_dense_trace(psi in arb_state(4, 5)) {
            let dense = partial_trace_last(&psi.outer(), 4, 5).unwrap();
            let direct = partial_trace_pure(&psi, 4, 5).unwrap();
            prop_assert!(dense.max_abs_diff(&direct) < 1e-15);
        }
    }
}
