//! Minimal dense complex linear algebra.
//!
//! Matrices are stored row-major. Only what the physics modules need is
//! provided: Kronecker products, partial traces over the last tensor factor,
//! basis permutations, and a Hermitian eigensolver.

mod eigen;
mod matrix;
mod sparse;

pub use eigen::{hermitian_eigenvalues, hermitian_eigh, psd_sqrt, HermitianEigen};
pub use matrix::{
    partial_trace_last, partial_trace_pure, tensor_product, ComplexMatrix, ComplexVector,
};
pub use sparse::SparseMatrix;

pub type C64 = num_complex::Complex64;
