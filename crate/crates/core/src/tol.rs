//! Numerical tolerances shared by every module.

/// Tolerance record. All thresholds in the crate come from [`TOL`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Largest `|h - h†|` entry accepted as Hermitian by the eigensolver.
    pub hermitian_input: f64,
    /// Eigenvalues in `[-eigen_clamp, 0)` are floating-point dust and become 0.
    pub eigen_clamp: f64,
    /// Jacobi stops once the off-diagonal Frobenius norm falls below this
    /// (scaled by the matrix norm when that exceeds 1).
    pub jacobi_off_diag: f64,
    /// Hermiticity, unit trace and positivity of two-atom density matrices.
    pub density: f64,
    /// Magnitude above which an entry outside the model pattern is a violation.
    pub sparsity: f64,
    /// Slack allowed outside `[0, 1]` for the binary entropy argument.
    pub entropy_slack: f64,
    /// Norm deviation allowed for state vectors.
    pub state_norm: f64,
}

pub const TOL: Tolerances = Tolerances {
    hermitian_input: 1e-10,
    eigen_clamp: 1e-12,
    jacobi_off_diag: 1e-14,
    density: 1e-12,
    sparsity: 1e-12,
    entropy_slack: 1e-12,
    state_norm: 1e-12,
};

/// Largest row or column count any matrix constructor accepts. A truncated
/// space larger than this means the photon cutoff was misconfigured.
pub const MAX_DIM: usize = 8192;

/// Cap on Jacobi sweeps; convergence is quadratic so this is never reached
/// for well-formed input.
pub const MAX_JACOBI_SWEEPS: usize = 100;
