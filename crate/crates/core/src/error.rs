use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix of {rows}x{cols} exceeds the maximum dimension {max}")]
    DimensionOverflow { rows: usize, cols: usize, max: usize },
    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("matrix has a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("matrix is not Hermitian (max |h - h†| = {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("eigenvalue {value:e} is below the clamping tolerance")]
    NegativeEigenvalue { value: f64 },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("mean photon number must be finite and nonnegative, got {0}")]
    InvalidMeanPhoton(f64),
    #[error("tail epsilon must lie in (0, 1e-6], got {0}")]
    InvalidTailEpsilon(f64),
    #[error("variance metric is undefined for the vacuum (<n^2> = 0)")]
    VacuumVariance,
    #[error("hbar*omega/kT must be finite and positive, got {0}")]
    InvalidTemperatureRatio(f64),
    #[error("Rabi angle must be finite and nonnegative, got {0}")]
    InvalidRabiAngle(f64),
    #[error("photon distribution carries no probability mass")]
    EmptyDistribution,
    #[error("not a valid density matrix: {0}")]
    InvalidDensity(&'static str),
    #[error("entry ({row}, {col}) = {magnitude:e} lies outside the model sparsity pattern")]
    SparsityViolation {
        row: usize,
        col: usize,
        magnitude: f64,
    },
    #[error("binary entropy argument {0} is outside [0, 1]")]
    EntropyDomain(f64),
    #[error("field truncation of {field_dim} levels is below the required {required}")]
    TruncationTooSmall { field_dim: usize, required: usize },
    #[error("truncated level |e, {level}> was populated (amplitude {amplitude:e})")]
    TruncationLeak { level: usize, amplitude: f64 },
}
