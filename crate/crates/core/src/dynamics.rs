//! Closed-form evolution of two excited atoms crossing the cavity in turn.
//!
//! An excited atom entering a field with `n` photons leaves the pair
//! `{|e,n⟩, |g,n+1⟩}` in `cos(√(n+1)·gt)|e,n⟩ + sin(√(n+1)·gt)|g,n+1⟩`. The
//! second atom then meets either `n` or `n+1` photons, so the joint state is
//!
//! ```text
//! α1|e1,e2,n⟩ + α2|e1,g2,n+1⟩ + α3|g1,e2,n+1⟩ + α4|g1,g2,n+2⟩
//! ```
//!
//! Tracing the field leaves a two-atom state whose only off-diagonal entry is
//! the real coherence `α2·α3` between `|e1g2⟩` and `|g1e2⟩`. A field with
//! photon statistics `P_n` is treated as the incoherent mixture `Σ P_n |n⟩⟨n|`.


use crate::error::{Error, Result};
use crate::field::{fock_distribution, PhotonDistribution};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix, C64};
use crate::tol::TOL;

/// Dimensionless Rabi angle `gt`, the coupling times the interaction time.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RabiAngle(f64);

impl RabiAngle {
    pub fn new(gt: f64) -> Result<Self> {
        if gt.is_finite() && gt >= 0.0 {
            Ok(Self(gt))
        } else {
            Err(Error::InvalidRabiAngle(gt))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for RabiAngle {
    type Error = Error;

    fn try_from(gt: f64) -> Result<Self> {
        Self::new(gt)
    }
}

/// Amplitudes `(cos(√(n+1)·gt), sin(√(n+1)·gt))` of `|e,n⟩` and `|g,n+1⟩`
/// after one excited atom crosses the Fock field `|n⟩`.
pub fn jc_amplitudes(n: usize, gt: RabiAngle) -> (f64, f64) {
    let phase = ((n + 1) as f64).sqrt() * gt.value();
    (phase.cos(), phase.sin())
}

/// The four real amplitudes of the atom-atom-field state for photon number `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoAtomCoefficients {
    pub n: usize,
    /// `[α1, α2, α3, α4]` on `|e1e2,n⟩, |e1g2,n+1⟩, |g1e2,n+1⟩, |g1g2,n+2⟩`.
    pub alpha: [f64; 4],
}

impl TwoAtomCoefficients {
    pub fn alpha1(&self) -> f64 {
        self.alpha[0]
    }
    pub fn alpha2(&self) -> f64 {
        self.alpha[1]
    }
    pub fn alpha3(&self) -> f64 {
        self.alpha[2]
    }
    pub fn alpha4(&self) -> f64 {
        self.alpha[3]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.alpha.iter().map(|a| a * a).sum()
    }
}

pub fn two_atom_coefficients(n: usize, gt: RabiAngle) -> TwoAtomCoefficients {
    let (c1, s1) = jc_amplitudes(n, gt);
    let (c2, s2) = jc_amplitudes(n + 1, gt);
    TwoAtomCoefficients {
        n,
        alpha: [c1 * c1, c1 * s1, c2 * s1, s1 * s2],
    }
}

/// Reduced state of the two atoms in the basis `{|e1e2⟩, |e1g2⟩, |g1e2⟩, |g1g2⟩}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoAtomDensity {
    matrix: ComplexMatrix,
}

impl TwoAtomDensity {
    /// Validates a 4×4 matrix as a density matrix: Hermitian, unit trace and
    /// positive semidefinite, each within `TOL.density`.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if matrix.rows() != 4 || matrix.cols() != 4 {
            return Err(Error::DimensionMismatch {
                op: "TwoAtomDensity",
                expected: 4,
                found: matrix.rows().max(matrix.cols()),
            });
        }
        if matrix.hermitian_deviation() > TOL.density {
            return Err(Error::InvalidDensity("not Hermitian"));
        }
        if (matrix.trace() - C64::new(1.0, 0.0)).norm() > TOL.density {
            return Err(Error::InvalidDensity("trace differs from 1"));
        }
        let smallest = hermitian_eigenvalues(&matrix)?[3];
        if smallest < -TOL.density {
            return Err(Error::InvalidDensity("negative eigenvalue"));
        }
        Ok(Self { matrix })
    }

    /// Density with the model's sparsity: real diagonal `diag` and real
    /// coherence `coherence` between `|e1g2⟩` and `|g1e2⟩`.
    pub(crate) fn from_model_entries(diag: [f64; 4], coherence: f64) -> Self {
        let mut m = ComplexMatrix::from_diagonal(&diag);
        m[(1, 2)] = C64::new(coherence, 0.0);
        m[(2, 1)] = C64::new(coherence, 0.0);
        Self { matrix: m }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.matrix[(i, j)]
    }

    pub fn diagonal(&self) -> [f64; 4] {
        core::array::from_fn(|i| self.matrix[(i, i)].re)
    }

    /// The `|e1g2⟩⟨g1e2|` coherence.
    pub fn coherence(&self) -> C64 {
        self.matrix[(1, 2)]
    }

    /// Checks that only the diagonal and the `(1,2)`/`(2,1)` entries are
    /// nonzero and that the coherence is real, within `tol`.
    pub fn check_model_sparsity(&self, tol: f64) -> Result<()> {
        for i in 0..4 {
            for j in 0..4 {
                let z = self.matrix[(i, j)];
                let allowed = i == j || (i, j) == (1, 2) || (i, j) == (2, 1);
                let magnitude = if allowed { z.im.abs() } else { z.norm() };
                if magnitude > tol {
                    return Err(Error::SparsityViolation {
                        row: i,
                        col: j,
                        magnitude,
                    });
                }
            }
        }
        Ok(())
    }

    /// Relabels atom 1 as atom 2 and vice versa.
    pub fn swap_atoms(&self) -> Self {
        Self {
            matrix: self
                .matrix
                .permute_basis(&[0, 2, 1, 3])
                .expect("4-element permutation"),
        }
    }
}

/// Two-atom density for the mixture `Σ P_n |n⟩⟨n|`.
///
/// Diagonal entries are `Σ P_n α_i(n)²`, the coherence is `Σ P_n α2(n)α3(n)`,
/// and everything is divided by `Σ P_n` so truncated distributions still give
/// a unit-trace state.
pub fn two_atom_density(d: &PhotonDistribution, gt: RabiAngle) -> Result<TwoAtomDensity> {
    let total = d.total_weight();
    if total.is_nan() || total <= 0.0 {
        return Err(Error::EmptyDistribution);
    }
    let mut diag = [0.0; 4];
    let mut coherence = 0.0;
    for (n, p) in d.support() {
        let a = two_atom_coefficients(n, gt).alpha;
        for (acc, x) in diag.iter_mut().zip(a) {
            *acc += p * x * x;
        }
        coherence += p * a[1] * a[2];
    }
    Ok(TwoAtomDensity::from_model_entries(
        diag.map(|x| x / total),
        coherence / total,
    ))
}

/// Two-atom density after crossing the Fock field `|m⟩`.
pub fn fock_two_atom_density(m: usize, gt: RabiAngle) -> TwoAtomDensity {
    two_atom_density(&fock_distribution(m), gt).expect("Fock distribution has unit mass")
}
