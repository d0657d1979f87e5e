//! Two-qubit mixed-state entanglement: Wootters concurrence and the
//! entanglement of formation.


use crate::dynamics::TwoAtomDensity;
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, psd_sqrt, ComplexMatrix, C64};
use crate::tol::TOL;

/// Concurrence together with the spectrum `λ1 ≥ … ≥ λ4` of `ρ ρ̃`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Concurrence {
    pub value: f64,
    pub lambdas: [f64; 4],
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementResult {
    pub concurrence: f64,
    /// Entanglement of formation in ebits.
    pub eof: f64,
    pub lambdas: [f64; 4],
}

/// `σ_y ⊗ σ_y`, which is real: `-1` on the outer anti-diagonal, `+1` inside.
fn sigma_yy() -> ComplexMatrix {
    ComplexMatrix::from_real(
        4,
        4,
        &[
            0.0, 0.0, 0.0, -1.0, //
            0.0, 0.0, 1.0, 0.0, //
            0.0, 1.0, 0.0, 0.0, //
            -1.0, 0.0, 0.0, 0.0,
        ],
    )
    .expect("static 4x4")
}

fn flip(m: &ComplexMatrix) -> ComplexMatrix {
    let yy = sigma_yy();
    &(&yy * &m.conj()) * &yy
}

/// `ρ̃ = (σ_y ⊗ σ_y) ρ* (σ_y ⊗ σ_y)`.
pub fn spin_flip(rho: &TwoAtomDensity) -> ComplexMatrix {
    flip(rho.matrix())
}

/// Concurrence from the full spectrum of `ρ ρ̃`.
///
/// The `λ_i` are the eigenvalues of the Hermitian matrix `√ρ ρ̃ √ρ`, i.e. the
/// squared singular values of `A = √ρ √ρ̃` (with `√ρ̃` the spin flip of `√ρ`).
/// The singular values are read off the nonnegative half of the spectrum of
/// the Hermitian dilation `[[0, A], [A†, 0]]`, so `√λ_i` carry absolute
/// rather than square-root accuracy near zero.
pub fn concurrence_general(rho: &TwoAtomDensity) -> Result<Concurrence> {
    let root = psd_sqrt(rho.matrix())?;
    let a = &root * &flip(&root);
    let dilation = ComplexMatrix::from_fn(8, 8, |i, j| match (i < 4, j < 4) {
        (true, false) => a[(i, j - 4)],
        (false, true) => a[(j, i - 4)].conj(),
        _ => C64::new(0.0, 0.0),
    });
    let spectrum = hermitian_eigenvalues(&dilation)?;
    let mut sigma = [0.0; 4];
    for (s, &v) in sigma.iter_mut().zip(&spectrum) {
        if v < -TOL.eigen_clamp {
            return Err(Error::NegativeEigenvalue { value: v });
        }
        *s = v.max(0.0);
    }
    let value = (sigma[0] - sigma[1] - sigma[2] - sigma[3]).clamp(0.0, 1.0);
    Ok(Concurrence {
        value,
        lambdas: sigma.map(|s| s * s),
    })
}

/// Closed form `C = 2·max(0, |ρ23| − √(ρ11 ρ44))` for states with the model's
/// sparsity (diagonal plus a real `|e1g2⟩⟨g1e2|` coherence).
pub fn concurrence_xstate(rho: &TwoAtomDensity) -> Result<f64> {
    rho.check_model_sparsity(TOL.sparsity)?;
    let d = rho.diagonal();
    let corner = (d[0].max(0.0) * d[3].max(0.0)).sqrt();
    Ok((2.0 * (rho.coherence().norm() - corner)).clamp(0.0, 1.0))
}

/// Shannon binary entropy in bits, `h(0) = h(1) = 0`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(-TOL.entropy_slack..=1.0 + TOL.entropy_slack).contains(&x) {
        return Err(Error::EntropyDomain(x));
    }
    let x = x.clamp(0.0, 1.0);
    if x == 0.0 || x == 1.0 {
        return Ok(0.0);
    }
    let y = 1.0 - x;
    Ok(-x * x.log2() - y * y.log2())
}

/// `E_F = h((1 + √(1 − C²)) / 2)` for `C ∈ [0, 1]`.
pub fn eof_from_concurrence(c: f64) -> f64 {
    let c = c.clamp(0.0, 1.0);
    let x = 0.5 * (1.0 + (1.0 - c * c).sqrt());
    binary_entropy(x).expect("argument lies in [1/2, 1]")
}

pub fn entanglement_of_formation(rho: &TwoAtomDensity) -> Result<EntanglementResult> {
    let c = concurrence_general(rho)?;
    Ok(EntanglementResult {
        concurrence: c.value,
        eof: eof_from_concurrence(c.value),
        lambdas: c.lambdas,
    })
}
