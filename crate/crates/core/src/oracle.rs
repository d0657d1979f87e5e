//! Brute-force reference for the two-atom density.
//!
//! Everything here is built from the single-atom 2×2 Rabi rotations: the
//! one-atom propagator on `atom ⊗ field`, its embedding into
//! `atom1 ⊗ atom2 ⊗ field` by Kronecker product and basis permutation,
//! state-vector propagation, and an explicit partial trace over the field.
//! Nothing from [`crate::dynamics`] is used, so agreement between the two is
//! a genuine check.

use alloc::vec::Vec;


use crate::dynamics::{RabiAngle, TwoAtomDensity};
use crate::error::{Error, Result};
use crate::field::PhotonDistribution;
use crate::linalg::{
    partial_trace_pure, tensor_product, ComplexMatrix, ComplexVector, SparseMatrix, C64,
};
use crate::tol::TOL;

/// Two excited atoms raise the photon number by at most two; one more level
/// keeps the dangling `|e, top⟩` state out of reach.
pub const TRUNCATION_MARGIN: usize = 3;

const EXCITED: usize = 0;

/// Fock levels `0..field_dim` retained in the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedSpace {
    field_dim: usize,
}

impl TruncatedSpace {
    pub fn new(field_dim: usize) -> Result<Self> {
        if field_dim < TRUNCATION_MARGIN {
            return Err(Error::TruncationTooSmall {
                field_dim,
                required: TRUNCATION_MARGIN,
            });
        }
        Ok(Self { field_dim })
    }

    /// Smallest space that holds every level the distribution can reach.
    pub fn for_distribution(d: &PhotonDistribution) -> Self {
        Self {
            field_dim: d.n_max() + TRUNCATION_MARGIN,
        }
    }

    pub fn field_dim(self) -> usize {
        self.field_dim
    }

    /// Dimension of `atom1 ⊗ atom2 ⊗ field`.
    pub fn total_dim(self) -> usize {
        4 * self.field_dim
    }

    fn index(self, atom1: usize, atom2: usize, photons: usize) -> usize {
        (atom1 * 2 + atom2) * self.field_dim + photons
    }
}

/// Which atom crosses the cavity first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PassageOrder {
    #[default]
    AtomOneFirst,
    AtomTwoFirst,
}

/// Resonant Jaynes-Cummings propagator on `atom ⊗ field` (dimension
/// `2·field_dim`, atom ordered `{e, g}`).
///
/// Each pair `{|e,n⟩, |g,n+1⟩}` rotates by the angle `√(n+1)·gt`:
/// `|e,n⟩ → cos|e,n⟩ + sin|g,n+1⟩`, `|g,n+1⟩ → −sin|e,n⟩ + cos|g,n+1⟩`.
/// `|g,0⟩` is stationary, and so is `|e, field_dim−1⟩`, whose partner lies
/// outside the space.
pub fn jc_propagator(field_dim: usize, gt: RabiAngle) -> Result<ComplexMatrix> {
    if field_dim < 2 {
        return Err(Error::TruncationTooSmall {
            field_dim,
            required: 2,
        });
    }
    let f = field_dim;
    let excited = |n: usize| n;
    let ground = |n: usize| f + n;
    let mut u = ComplexMatrix::zeros(2 * f, 2 * f);
    u[(ground(0), ground(0))] = C64::new(1.0, 0.0);
    u[(excited(f - 1), excited(f - 1))] = C64::new(1.0, 0.0);
    for n in 0..f - 1 {
        let angle = ((n + 1) as f64).sqrt() * gt.value();
        let (s, c) = angle.sin_cos();
        let (e, g) = (excited(n), ground(n + 1));
        u[(e, e)] = C64::new(c, 0.0);
        u[(g, e)] = C64::new(s, 0.0);
        u[(e, g)] = C64::new(-s, 0.0);
        u[(g, g)] = C64::new(c, 0.0);
    }
    Ok(u)
}

/// One-atom propagators embedded in the full three-party space.
struct EmbeddedPropagators {
    space: TruncatedSpace,
    atom1: SparseMatrix,
    atom2: SparseMatrix,
}

impl EmbeddedPropagators {
    fn new(space: TruncatedSpace, gt: RabiAngle) -> Result<Self> {
        let u = jc_propagator(space.field_dim, gt)?;
        // atom1 is the spectator: I ⊗ U on (atom1, atom2 ⊗ field).
        let on_atom2 = tensor_product(&ComplexMatrix::identity(2), &u)?;
        // Swapping the two atom labels moves U onto atom1.
        let swap: Vec<usize> = (0..space.total_dim())
            .map(|i| {
                let photons = i % space.field_dim;
                let atoms = i / space.field_dim;
                space.index(atoms % 2, atoms / 2, photons)
            })
            .collect();
        let on_atom1 = on_atom2.permute_basis(&swap)?;
        Ok(Self {
            space,
            atom1: SparseMatrix::from_dense(&on_atom1),
            atom2: SparseMatrix::from_dense(&on_atom2),
        })
    }

    /// Fails if the atom about to interact could reach the truncated edge.
    fn check_dangling(&self, psi: &ComplexVector, atom: usize) -> Result<()> {
        let top = self.space.field_dim - 1;
        for other in 0..2 {
            let idx = if atom == 1 {
                self.space.index(EXCITED, other, top)
            } else {
                self.space.index(other, EXCITED, top)
            };
            let amplitude = psi[idx].norm();
            if amplitude != 0.0 {
                return Err(Error::TruncationLeak {
                    level: top,
                    amplitude,
                });
            }
        }
        Ok(())
    }

    fn pass(&self, psi: ComplexVector, atom: usize) -> Result<ComplexVector> {
        self.check_dangling(&psi, atom)?;
        if atom == 1 {
            self.atom1.mul_vec(&psi)
        } else {
            self.atom2.mul_vec(&psi)
        }
    }

    fn reduced_density(&self, photons: usize, order: PassageOrder) -> Result<ComplexMatrix> {
        let space = self.space;
        let mut psi = ComplexVector::basis(
            space.total_dim(),
            space.index(EXCITED, EXCITED, photons),
        )?;
        let sequence = match order {
            PassageOrder::AtomOneFirst => [1, 2],
            PassageOrder::AtomTwoFirst => [2, 1],
        };
        for atom in sequence {
            psi = self.pass(psi, atom)?;
        }
        if (psi.norm() - 1.0).abs() > TOL.state_norm {
            return Err(Error::InvalidDensity("propagated state lost normalization"));
        }
        partial_trace_pure(&psi, 4, space.field_dim)
    }
}

/// Reference two-atom density in the smallest adequate truncated space,
/// with atom 1 crossing first.
pub fn oracle_two_atom_density(d: &PhotonDistribution, gt: RabiAngle) -> Result<TwoAtomDensity> {
    oracle_two_atom_density_in(TruncatedSpace::for_distribution(d), d, gt, PassageOrder::AtomOneFirst)
}

/// Reference two-atom density in an explicit truncated space.
///
/// Per photon number the field is started in `|e1, e2, n⟩`, propagated
/// through both atoms in `order`, and traced out. The reduced states are
/// accumulated in ascending `n` with weights `P_n` and renormalised by `Σ P_n`.
pub fn oracle_two_atom_density_in(
    space: TruncatedSpace,
    d: &PhotonDistribution,
    gt: RabiAngle,
    order: PassageOrder,
) -> Result<TwoAtomDensity> {
    let required = d.n_max() + TRUNCATION_MARGIN;
    if space.field_dim < required {
        return Err(Error::TruncationTooSmall {
            field_dim: space.field_dim,
            required,
        });
    }
    let total = d.total_weight();
    if total.is_nan() || total <= 0.0 {
        return Err(Error::EmptyDistribution);
    }
    let props = EmbeddedPropagators::new(space, gt)?;
    let mut acc = ComplexMatrix::zeros(4, 4);
    for (n, p) in d.support() {
        acc.add_scaled(p, &props.reduced_density(n, order)?)?;
    }
    TwoAtomDensity::new(acc.scale(1.0 / total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::fock_distribution;
    use core::f64::consts::FRAC_PI_2;

    fn gt(x: f64) -> RabiAngle {
        RabiAngle::new(x).unwrap()
    }

    #[test]
    fn propagator_at_zero_is_identity() {
        for f in 2..6 {
            assert_eq!(jc_propagator(f, gt(0.0)).unwrap(), ComplexMatrix::identity(2 * f));
        }
    }

    #[test]
    fn full_rabi_swap() {
        let u = jc_propagator(2, gt(FRAC_PI_2)).unwrap();
        let out = u.mul_vec(&ComplexVector::basis(4, 0).unwrap()).unwrap();
        // |e,0⟩ → |g,1⟩ (index 2 + 1)
        assert!((out[3] - C64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(out[0].norm() < 1e-16);
    }

    #[test]
    fn propagator_is_unitary() {
        for &x in &[0.3, 1.7, 4.2, 11.9] {
            let u = jc_propagator(9, gt(x)).unwrap();
            let uu = &u.adjoint() * &u;
            assert!(uu.max_abs_diff(&ComplexMatrix::identity(18)) < 1e-12);
        }
        assert!(jc_propagator(1, gt(1.0)).is_err());
    }

    #[test]
    fn vacuum_identity_evolution() {
        let rho = oracle_two_atom_density(&fock_distribution(0), gt(0.0)).unwrap();
        assert_eq!(rho.matrix(), &ComplexMatrix::from_diagonal(&[1.0, 0.0, 0.0, 0.0]));
    }

    #[test]
    fn truncation_checks() {
        let d = fock_distribution(4);
        let small = TruncatedSpace::new(6).unwrap();
        assert!(matches!(
            oracle_two_atom_density_in(small, &d, gt(1.0), PassageOrder::AtomOneFirst),
            Err(Error::TruncationTooSmall { field_dim: 6, required: 7 })
        ));
        assert!(TruncatedSpace::new(2).is_err());
        let roomy = TruncatedSpace::new(12).unwrap();
        let a = oracle_two_atom_density_in(roomy, &d, gt(1.0), PassageOrder::AtomOneFirst).unwrap();
        let b = oracle_two_atom_density(&d, gt(1.0)).unwrap();
        assert!(a.matrix().max_abs_diff(b.matrix()) < 1e-15);
    }

    #[test]
    fn dangling_level_leak_is_detected() {
        // Two levels too few: the first atom already reaches |e, top⟩ via the
        // initial state itself.
        let space = TruncatedSpace { field_dim: 3 };
        let props = EmbeddedPropagators::new(space, gt(1.0)).unwrap();
        assert!(matches!(
            props.reduced_density(2, PassageOrder::AtomOneFirst),
            Err(Error::TruncationLeak { level: 2, .. })
        ));
    }

    #[test]
    fn passage_order_matters() {
        let d = fock_distribution(0);
        let space = TruncatedSpace::for_distribution(&d);
        let forward = oracle_two_atom_density_in(space, &d, gt(1.0), PassageOrder::AtomOneFirst).unwrap();
        let reverse = oracle_two_atom_density_in(space, &d, gt(1.0), PassageOrder::AtomTwoFirst).unwrap();
        assert!(forward.matrix().max_abs_diff(reverse.matrix()) > 1e-3);
        // Reversing the order is the same as relabelling the atoms.
        assert!(forward.swap_atoms().matrix().max_abs_diff(reverse.matrix()) < 1e-15);
    }
}
