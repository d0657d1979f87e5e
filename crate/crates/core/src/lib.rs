//! Entanglement between two two-level atoms that cross a lossless single-mode
//! cavity one after the other, each interacting with the field through the
//! resonant Jaynes-Cummings Hamiltonian.
//!
//! The crate is `no_std` and only needs `alloc`. It is organised bottom-up:
//!
//! * [`linalg`]: a small dense complex matrix type, Kronecker products,
//!   partial traces and a cyclic Jacobi solver for Hermitian matrices.
//! * [`field`]: Fock and thermal photon-number distributions.
//! * [`dynamics`]: closed-form two-atom amplitudes and the reduced two-atom
//!   density matrix for an arbitrary photon-number distribution.
//! * [`entanglement`]: Wootters concurrence and entanglement of formation.
//! * [`oracle`]: brute-force propagation in a truncated atom-atom-field space,
//!   used to check [`dynamics`] independently.
//!
//! Basis conventions are fixed globally: the tensor order is
//! `atom1 ⊗ atom2 ⊗ field`, and a single atom is ordered `{|e⟩, |g⟩}`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dynamics;
pub mod entanglement;
pub mod error;
pub mod field;
pub mod linalg;
pub mod oracle;
pub mod tol;

pub use dynamics::{
    fock_two_atom_density, jc_amplitudes, two_atom_coefficients, two_atom_density, RabiAngle,
    TwoAtomCoefficients, TwoAtomDensity,
};
pub use entanglement::{
    binary_entropy, concurrence_general, concurrence_xstate, entanglement_of_formation,
    eof_from_concurrence, spin_flip, Concurrence, EntanglementResult,
};
pub use error::{Error, Result};
pub use field::{
    fock_distribution, mean_photon, nbar_from_temperature, thermal_distribution,
    variance_metric, FieldKind, PhotonDistribution,
};
pub use linalg::{ComplexMatrix, ComplexVector, C64};
pub use oracle::{jc_propagator, oracle_two_atom_density, PassageOrder, TruncatedSpace};
