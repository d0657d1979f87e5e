use core::f64::consts::PI;

use jcmaser_core::{
    concurrence_xstate, entanglement_of_formation, fock_distribution, fock_two_atom_density,
    oracle_two_atom_density, thermal_distribution, two_atom_coefficients, two_atom_density,
    RabiAngle,
};

fn grid(points: usize) -> impl Iterator<Item = RabiAngle> {
    (0..points).map(move |k| RabiAngle::new(2.0 * PI * k as f64 / (points - 1) as f64).unwrap())
}

#[test]
fn fock_fields_match_oracle() {
    for m in [0usize, 1, 5, 10] {
        let d = fock_distribution(m);
        for gt in grid(64) {
            let analytic = fock_two_atom_density(m, gt);
            let oracle = oracle_two_atom_density(&d, gt).unwrap();
            let diff = analytic.matrix().max_abs_diff(oracle.matrix());
            assert!(diff < 1e-12, "m={m} gt={} diff={diff:e}", gt.value());
        }
    }
}

#[test]
fn reference_points_match_oracle() {
    let gt = RabiAngle::new(2.0).unwrap();
    for m in [0usize, 10] {
        let oracle = oracle_two_atom_density(&fock_distribution(m), gt).unwrap();
        assert!(fock_two_atom_density(m, gt).matrix().max_abs_diff(oracle.matrix()) < 1e-12);
    }

    let d = thermal_distribution(1.0, 1e-12).unwrap();
    let gt = RabiAngle::new(1.0).unwrap();
    let oracle = oracle_two_atom_density(&d, gt).unwrap();
    let analytic = two_atom_density(&d, gt).unwrap();
    assert!(analytic.matrix().max_abs_diff(oracle.matrix()) < 1e-10);
}

#[test]
fn oracle_amplitudes_reproduce_coefficients() {
    // The oracle density's diagonal carries α_i² and its coherence α2·α3.
    let gt = RabiAngle::new(2.0).unwrap();
    let oracle = oracle_two_atom_density(&fock_distribution(0), gt).unwrap();
    let a = two_atom_coefficients(0, gt).alpha;
    let diag = oracle.diagonal();
    for i in 0..4 {
        assert!((diag[i] - a[i] * a[i]).abs() < 1e-12);
    }
    assert!((oracle.coherence().re - a[1] * a[2]).abs() < 1e-12);
}

#[test]
fn oracle_pipeline_reference_eof() {
    let gt = RabiAngle::new(2.0).unwrap();
    let oracle = oracle_two_atom_density(&fock_distribution(0), gt).unwrap();
    let r = entanglement_of_formation(&oracle).unwrap();
    assert!((r.concurrence - 0.557_664_270_19).abs() < 1e-10);
    assert!((concurrence_xstate(&oracle).unwrap() - r.concurrence).abs() < 1e-10);
    assert!((r.eof - 0.419_442_324_30).abs() < 1e-10);
}
