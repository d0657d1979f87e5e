use std::fs;
use std::path::Path;

use jcmaser_core::{
    entanglement_of_formation, oracle_two_atom_density, two_atom_density, FieldKind,
    PhotonDistribution, RabiAngle,
};
use rayon::prelude::*;

use crate::config::SweepConfig;
use crate::error::CliError;
use crate::format::csv_line;

/// Every `VERIFY_STRIDE`-th grid point is checked against the oracle.
pub const VERIFY_STRIDE: usize = 16;
pub const FOCK_ORACLE_TOL: f64 = 1e-12;
pub const THERMAL_ORACLE_TOL: f64 = 1e-10;

pub const SWEEP_HEADER: &str = "gt,concurrence,eof";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub gt: f64,
    pub concurrence: f64,
    pub eof: f64,
}

/// `steps` evenly spaced angles from `min` to `max`, both included.
pub fn gt_grid(min: f64, max: f64, steps: usize) -> Vec<f64> {
    assert!(steps >= 2, "a grid needs two endpoints");
    let last = steps - 1;
    (0..steps)
        .map(|i| {
            if i == last {
                max
            } else {
                min + (max - min) * i as f64 / last as f64
            }
        })
        .collect()
}

pub fn evaluate(d: &PhotonDistribution, gt: f64) -> Result<SweepRow, CliError> {
    let angle = RabiAngle::new(gt)?;
    let r = entanglement_of_formation(&two_atom_density(d, angle)?)?;
    Ok(SweepRow {
        gt,
        concurrence: r.concurrence,
        eof: r.eof,
    })
}

/// Compares the analytic density with the oracle at one angle.
pub fn verify_point(d: &PhotonDistribution, gt: f64) -> Result<(), CliError> {
    let angle = RabiAngle::new(gt)?;
    let analytic = two_atom_density(d, angle)?;
    let oracle = oracle_two_atom_density(d, angle)?;
    let diff = analytic.matrix().max_abs_diff(oracle.matrix());
    let tol = match d.kind() {
        FieldKind::Fock => FOCK_ORACLE_TOL,
        FieldKind::Thermal => THERMAL_ORACLE_TOL,
    };
    if diff > tol {
        return Err(CliError::OracleMismatch { gt, diff, tol });
    }
    Ok(())
}

/// Concurrence and entanglement of formation over the configured gt grid,
/// in ascending gt.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>, CliError> {
    cfg.validate()?;
    let d = cfg.distribution()?;
    let grid = gt_grid(cfg.gt_min, cfg.gt_max, cfg.steps);
    if cfg.verify {
        grid.par_iter()
            .step_by(VERIFY_STRIDE)
            .try_for_each(|&gt| verify_point(&d, gt))?;
    }
    grid.par_iter().map(|&gt| evaluate(&d, gt)).collect()
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(48 * (rows.len() + 1));
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&csv_line(&[r.gt, r.concurrence, r.eof]));
    }
    out
}

pub fn write_sweep_csv(path: &Path, rows: &[SweepRow]) -> Result<(), CliError> {
    fs::write(path, sweep_csv(rows)).map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::TAU;

    #[test]
    fn grid_includes_endpoints() {
        let g = gt_grid(0.0, TAU, 9);
        assert_eq!(g.len(), 9);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[8], TAU);
        assert_eq!(gt_grid(0.0, 4.0, 5), vec![0.0, 1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn vacuum_sweep_examples() {
        let cfg = SweepConfig {
            steps: 9,
            ..Default::default()
        };
        let rows = run_sweep(&cfg).unwrap();
        assert_eq!(rows.len(), 9);
        assert_eq!(rows[0].eof, 0.0);

        let cfg = SweepConfig {
            gt_max: 4.0,
            steps: 5,
            verify: true,
            ..Default::default()
        };
        let rows = run_sweep(&cfg).unwrap();
        assert_eq!(rows[2].gt, 2.0);
        assert!((rows[2].eof - 0.4194).abs() < 5e-5);
    }

    #[test]
    fn thermal_vacuum_sweep_matches_fock() {
        let fock = SweepConfig {
            steps: 128,
            ..Default::default()
        };
        let thermal = SweepConfig {
            field_kind: FieldKind::Thermal,
            ..fock.clone()
        };
        for (a, b) in run_sweep(&fock).unwrap().iter().zip(run_sweep(&thermal).unwrap()) {
            assert!((a.eof - b.eof).abs() < 1e-12 && (a.concurrence - b.concurrence).abs() < 1e-12);
        }
    }

    #[test]
    fn verification_runs_on_thermal_fields() {
        let cfg = SweepConfig {
            field_kind: FieldKind::Thermal,
            field_param: 2.0,
            steps: 40,
            verify: true,
            ..Default::default()
        };
        assert_eq!(run_sweep(&cfg).unwrap().len(), 40);
    }

    #[test]
    fn csv_has_header_and_rows() {
        let rows = [SweepRow {
            gt: 0.0,
            concurrence: 0.0,
            eof: 0.0,
        }];
        assert_eq!(
            sweep_csv(&rows),
            "gt,concurrence,eof\n0.00000000000,0.00000000000,0.00000000000\n"
        );
    }

    #[test]
    fn mismatch_maps_to_oracle_exit_code() {
        let e = CliError::OracleMismatch {
            gt: 1.0,
            diff: 1.0,
            tol: 1e-12,
        };
        assert_eq!(e.exit_code(), crate::error::EXIT_ORACLE);
        assert_eq!(CliError::Usage(String::new()).exit_code(), crate::error::EXIT_USAGE);
    }
}
