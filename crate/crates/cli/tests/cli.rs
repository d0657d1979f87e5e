use std::fs;
use std::process::{Command, Output};

use jcmaser::fig3_data;
use jcmaser_core::{oracle_two_atom_density, thermal_distribution, two_atom_density, RabiAngle};

fn jcmaser(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jcmaser"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn sweep_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep.csv");
    let res = jcmaser(&[
        "sweep", "--field", "thermal", "--param", "0.5", "--gt-min", "0", "--gt-max", "3",
        "--steps", "33", "--verify", "--out", out.to_str().unwrap(),
    ]);
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let text = fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("gt,concurrence,eof"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 33);
    assert_eq!(rows[32][0], 3.0);
    assert!(rows.iter().all(|r| (0.0..=1.0).contains(&r[1]) && (0.0..=1.0).contains(&r[2])));
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(jcmaser(&["sweep", "--steps", "1", "--out", "/dev/null"]).status.code(), Some(1));
    assert_eq!(jcmaser(&["sweep", "--field", "coherent"]).status.code(), Some(1));
    assert_eq!(jcmaser(&["sweep"]).status.code(), Some(1));
    assert_eq!(jcmaser(&[]).status.code(), Some(1));
    assert_eq!(jcmaser(&["--help"]).status.code(), Some(0));
}

#[test]
fn show_config_layers_file_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    fs::write(&cfg, "field = \"thermal\"\nparam = 2.0\nsteps = 64\n").unwrap();
    let res = jcmaser(&["--show-config", "--config", cfg.to_str().unwrap(), "sweep", "--steps", "10"]);
    assert!(res.status.success());
    let text = String::from_utf8(res.stdout).unwrap();
    assert!(text.contains("field = \"thermal\""));
    assert!(text.contains("param = 2.0"));
    assert!(text.contains("steps = 10"));

    let defaults = String::from_utf8(jcmaser(&["--show-config"]).stdout).unwrap();
    assert!(defaults.contains("steps = 1000") && defaults.contains("tail_eps = 1e-12"));

    fs::write(&cfg, "colour = 3\n").unwrap();
    let res = jcmaser(&["--config", cfg.to_str().unwrap(), "sweep", "--out", "/dev/null"]);
    assert_eq!(res.status.code(), Some(1));
}

#[test]
fn reproduce_fig3_writes_csv_and_script() {
    let dir = tempfile::tempdir().unwrap();
    let res = jcmaser(&["reproduce", "fig3", "--out", dir.path().to_str().unwrap()]);
    assert!(res.status.success());
    let csv = fs::read_to_string(dir.path().join("fig3.csv")).unwrap();
    assert!(csv.starts_with("gt,eof_nbar0.1,eof_nbar1,eof_nbar10\n"));
    assert_eq!(csv.lines().count(), 1001);
    assert!(dir.path().join("fig3.gp").exists());
}

#[test]
fn fig3_spot_checks_against_oracle() {
    let fig = fig3_data(1000, 1e-12).unwrap();
    for (col, nbar) in [0.1, 1.0, 10.0].into_iter().enumerate() {
        let d = thermal_distribution(nbar, 1e-12).unwrap();
        for k in 0..8 {
            let i = 60 + 117 * k;
            let gt = RabiAngle::new(fig.gt[i]).unwrap();
            let oracle = oracle_two_atom_density(&d, gt).unwrap();
            let analytic = two_atom_density(&d, gt).unwrap();
            assert!(oracle.matrix().max_abs_diff(analytic.matrix()) < 1e-10);
            let eof = jcmaser_core::entanglement_of_formation(&oracle).unwrap().eof;
            assert!((eof - fig.eof[col][i]).abs() < 1e-9, "nbar {nbar} gt {}", fig.gt[i]);
        }
    }
}
