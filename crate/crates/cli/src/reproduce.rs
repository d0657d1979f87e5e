//! Entanglement-of-formation curves for Fock fields `n = 0, 10, 100` (fig2)
//! and thermal fields `⟨n⟩ = 0.1, 1, 10` (fig3).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use jcmaser_core::field::DEFAULT_TAIL_EPSILON;
use jcmaser_core::{fock_distribution, thermal_distribution, PhotonDistribution};
use rayon::prelude::*;

use crate::config::{DEFAULT_GT_MAX, DEFAULT_STEPS, FIG2_PHOTON_NUMBERS, FIG3_MEAN_PHOTONS};
use crate::error::CliError;
use crate::format::csv_line;
use crate::sweep::{evaluate, gt_grid};

/// One gt column plus one E_F column per field.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureData {
    pub name: &'static str,
    pub labels: Vec<String>,
    pub gt: Vec<f64>,
    pub eof: Vec<Vec<f64>>,
    /// Legend text for each curve in the plot script.
    pub titles: Vec<String>,
}

impl FigureData {
    pub fn header(&self) -> String {
        let mut h = String::from("gt");
        for label in &self.labels {
            h.push(',');
            h.push_str(label);
        }
        h
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header();
        out.push('\n');
        let mut row = Vec::with_capacity(self.eof.len() + 1);
        for (i, &gt) in self.gt.iter().enumerate() {
            row.clear();
            row.push(gt);
            row.extend(self.eof.iter().map(|col| col[i]));
            out.push_str(&csv_line(&row));
        }
        out
    }

    /// gnuplot script drawing every curve from the CSV next to it:
    /// solid, dotted, then dashed lines.
    pub fn plot_script(&self) -> String {
        let csv = format!("{}.csv", self.name);
        let mut s = String::new();
        let _ = writeln!(s, "# Entanglement of formation versus gt; run with `gnuplot {}.gp`", self.name);
        let _ = writeln!(s, "set datafile separator ','");
        let _ = writeln!(s, "set terminal pngcairo size 900,600");
        let _ = writeln!(s, "set output '{}.png'", self.name);
        let _ = writeln!(s, "set xlabel 'gt'");
        let _ = writeln!(s, "set ylabel 'E_F'");
        let _ = writeln!(s, "set xrange [{}:{}]", self.gt[0], self.gt[self.gt.len() - 1]);
        let _ = writeln!(s, "set yrange [0:*]");
        let dash = [1, 3, 2];
        let curves: Vec<String> = self
            .titles
            .iter()
            .enumerate()
            .map(|(k, title)| {
                let src = if k == 0 { format!("'{csv}'") } else { "''".to_string() };
                format!(
                    "{src} using 1:{} skip 1 with lines dt {} lw 2 title '{title}'",
                    k + 2,
                    dash[k % dash.len()]
                )
            })
            .collect();
        let _ = writeln!(s, "plot {}", curves.join(", \\\n     "));
        s
    }
}

fn curves(
    name: &'static str,
    fields: &[(String, String, PhotonDistribution)],
    steps: usize,
) -> Result<FigureData, CliError> {
    let gt = gt_grid(0.0, DEFAULT_GT_MAX, steps);
    let eof = fields
        .iter()
        .map(|(_, _, d)| {
            gt.par_iter()
                .map(|&x| evaluate(d, x).map(|r| r.eof))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FigureData {
        name,
        labels: fields.iter().map(|(l, _, _)| l.clone()).collect(),
        titles: fields.iter().map(|(_, t, _)| t.clone()).collect(),
        gt,
        eof,
    })
}

/// Fock fields `n = 0, 10, 100` over `gt ∈ [0, 2π]`.
pub fn fig2_data(steps: usize) -> Result<FigureData, CliError> {
    let fields: Vec<_> = FIG2_PHOTON_NUMBERS
        .iter()
        .map(|&m| (format!("eof_n{m}"), format!("n = {m}"), fock_distribution(m)))
        .collect();
    curves("fig2", &fields, steps)
}

/// Thermal fields `⟨n⟩ = 0.1, 1, 10` over `gt ∈ [0, 2π]`.
pub fn fig3_data(steps: usize, tail_epsilon: f64) -> Result<FigureData, CliError> {
    let fields = FIG3_MEAN_PHOTONS
        .iter()
        .map(|&nbar| {
            Ok((
                format!("eof_nbar{nbar}"),
                format!("<n> = {nbar}"),
                thermal_distribution(nbar, tail_epsilon)?,
            ))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    curves("fig3", &fields, steps)
}

/// Writes `<name>.csv` and `<name>.gp` into `dir`, creating it if needed.
pub fn write_figure(dir: &Path, fig: &FigureData) -> Result<(PathBuf, PathBuf), CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let csv = dir.join(format!("{}.csv", fig.name));
    let script = dir.join(format!("{}.gp", fig.name));
    fs::write(&csv, fig.to_csv()).map_err(|e| CliError::io(&csv, e))?;
    fs::write(&script, fig.plot_script()).map_err(|e| CliError::io(&script, e))?;
    Ok((csv, script))
}

pub fn reproduce_fig2(dir: &Path) -> Result<(PathBuf, PathBuf), CliError> {
    write_figure(dir, &fig2_data(DEFAULT_STEPS)?)
}

pub fn reproduce_fig3(dir: &Path) -> Result<(PathBuf, PathBuf), CliError> {
    write_figure(dir, &fig3_data(DEFAULT_STEPS, DEFAULT_TAIL_EPSILON)?)
}
