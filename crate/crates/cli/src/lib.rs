//! Sweeps of two-atom entanglement over the Rabi angle, CSV output and
//! figure reproduction on top of [`jcmaser_core`].

pub mod config;
pub mod error;
pub mod format;
pub mod reproduce;
pub mod sweep;

pub use config::{SweepConfig, SweepOverrides};
pub use error::CliError;
pub use reproduce::{fig2_data, fig3_data, write_figure, FigureData};
pub use sweep::{gt_grid, run_sweep, write_sweep_csv, SweepRow};
