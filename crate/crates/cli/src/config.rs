//! Sweep configuration: built-in defaults, an optional TOML key-value file,
//! and command-line flags, applied in that order.

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use jcmaser_core::field::DEFAULT_TAIL_EPSILON;
use jcmaser_core::{fock_distribution, thermal_distribution, FieldKind, PhotonDistribution, RabiAngle};
use serde::Deserialize;

use crate::error::CliError;

pub const DEFAULT_GT_MAX: f64 = TAU;
pub const DEFAULT_STEPS: usize = 1000;
pub const FIG2_PHOTON_NUMBERS: [usize; 3] = [0, 10, 100];
pub const FIG3_MEAN_PHOTONS: [f64; 3] = [0.1, 1.0, 10.0];

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub field_kind: FieldKind,
    /// `m` for a Fock field, `⟨n⟩` for a thermal one.
    pub field_param: f64,
    pub gt_min: f64,
    pub gt_max: f64,
    pub steps: usize,
    pub tail_epsilon: f64,
    pub verify: bool,
    pub output_path: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            field_kind: FieldKind::Fock,
            field_param: 0.0,
            gt_min: 0.0,
            gt_max: DEFAULT_GT_MAX,
            steps: DEFAULT_STEPS,
            tail_epsilon: DEFAULT_TAIL_EPSILON,
            verify: false,
            output_path: None,
        }
    }
}

/// Optional settings from one source. Keys in the config file use the same
/// names as the fields.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepOverrides {
    pub field: Option<String>,
    pub param: Option<f64>,
    pub gt_min: Option<f64>,
    pub gt_max: Option<f64>,
    pub steps: Option<usize>,
    pub tail_eps: Option<f64>,
    pub verify: Option<bool>,
    pub out: Option<PathBuf>,
}

pub fn parse_field_kind(s: &str) -> Result<FieldKind, CliError> {
    match s {
        "fock" => Ok(FieldKind::Fock),
        "thermal" => Ok(FieldKind::Thermal),
        other => Err(CliError::Usage(format!(
            "unknown field kind '{other}' (expected 'fock' or 'thermal')"
        ))),
    }
}

impl SweepOverrides {
    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::from_toml(&text).map_err(|message| CliError::Config {
            path: path.to_path_buf(),
            message,
        })
    }

    pub fn from_toml(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.message().to_string())
    }

    pub fn apply(&self, cfg: &mut SweepConfig) -> Result<(), CliError> {
        if let Some(field) = &self.field {
            cfg.field_kind = parse_field_kind(field)?;
        }
        if let Some(v) = self.param {
            cfg.field_param = v;
        }
        if let Some(v) = self.gt_min {
            cfg.gt_min = v;
        }
        if let Some(v) = self.gt_max {
            cfg.gt_max = v;
        }
        if let Some(v) = self.steps {
            cfg.steps = v;
        }
        if let Some(v) = self.tail_eps {
            cfg.tail_epsilon = v;
        }
        if let Some(v) = self.verify {
            cfg.verify = v;
        }
        if let Some(v) = &self.out {
            cfg.output_path = Some(v.clone());
        }
        Ok(())
    }
}

impl SweepConfig {
    /// Defaults, then each override source in order.
    pub fn resolve(sources: &[&SweepOverrides]) -> Result<Self, CliError> {
        let mut cfg = Self::default();
        for src in sources {
            src.apply(&mut cfg)?;
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        RabiAngle::new(self.gt_min)?;
        RabiAngle::new(self.gt_max)?;
        if self.gt_min >= self.gt_max {
            return Err(CliError::Usage(format!(
                "gt-min ({}) must be below gt-max ({})",
                self.gt_min, self.gt_max
            )));
        }
        if self.steps < 2 {
            return Err(CliError::Usage(format!("steps must be at least 2, got {}", self.steps)));
        }
        self.distribution().map(|_| ())
    }

    pub fn distribution(&self) -> Result<PhotonDistribution, CliError> {
        match self.field_kind {
            FieldKind::Fock => {
                let m = self.field_param;
                if !(m >= 0.0 && m.fract() == 0.0 && m <= u32::MAX as f64) {
                    return Err(CliError::Usage(format!(
                        "a Fock field needs a nonnegative integer photon number, got {m}"
                    )));
                }
                Ok(fock_distribution(m as usize))
            }
            FieldKind::Thermal => Ok(thermal_distribution(self.field_param, self.tail_epsilon)?),
        }
    }

    /// TOML rendering accepted back by `--config`.
    pub fn to_toml(&self) -> String {
        let kind = match self.field_kind {
            FieldKind::Fock => "fock",
            FieldKind::Thermal => "thermal",
        };
        let mut s = String::new();
        let _ = writeln!(s, "field = \"{kind}\"");
        let _ = writeln!(s, "param = {:?}", self.field_param);
        let _ = writeln!(s, "gt_min = {:?}", self.gt_min);
        let _ = writeln!(s, "gt_max = {:?}", self.gt_max);
        let _ = writeln!(s, "steps = {}", self.steps);
        let _ = writeln!(s, "tail_eps = {:?}", self.tail_epsilon);
        let _ = writeln!(s, "verify = {}", self.verify);
        if let Some(out) = &self.output_path {
            let _ = writeln!(s, "out = {:?}", out.display().to_string());
        }
        s
    }
}
