//! Photon-number statistics of the cavity field.

use alloc::vec;
use alloc::vec::Vec;


use crate::error::{Error, Result};

/// Largest admissible tail cutoff for [`thermal_distribution`].
pub const MAX_TAIL_EPSILON: f64 = 1e-6;

/// Default tail cutoff used when none is given.
pub const DEFAULT_TAIL_EPSILON: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Fock,
    Thermal,
}

/// Probabilities `P_n` for `n = 0..weights.len()`, plus the mass cut off
/// beyond the last retained level.
#[derive(Debug, Clone, PartialEq)]
pub struct PhotonDistribution {
    weights: Vec<f64>,
    kind: FieldKind,
    nominal_mean: f64,
    tail_mass: f64,
}

impl PhotonDistribution {
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    /// The requested mean: `m` for a Fock field, `⟨n⟩` for a thermal one.
    pub fn nominal_mean(&self) -> f64 {
        self.nominal_mean
    }

    pub fn tail_mass(&self) -> f64 {
        self.tail_mass
    }

    /// Largest retained photon number.
    pub fn n_max(&self) -> usize {
        self.weights.len().saturating_sub(1)
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// `(n, P_n)` for every level with nonzero weight, ascending in `n`.
    pub fn support(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.weights
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, p)| p > 0.0)
    }

    #[cfg(test)]
    pub(crate) fn zero_mass() -> Self {
        Self {
            weights: vec![0.0; 3],
            kind: FieldKind::Thermal,
            nominal_mean: 0.0,
            tail_mass: 1.0,
        }
    }
}

/// Fock state `|m⟩`: `P_m = 1`, zero-padded below `m`.
pub fn fock_distribution(m: usize) -> PhotonDistribution {
    let mut weights = vec![0.0; m + 1];
    weights[m] = 1.0;
    PhotonDistribution {
        weights,
        kind: FieldKind::Fock,
        nominal_mean: m as f64,
        tail_mass: 0.0,
    }
}

/// Bose-Einstein statistics `P_n = nbar^n / (1 + nbar)^(n+1)`.
///
/// Levels are kept up to `N = ⌈ln ε / ln r⌉` with `r = nbar / (1 + nbar)`, the
/// smallest `N` with `r^N ≤ ε`. The discarded tail is `r^(N+1) < ε`, and the
/// missing mean `r^(N+1)·(N + 1 + nbar)` stays below `ε·(N + 1)` whenever
/// `nbar² ≤ N + 1`.
pub fn thermal_distribution(nbar: f64, tail_epsilon: f64) -> Result<PhotonDistribution> {
    if !nbar.is_finite() || nbar < 0.0 {
        return Err(Error::InvalidMeanPhoton(nbar));
    }
    if !(tail_epsilon > 0.0 && tail_epsilon <= MAX_TAIL_EPSILON) {
        return Err(Error::InvalidTailEpsilon(tail_epsilon));
    }
    if nbar == 0.0 {
        return Ok(PhotonDistribution {
            kind: FieldKind::Thermal,
            ..fock_distribution(0)
        });
    }

    let ratio = nbar / (1.0 + nbar);
    let decay = |n: usize| ratio.powi(n as i32);
    let mut n_max = (tail_epsilon.ln() / ratio.ln()).ceil().max(1.0) as usize;
    while decay(n_max) > tail_epsilon {
        n_max += 1;
    }
    while n_max > 1 && decay(n_max - 1) <= tail_epsilon {
        n_max -= 1;
    }

    let mut weights = Vec::with_capacity(n_max + 1);
    let mut p = 1.0 / (1.0 + nbar);
    for _ in 0..=n_max {
        weights.push(p);
        p *= ratio;
    }
    let tail_mass = decay(n_max + 1);
    debug_assert!((weights.iter().sum::<f64>() + tail_mass - 1.0).abs() < 1e-13);

    Ok(PhotonDistribution {
        weights,
        kind: FieldKind::Thermal,
        nominal_mean: nbar,
        tail_mass,
    })
}

/// `⟨n⟩ = Σ n P_n` over the retained levels.
pub fn mean_photon(d: &PhotonDistribution) -> f64 {
    d.support().map(|(n, p)| n as f64 * p).sum()
}

fn second_moment(d: &PhotonDistribution) -> f64 {
    d.support().map(|(n, p)| (n * n) as f64 * p).sum()
}

/// Noise metric `V = (⟨n²⟩ − ⟨n⟩) / ⟨n²⟩`.
///
/// Note this is not the Fano factor: `V = 1` for a coherent field and
/// `V = 1 − 1/m` for the Fock state `|m⟩`. It is undefined for the vacuum.
pub fn variance_metric(d: &PhotonDistribution) -> Result<f64> {
    let n2 = second_moment(d);
    if n2 == 0.0 {
        return Err(Error::VacuumVariance);
    }
    Ok(1.0 - mean_photon(d) / n2)
}

/// Thermal occupation `1 / (e^x − 1)` for `x = ħω / kT`.
pub fn nbar_from_temperature(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::InvalidTemperatureRatio(x));
    }
    Ok(1.0 / x.exp_m1())
}
