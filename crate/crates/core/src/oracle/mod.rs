//! Finite baths of N oscillators on an equidistant grid ωₙ = nΔ.
//!
//! The masses mₙ = (2/π) J(nΔ) Δ / (nΔ)³ discretise a continuous spectral
//! density. Coupling the free particle leaves one zero mode and moves the N
//! bath frequencies to the roots Ω of the secular equation
//!
//! ```text
//! Σₙ mₙωₙ² / (Ω² − ωₙ²) = M
//! ```
//!
//! which interlace with the bath frequencies. Comparing the exact finite-N
//! thermodynamics against the continuum formulas validates them.

mod jacobi;
mod secular;

use std::f64::consts::PI;

use serde::Serialize;

use crate::bath::SpectralDensity;
use crate::modeshift::DensityShift;
use crate::thermo::c_ho;
use crate::{Error, Result};

pub use jacobi::{dense_spectrum, symmetric_eigenvalues};
pub use secular::{coupled_spectrum, secular_function};

/// N oscillators with frequencies nΔ and masses mₙ, plus the particle mass M.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscreteBath {
    spacing: f64,
    frequencies: Vec<f64>,
    masses: Vec<f64>,
    system_mass: f64,
    source: Option<SpectralDensity>,
}

impl DiscreteBath {
    /// Discretises `sd` with spacing `delta` into `n` oscillators.
    pub fn build(sd: &SpectralDensity, delta: f64, n: usize) -> Result<Self> {
        if !(delta > 0.0 && delta.is_finite()) || n < 1 {
            return Err(Error::InvalidParameter(format!(
                "need spacing > 0 and at least one mode, got delta = {delta}, n = {n}"
            )));
        }
        let frequencies: Vec<f64> = (1..=n).map(|k| k as f64 * delta).collect();
        let masses = frequencies
            .iter()
            .map(|&w| 2.0 / PI * sd.j(w) / (w * w * w) * delta)
            .collect();
        let mut bath = Self::from_masses(delta, masses, sd.system_mass())?;
        bath.source = Some(*sd);
        Ok(bath)
    }

    /// A bath with explicit masses on the grid ωₙ = nΔ.
    pub fn from_masses(spacing: f64, masses: Vec<f64>, system_mass: f64) -> Result<Self> {
        if !(spacing > 0.0 && spacing.is_finite()) {
            return Err(Error::InvalidParameter(format!("spacing must be positive, got {spacing}")));
        }
        if !(system_mass > 0.0 && system_mass.is_finite()) {
            return Err(Error::InvalidParameter(format!("system mass must be positive, got {system_mass}")));
        }
        if masses.is_empty() {
            return Err(Error::InvalidParameter("bath needs at least one oscillator".into()));
        }
        if let Some(m) = masses.iter().find(|m| !(**m > 0.0 && m.is_finite())) {
            return Err(Error::InvalidParameter(format!("oscillator masses must be positive, got {m}")));
        }
        let frequencies = (1..=masses.len()).map(|k| k as f64 * spacing).collect();
        Ok(Self {
            spacing,
            frequencies,
            masses,
            system_mass,
            source: None,
        })
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn n_modes(&self) -> usize {
        self.masses.len()
    }

    pub fn frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn system_mass(&self) -> f64 {
        self.system_mass
    }

    pub fn source(&self) -> Option<&SpectralDensity> {
        self.source.as_ref()
    }

    /// Σ mₙ, the finite-N partial mass of the bath.
    pub fn total_mass(&self) -> f64 {
        self.masses.iter().sum()
    }

    /// Σ mₙωₙ² / M, the corner of the dynamical matrix.
    pub(crate) fn stiffness(&self) -> f64 {
        self.masses
            .iter()
            .zip(&self.frequencies)
            .map(|(m, w)| m * w * w)
            .sum::<f64>()
            / self.system_mass
    }
}

/// The non-zero eigenfrequencies Ω_k of the coupled system.
///
/// `shifts[k] = Ω_k² − ω_k²` is kept alongside because near a pole of the
/// secular equation it carries more precision than Ω_k itself.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoupledSpectrum {
    pub frequencies: Vec<f64>,
    pub shifts: Vec<f64>,
    pub has_zero_mode: bool,
}

impl CoupledSpectrum {
    pub fn len(&self) -> usize {
        self.frequencies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frequencies.is_empty()
    }
}

/// ω_k < Ω_k < ω_{k+1} for all k, and Ω_N > ω_N.
pub fn interlacing_holds(bath: &DiscreteBath, spectrum: &CoupledSpectrum) -> bool {
    let w = bath.frequencies();
    spectrum.len() == w.len()
        && spectrum.frequencies.iter().enumerate().all(|(k, &omega)| {
            omega > w[k] && w.get(k + 1).is_none_or(|&next| omega < next)
        })
}

/// |Σ mₙωₙ²/(Ω_k² − ωₙ²) − M| / M at each returned root.
pub fn secular_relative_residuals(bath: &DiscreteBath, spectrum: &CoupledSpectrum) -> Vec<f64> {
    let w = bath.frequencies();
    let m = bath.system_mass();
    spectrum
        .shifts
        .iter()
        .enumerate()
        .map(|(k, &shift)| {
            let wk2 = w[k] * w[k];
            let sum: f64 = bath
                .masses()
                .iter()
                .zip(w)
                .map(|(mn, wn)| mn * wn * wn / ((wk2 - wn * wn) + shift))
                .sum();
            (sum - m).abs() / m
        })
        .collect()
}

/// |cot(πΩ_k/Δ) − Δ/(πΩ_k) − g(Ω_k)| for each eigenfrequency: how well the
/// finite-N spectrum obeys the continuum eigenvalue condition. Empty for a
/// single-mode bath, where the grid asymptotics do not apply.
pub fn secular_residual(bath: &DiscreteBath, spectrum: &CoupledSpectrum) -> Result<Vec<f64>> {
    if bath.n_modes() < 2 {
        return Ok(Vec::new());
    }
    let sd = bath
        .source()
        .ok_or_else(|| Error::Domain("bath was not built from a spectral density".into()))?;
    let shift = DensityShift::new(*sd);
    let delta = bath.spacing();
    spectrum
        .frequencies
        .iter()
        .zip(bath.frequencies())
        .map(|(&omega, &wk)| {
            // πΩ/Δ reduced by the known multiple of π: Ω − ω_k = shift / (Ω + ω_k)
            let k_shift = (omega * omega - wk * wk).max(0.0);
            let frac = PI * k_shift / ((omega + wk) * delta);
            let cot = frac.cos() / frac.sin();
            Ok((cot - delta / (PI * omega) - shift.g(omega)?).abs())
        })
        .collect()
}

/// Exact C = C_S+B − C_B of the finite system: the free zero mode contributes
/// 1/2, each coupled mode and each (subtracted) bath mode an oscillator term.
pub fn discrete_specific_heat(bath: &DiscreteBath, spectrum: &CoupledSpectrum, temperature: f64) -> f64 {
    // pair the terms so large sums cancel termwise
    0.5 + spectrum
        .frequencies
        .iter()
        .zip(bath.frequencies())
        .map(|(&omega, &w)| c_ho(omega, temperature) - c_ho(w, temperature))
        .sum::<f64>()
}

/// #{Ω_k ≤ Ω} − #{ωₙ ≤ Ω}; the valid range is 0 ≤ Ω ≤ (N − 2)Δ.
pub fn counting_difference(bath: &DiscreteBath, spectrum: &CoupledSpectrum, omega: f64) -> Result<i64> {
    let upper = (bath.n_modes() as f64 - 2.0) * bath.spacing();
    if !(omega >= 0.0 && omega <= upper) {
        return Err(Error::Domain(format!(
            "counting window is [0, {upper}], got {omega}"
        )));
    }
    let coupled = spectrum.frequencies.partition_point(|&x| x <= omega);
    let bare = bath.frequencies().partition_point(|&x| x <= omega);
    Ok(coupled as i64 - bare as i64)
}
