//! Change of the eigenmode density when the free particle is coupled to the bath.
//!
//! With g(Ω) = (MΩ / J(Ω)) (Ω + Im γ̂(iΩ)) the shift is
//!
//! ```text
//! ρ_S+B(Ω) − ρ_B(Ω) = g′(Ω) / (π (1 + g(Ω)²))
//! ```
//!
//! For Drude damping this is a sum of three Lorentzians centred at zero
//! frequency with widths ω₁, ω₂ (the damped-particle eigenfrequencies) and
//! −ω_D; see [`DampedSystemFrequencies`].

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::bath::{BathModel, SpectralDensity};
use crate::numerics::derivative;
use crate::{Error, Result};

const IMAG_GUARD: f64 = 1e-13;

/// The frequencies ω₁, ω₂ = (ω_D/2)(1 ± √(1 − 4γ/ω_D)) and ω_D.
///
/// ω₁ and ω₂ are real for ω_D ≥ 4γ and complex conjugates with real part
/// ω_D/2 otherwise. ω₁ + ω₂ = ω_D and ω₁ω₂ = γω_D.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DampedSystemFrequencies {
    pub omega1: Complex64,
    pub omega2: Complex64,
    pub omega_d: f64,
}

impl DampedSystemFrequencies {
    pub fn new(gamma: f64, omega_d: f64) -> Result<Self> {
        if !(gamma > 0.0 && gamma.is_finite() && omega_d > 0.0 && omega_d.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "gamma and omega_d must be positive, got {gamma}, {omega_d}"
            )));
        }
        let disc = 1.0 - 4.0 * gamma / omega_d;
        let half = 0.5 * omega_d;
        let (omega1, omega2) = if disc >= 0.0 {
            let w1 = half * (1.0 + disc.sqrt());
            // product form avoids cancellation in the small root
            (Complex64::new(w1, 0.0), Complex64::new(gamma * omega_d / w1, 0.0))
        } else {
            let im = half * (-disc).sqrt();
            (Complex64::new(half, im), Complex64::new(half, -im))
        };
        Ok(Self {
            omega1,
            omega2,
            omega_d,
        })
    }

    /// Frequencies of a Drude bath, `None` for other models.
    pub fn of(sd: &SpectralDensity) -> Option<Self> {
        match sd.model() {
            BathModel::Drude { gamma, omega_d } => Self::new(gamma, omega_d).ok(),
            BathModel::StrictOhmic { .. } => None,
        }
    }

    pub fn gamma(&self) -> f64 {
        (self.omega1 * self.omega2).re / self.omega_d
    }

    pub fn is_real(&self) -> bool {
        self.omega1.im == 0.0
    }

    /// Lorentzian form of the density shift, valid for Ω ≥ 0.
    pub fn delta_rho(&self, omega: f64) -> f64 {
        let (first, second, cutoff) = self.lorentzian_components(omega);
        first + second + cutoff
    }

    /// The three Lorentzians separately, each divided by π.
    ///
    /// In the complex regime the conjugate pair is only real as a sum; it is
    /// then returned as the first component and the second is zero.
    pub fn lorentzian_components(&self, omega: f64) -> (f64, f64, f64) {
        let o2 = omega * omega;
        let lorentz = |w: Complex64| w / (o2 + w * w);
        let wd = self.omega_d;
        let third = -wd / (o2 + wd * wd) / PI;
        if self.is_real() {
            (lorentz(self.omega1).re / PI, lorentz(self.omega2).re / PI, third)
        } else {
            let pair = lorentz(self.omega1) + lorentz(self.omega2);
            debug_assert!(pair.im.abs() <= IMAG_GUARD * pair.re.abs().max(1.0));
            (pair.re / PI, 0.0, third)
        }
    }
}

/// Evaluator of ρ_S+B(Ω) − ρ_B(Ω) for a bath model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityShift {
    bath: SpectralDensity,
}

impl DensityShift {
    pub fn new(bath: SpectralDensity) -> Self {
        Self { bath }
    }

    pub fn bath(&self) -> &SpectralDensity {
        &self.bath
    }

    /// g(Ω) for Ω > 0. Drude uses the reduced polynomial
    /// Ω(Ω² + ω_D² − γω_D)/(γω_D²); other models go through [`Self::g_generic`].
    pub fn g(&self, omega: f64) -> Result<f64> {
        check_positive(omega)?;
        match self.bath.model() {
            BathModel::Drude { gamma, omega_d } => {
                Ok(omega * (omega * omega + omega_d * omega_d - gamma * omega_d) / (gamma * omega_d * omega_d))
            }
            BathModel::StrictOhmic { .. } => self.g_generic(omega),
        }
    }

    /// g(Ω) assembled from J(Ω) and Im γ̂(iΩ).
    pub fn g_generic(&self, omega: f64) -> Result<f64> {
        check_positive(omega)?;
        let j = self.bath.j(omega);
        if j <= 0.0 {
            return Err(Error::Domain(format!("J vanishes at {omega}")));
        }
        Ok(self.g_odd(omega))
    }

    // g is odd in Ω for every model here; extending it lets the numerical
    // derivative straddle Ω = 0.
    fn g_odd(&self, omega: f64) -> f64 {
        if omega == 0.0 {
            return 0.0;
        }
        let w = omega.abs();
        let im = self.bath.gamma_hat_complex(Complex64::new(0.0, w)).im;
        let g = self.bath.system_mass() * w / self.bath.j(w) * (w + im);
        if omega < 0.0 {
            -g
        } else {
            g
        }
    }

    /// g′(Ω): exact for Drude, Richardson-extrapolated otherwise.
    pub fn g_prime(&self, omega: f64) -> Result<f64> {
        if !(omega >= 0.0) {
            return Err(Error::Domain(format!("frequency must be >= 0, got {omega}")));
        }
        match self.bath.model() {
            BathModel::Drude { gamma, omega_d } => {
                Ok((3.0 * omega * omega + omega_d * omega_d - gamma * omega_d) / (gamma * omega_d * omega_d))
            }
            BathModel::StrictOhmic { .. } => {
                let h = (1e-6 * self.bath.gamma()).max(1e-6 * omega);
                Ok(derivative(|w| self.g_odd(w), omega, h))
            }
        }
    }

    /// Δρ(Ω) for Ω ≥ 0; Ω = 0 is the analytic limit (1 + γ̂′(0)) / (π γ̂(0)).
    pub fn eval(&self, omega: f64) -> Result<f64> {
        if omega == 0.0 {
            return Ok(self.zero_frequency_limit());
        }
        check_positive(omega)?;
        let g = self.g(omega)?;
        let gp = self.g_prime(omega)?;
        Ok(gp / (PI * (1.0 + g * g)))
    }

    pub fn zero_frequency_limit(&self) -> f64 {
        (1.0 + self.bath.gamma_hat_prime_zero_closed()) / (PI * self.bath.gamma_hat_zero())
    }
}

fn check_positive(omega: f64) -> Result<()> {
    if omega > 0.0 && omega.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("frequency must be positive, got {omega}")))
    }
}
