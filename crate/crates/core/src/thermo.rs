//! Thermodynamics of the reduced partition function Z = Z_S+B / Z_B.
//!
//! C = C_S+B − C_B is the eigenmode-density shift weighted with the specific
//! heat of a harmonic oscillator. For Drude damping the integral has a closed
//! form in trigamma functions of v = ω/(2πT), and integrating C = ∂U/∂T gives
//! U and ln Z in digamma and log-gamma functions of the same arguments.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::bath::SpectralDensity;
use crate::modeshift::{DampedSystemFrequencies, DensityShift};
use crate::numerics::{integrate, integrate_from, QuadratureSpec};
use crate::specfun::{digamma, log_gamma, trigamma};
use crate::{Error, Result};

const IMAG_TOLERANCE: f64 = 1e-12;
/// Boundaries of the quadrature panels in x = ω/T.
const PANEL_EDGES: [f64; 4] = [0.0, 1.0, 10.0, 50.0];

/// One sample of the thermodynamic functions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThermoPoint {
    pub temperature: f64,
    pub specific_heat: f64,
    pub internal_energy: f64,
    /// ln Z up to a temperature-independent constant.
    pub ln_partition_ratio: f64,
}

/// Leading low-temperature behaviour C ≈ slope · T.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LowTAsymptote {
    pub slope: f64,
}

impl LowTAsymptote {
    pub fn specific_heat(&self, temperature: f64) -> f64 {
        self.slope * temperature
    }

    pub fn is_negative(&self) -> bool {
        self.slope < 0.0
    }
}

fn check_temperature(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("temperature must be positive, got {t}")))
    }
}

fn real(z: Complex64) -> Result<f64> {
    if z.im.abs() > IMAG_TOLERANCE * z.re.abs().max(1.0) {
        return Err(Error::NotReal { imag: z.im });
    }
    Ok(z.re)
}

/// Oscillator specific heat in terms of x = ω/T: (x / 2 sinh(x/2))².
pub fn c_ho_reduced(x: f64) -> f64 {
    let x = x.abs();
    if x < 1e-4 {
        1.0 - x * x / 12.0
    } else if x > 700.0 {
        0.0
    } else {
        let r = 0.5 * x / (0.5 * x).sinh();
        r * r
    }
}

/// Specific heat of an oscillator of frequency `omega` at temperature `temperature`.
pub fn c_ho(omega: f64, temperature: f64) -> f64 {
    if omega == 0.0 {
        return 1.0;
    }
    if temperature <= 0.0 {
        return 0.0;
    }
    c_ho_reduced(omega / temperature)
}

/// C = ∫₀^∞ dω Δρ(ω) C_ho(ω), integrated in x = ω/T.
pub fn specific_heat_quadrature(sd: &SpectralDensity, temperature: f64) -> Result<f64> {
    specific_heat_quadrature_with(sd, temperature, QuadratureSpec::default())
}

pub fn specific_heat_quadrature_with(
    sd: &SpectralDensity,
    temperature: f64,
    spec: QuadratureSpec,
) -> Result<f64> {
    check_temperature(temperature)?;
    let shift = DensityShift::new(*sd);
    // Δρ is finite on [0, ∞) for the supported models
    let integrand = |x: f64| shift.eval(temperature * x).unwrap_or(f64::NAN) * c_ho_reduced(x);
    let mut total = 0.0;
    for edges in PANEL_EDGES.windows(2) {
        total += integrate(integrand, edges[0], edges[1], spec)?;
    }
    total += integrate_from(integrand, PANEL_EDGES[PANEL_EDGES.len() - 1], spec)?;
    Ok(temperature * total)
}

/// Drude specific heat Σ_{ω₁,ω₂} v²ψ′(v) − v_D²ψ′(v_D) − 1/2 with v = ω/(2πT).
pub fn specific_heat_closed(freqs: &DampedSystemFrequencies, temperature: f64) -> Result<f64> {
    check_temperature(temperature)?;
    let scale = 1.0 / (2.0 * PI * temperature);
    let term = |w: Complex64| -> Result<Complex64> {
        let v = w * scale;
        Ok(v * v * trigamma(v)?)
    };
    let total = term(freqs.omega1)? + term(freqs.omega2)?
        - term(Complex64::new(freqs.omega_d, 0.0))?
        - 0.5;
    real(total)
}

/// Slope of C(T) as T → 0: (π/3)(1 + γ̂′(0)) / γ̂(0).
pub fn low_t_asymptote(sd: &SpectralDensity) -> Result<LowTAsymptote> {
    let slope = PI / 3.0 * (1.0 + sd.gamma_hat_prime_zero()?) / sd.gamma_hat_zero();
    Ok(LowTAsymptote { slope })
}

/// U = −Σ_{ω₁,ω₂} (ω/2π) ψ(v) + (ω_D/2π) ψ(v_D) − T/2, with zero integration constant.
pub fn internal_energy(freqs: &DampedSystemFrequencies, temperature: f64) -> Result<f64> {
    check_temperature(temperature)?;
    let scale = 1.0 / (2.0 * PI * temperature);
    let term = |w: Complex64| -> Result<Complex64> { Ok(w / (2.0 * PI) * digamma(w * scale)?) };
    let total = -term(freqs.omega1)? - term(freqs.omega2)?
        + term(Complex64::new(freqs.omega_d, 0.0))?
        - 0.5 * temperature;
    real(total)
}

/// U at T = 0: (ω₁/2π) ln(ω_D/ω₁) + (ω₂/2π) ln(ω_D/ω₂).
pub fn zero_point_energy(freqs: &DampedSystemFrequencies) -> f64 {
    zero_point_energy_complex(freqs).re
}

fn zero_point_energy_complex(freqs: &DampedSystemFrequencies) -> Complex64 {
    let wd = freqs.omega_d;
    let term = |w: Complex64| w / (2.0 * PI) * (wd / w).ln();
    term(freqs.omega1) + term(freqs.omega2)
}

/// ln Z = ½ ln T + ln Γ(1 + v₁) + ln Γ(1 + v₂) − ln Γ(1 + v_D), defined up to
/// an additive constant.
pub fn ln_partition_ratio(freqs: &DampedSystemFrequencies, temperature: f64) -> Result<f64> {
    check_temperature(temperature)?;
    let scale = 1.0 / (2.0 * PI * temperature);
    let term = |w: Complex64| log_gamma(1.0 + w * scale);
    let total = 0.5 * temperature.ln() + term(freqs.omega1)? + term(freqs.omega2)?
        - term(Complex64::new(freqs.omega_d, 0.0))?;
    real(total)
}

/// All closed-form quantities at one temperature.
pub fn thermo_point(freqs: &DampedSystemFrequencies, temperature: f64) -> Result<ThermoPoint> {
    Ok(ThermoPoint {
        temperature,
        specific_heat: specific_heat_closed(freqs, temperature)?,
        internal_energy: internal_energy(freqs, temperature)?,
        ln_partition_ratio: ln_partition_ratio(freqs, temperature)?,
    })
}
