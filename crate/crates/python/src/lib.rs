//! Python bindings for the `bathlab` library.
//!
//! Mirrors the Rust API with γ and the system mass explicit and ħ = k_B = 1.

use num_complex::Complex64;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use bathlab_core::oracle::{
    self, coupled_spectrum, dense_spectrum, discrete_specific_heat, interlacing_holds, secular_relative_residuals,
};
use bathlab_core::{modeshift, specfun, thermo, Error};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::NonConvergence { .. } | Error::NonFinite { .. } | Error::RootNotBracketed { .. } => {
            PyArithmeticError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Ohmic spectral density J(ω) of the bath oscillators.
#[pyclass(name = "SpectralDensity", module = "bathlab", frozen)]
struct SpectralDensity {
    inner: bathlab_core::SpectralDensity,
}

#[pymethods]
impl SpectralDensity {
    /// J(ω) = Mγω ω_D² / (ω² + ω_D²).
    #[staticmethod]
    #[pyo3(signature = (gamma, omega_d, system_mass = 1.0))]
    fn drude(gamma: f64, omega_d: f64, system_mass: f64) -> PyResult<Self> {
        let inner = bathlab_core::SpectralDensity::drude(gamma, omega_d)
            .and_then(|s| s.with_system_mass(system_mass))
            .map_err(to_py)?;
        Ok(Self { inner })
    }

    /// J(ω) = Mγω without cutoff.
    #[staticmethod]
    #[pyo3(signature = (gamma, system_mass = 1.0))]
    fn strict_ohmic(gamma: f64, system_mass: f64) -> PyResult<Self> {
        let inner = bathlab_core::SpectralDensity::strict_ohmic(gamma)
            .and_then(|s| s.with_system_mass(system_mass))
            .map_err(to_py)?;
        Ok(Self { inner })
    }

    #[getter]
    fn gamma(&self) -> f64 {
        self.inner.gamma()
    }

    #[getter]
    fn cutoff(&self) -> Option<f64> {
        self.inner.cutoff()
    }

    #[getter]
    fn system_mass(&self) -> f64 {
        self.inner.system_mass()
    }

    fn j(&self, omega: f64) -> f64 {
        self.inner.j(omega)
    }

    /// Laplace transform of the damping kernel at real z ≥ 0.
    fn gamma_hat(&self, z: f64) -> PyResult<f64> {
        self.inner.gamma_hat(z).map_err(to_py)
    }

    fn gamma_hat_prime_zero(&self) -> PyResult<f64> {
        self.inner.gamma_hat_prime_zero().map_err(to_py)
    }

    fn missing_mass(&self) -> PyResult<f64> {
        self.inner.missing_mass().map_err(to_py)
    }

    /// Dictionary with the damping-kernel slope, missing-mass ratio and verdict.
    fn anomaly<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let report = self.inner.anomaly().map_err(to_py)?;
        let d = PyDict::new(py);
        d.set_item("gamma_hat_zero", report.gamma_hat_zero)?;
        d.set_item("gamma_hat_prime_zero", report.gamma_hat_prime_zero)?;
        d.set_item("missing_mass_ratio", report.missing_mass_ratio)?;
        d.set_item("low_t_negative", report.low_t_specific_heat_negative)?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        match self.inner.cutoff() {
            Some(wd) => format!("SpectralDensity.drude({}, {})", self.inner.gamma(), wd),
            None => format!("SpectralDensity.strict_ohmic({})", self.inner.gamma()),
        }
    }
}

/// ω₁, ω₂ of the Drude-damped particle together with ω_D.
#[pyclass(name = "DampedSystemFrequencies", module = "bathlab", frozen)]
struct DampedSystemFrequencies {
    inner: modeshift::DampedSystemFrequencies,
}

#[pymethods]
impl DampedSystemFrequencies {
    #[new]
    fn new(gamma: f64, omega_d: f64) -> PyResult<Self> {
        let inner = modeshift::DampedSystemFrequencies::new(gamma, omega_d).map_err(to_py)?;
        Ok(Self { inner })
    }

    #[getter]
    fn omega1(&self) -> Complex64 {
        self.inner.omega1
    }

    #[getter]
    fn omega2(&self) -> Complex64 {
        self.inner.omega2
    }

    #[getter]
    fn omega_d(&self) -> f64 {
        self.inner.omega_d
    }

    fn is_real(&self) -> bool {
        self.inner.is_real()
    }

    fn delta_rho(&self, omega: f64) -> f64 {
        self.inner.delta_rho(omega)
    }

    fn lorentzian_components(&self, omega: f64) -> (f64, f64, f64) {
        self.inner.lorentzian_components(omega)
    }

    fn specific_heat(&self, temperature: f64) -> PyResult<f64> {
        thermo::specific_heat_closed(&self.inner, temperature).map_err(to_py)
    }

    fn internal_energy(&self, temperature: f64) -> PyResult<f64> {
        thermo::internal_energy(&self.inner, temperature).map_err(to_py)
    }

    fn ln_partition_ratio(&self, temperature: f64) -> PyResult<f64> {
        thermo::ln_partition_ratio(&self.inner, temperature).map_err(to_py)
    }

    fn zero_point_energy(&self) -> f64 {
        thermo::zero_point_energy(&self.inner)
    }
}

/// Eigenmode-density shift ρ_S+B − ρ_B for an arbitrary bath.
#[pyclass(name = "DensityShift", module = "bathlab", frozen)]
struct DensityShift {
    inner: modeshift::DensityShift,
}

#[pymethods]
impl DensityShift {
    #[new]
    fn new(bath: PyRef<'_, SpectralDensity>) -> Self {
        Self {
            inner: modeshift::DensityShift::new(bath.inner),
        }
    }

    fn g(&self, omega: f64) -> PyResult<f64> {
        self.inner.g(omega).map_err(to_py)
    }

    fn g_prime(&self, omega: f64) -> PyResult<f64> {
        self.inner.g_prime(omega).map_err(to_py)
    }

    fn __call__(&self, omega: f64) -> PyResult<f64> {
        self.inner.eval(omega).map_err(to_py)
    }

    fn zero_frequency_limit(&self) -> f64 {
        self.inner.zero_frequency_limit()
    }
}

/// Finite bath of oscillators on the grid ωₙ = nΔ, with its coupled spectrum.
#[pyclass(name = "DiscreteBath", module = "bathlab", frozen)]
struct DiscreteBath {
    bath: oracle::DiscreteBath,
    spectrum: oracle::CoupledSpectrum,
}

#[pymethods]
impl DiscreteBath {
    #[new]
    fn new(density: PyRef<'_, SpectralDensity>, delta: f64, n_modes: usize) -> PyResult<Self> {
        let bath = oracle::DiscreteBath::build(&density.inner, delta, n_modes).map_err(to_py)?;
        let spectrum = coupled_spectrum(&bath).map_err(to_py)?;
        Ok(Self { bath, spectrum })
    }

    #[getter]
    fn frequencies(&self) -> Vec<f64> {
        self.bath.frequencies().to_vec()
    }

    #[getter]
    fn masses(&self) -> Vec<f64> {
        self.bath.masses().to_vec()
    }

    /// Non-zero eigenfrequencies of the coupled system.
    #[getter]
    fn coupled_frequencies(&self) -> Vec<f64> {
        self.spectrum.frequencies.clone()
    }

    /// Same frequencies from dense diagonalisation; practical for small baths only.
    fn dense_frequencies(&self) -> PyResult<Vec<f64>> {
        dense_spectrum(&self.bath).map_err(to_py)
    }

    fn interlacing_holds(&self) -> bool {
        interlacing_holds(&self.bath, &self.spectrum)
    }

    fn max_secular_residual(&self) -> f64 {
        secular_relative_residuals(&self.bath, &self.spectrum)
            .into_iter()
            .fold(0.0, f64::max)
    }

    fn specific_heat(&self, temperature: f64) -> f64 {
        discrete_specific_heat(&self.bath, &self.spectrum, temperature)
    }

    fn __len__(&self) -> usize {
        self.bath.n_modes()
    }
}

/// Specific heat from quadrature of the density shift.
#[pyfunction]
fn specific_heat_quadrature(density: PyRef<'_, SpectralDensity>, temperature: f64) -> PyResult<f64> {
    thermo::specific_heat_quadrature(&density.inner, temperature).map_err(to_py)
}

/// Coefficient of the linear low-temperature specific heat.
#[pyfunction]
fn low_t_slope(density: PyRef<'_, SpectralDensity>) -> PyResult<f64> {
    thermo::low_t_asymptote(&density.inner)
        .map(|a| a.slope)
        .map_err(to_py)
}

#[pyfunction]
fn log_gamma(z: Complex64) -> PyResult<Complex64> {
    specfun::log_gamma(z).map_err(to_py)
}

#[pyfunction]
fn digamma(z: Complex64) -> PyResult<Complex64> {
    specfun::digamma(z).map_err(to_py)
}

#[pyfunction]
fn trigamma(z: Complex64) -> PyResult<Complex64> {
    specfun::trigamma(z).map_err(to_py)
}

#[pymodule]
fn bathlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<SpectralDensity>()?;
    m.add_class::<DampedSystemFrequencies>()?;
    m.add_class::<DensityShift>()?;
    m.add_class::<DiscreteBath>()?;
    m.add_function(wrap_pyfunction!(specific_heat_quadrature, m)?)?;
    m.add_function(wrap_pyfunction!(low_t_slope, m)?)?;
    m.add_function(wrap_pyfunction!(log_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(digamma, m)?)?;
    m.add_function(wrap_pyfunction!(trigamma, m)?)?;
    Ok(())
}
