//! Eigenmode density shift and thermodynamics of a free quantum particle
//! coupled to an Ohmic bath of harmonic oscillators.
//!
//! Units: ħ = k_B = 1 throughout. Frequencies, damping strengths and
//! temperatures (k_B T / ħ) share one frequency unit, energies are in ħ times
//! that unit and specific heats in k_B. Choosing the damping constant γ as the
//! unit gives the reduced variables used by the command-line tool.
//!
//! The crate is organised bottom-up:
//!
//! - [`numerics`]: semi-infinite quadrature, bracketed roots, Richardson differentiation.
//! - [`specfun`]: complex log-gamma, digamma and trigamma.
//! - [`bath`]: spectral densities J(ω), the damping kernel γ̂(z) and the missing-mass criterion.
//! - [`modeshift`]: the change ρ_S+B − ρ_B of the eigenmode density.
//! - [`thermo`]: specific heat, internal energy and partition-function ratio.
//! - [`oracle`]: brute-force finite baths for validating the continuum results.
//! - [`cli`]: the `bathlab` command-line front end.

// Negated float comparisons are used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bath;
pub mod cli;
mod error;
pub mod modeshift;
pub mod numerics;
pub mod oracle;
pub mod specfun;
pub mod thermo;

pub use bath::{AnomalyReport, BathModel, SpectralDensity};
pub use error::{Error, Result};
pub use modeshift::{DampedSystemFrequencies, DensityShift};
pub use numerics::{QuadratureSpec, RootBracket};
pub use num_complex::Complex64;
pub use oracle::{CoupledSpectrum, DiscreteBath};
pub use thermo::{LowTAsymptote, ThermoPoint};
