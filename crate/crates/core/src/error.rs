use num_complex::Complex64;
use thiserror::Error;

/// Failures surfaced by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(
        "quadrature did not converge: error estimate {estimate:e} exceeds tolerance {tolerance:e} \
         after {subdivisions} subdivisions"
    )]
    NonConvergence {
        estimate: f64,
        tolerance: f64,
        subdivisions: usize,
    },

    #[error("integrand is not finite at {at}")]
    NonFinite { at: f64 },

    #[error("invalid bracket [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    InvalidBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("argument {0} is a pole")]
    Pole(Complex64),

    #[error("secular root {index} is not bracketed (degenerate masses?)")]
    RootNotBracketed { index: usize },

    #[error("result has a spurious imaginary part {imag:e}")]
    NotReal { imag: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
