use crate::numerics::{find_root, RootBracket};
use crate::{Error, Result};

use super::{CoupledSpectrum, DiscreteBath};

/// Pole guard relative to the upper end of each interval (in Ω²).
const POLE_GUARD: f64 = 1e-12;

/// Σ mₙωₙ²/(Ω² − ωₙ²) − M.
pub fn secular_function(bath: &DiscreteBath, omega: f64) -> f64 {
    let s = omega * omega;
    bath.masses()
        .iter()
        .zip(bath.frequencies())
        .map(|(m, w)| m * w * w / (s - w * w))
        .sum::<f64>()
        - bath.system_mass()
}

/// Solves the secular equation once in each interval (ω_k, ω_{k+1}) and once
/// above ω_N, where the root lies below ω_N² + 2Σmₙωₙ²/M.
///
/// Each root is sought as the offset δ = Ω² − ω_k² from the lower pole. The
/// secular function is multiplied by the distances to both poles, which keeps
/// it smooth on the bracket without moving its roots.
pub fn coupled_spectrum(bath: &DiscreteBath) -> Result<CoupledSpectrum> {
    let n = bath.n_modes();
    let w2: Vec<f64> = bath.frequencies().iter().map(|w| w * w).collect();
    let weights: Vec<f64> = bath.masses().iter().zip(&w2).map(|(m, s)| m * s).collect();
    let m = bath.system_mass();
    // F(ω_N² + Σmₙωₙ²/M) ≤ 0 with equality only for N = 1; doubling keeps a strict sign change
    let top_width = 2.0 * bath.stiffness();

    let mut frequencies = Vec::with_capacity(n);
    let mut shifts = Vec::with_capacity(n);
    let mut offsets = vec![0.0; n];

    for k in 0..n {
        let a = w2[k];
        let width = if k + 1 < n { w2[k + 1] - a } else { top_width };
        for (o, s) in offsets.iter_mut().zip(&w2) {
            *o = a - s;
        }
        let offsets = &offsets;
        let weights = &weights;

        let cleared = |delta: f64| -> f64 {
            // contributions of all poles except the interval's own
            let mut rest = -m;
            for (i, (wt, o)) in weights.iter().zip(offsets).enumerate() {
                if i != k && i != k + 1 {
                    rest += wt / (o + delta);
                }
            }
            if k + 1 < n {
                let upper = width - delta;
                // F · δ · (b − s) / (b − a)
                (weights[k] * upper + delta * upper * rest - weights[k + 1] * delta) / width
            } else {
                weights[k] + delta * rest
            }
        };

        let eta = POLE_GUARD * (a + width);
        let bracket = RootBracket::new(&cleared, eta, width - eta)
            .map_err(|_| Error::RootNotBracketed { index: k })?;
        let delta = find_root(cleared, bracket, 0.0)?;
        shifts.push(delta);
        frequencies.push((a + delta).sqrt());
    }

    Ok(CoupledSpectrum {
        frequencies,
        shifts,
        has_zero_mode: true,
    })
}
