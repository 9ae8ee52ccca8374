use crate::{Error, Result};

use super::DiscreteBath;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a dense symmetric matrix (row-major, `n × n`) by cyclic
/// Jacobi rotations, sorted ascending.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    if a.len() != n * n {
        return Err(Error::InvalidParameter(format!("expected {} entries, got {}", n * n, a.len())));
    }
    let idx = |i: usize, j: usize| i * n + j;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| a[idx(i, j)] * a[idx(i, j)])
            .sum();
        let diag: f64 = (0..n).map(|i| a[idx(i, i)] * a[idx(i, i)]).sum();
        if off <= (f64::EPSILON * f64::EPSILON) * diag.max(f64::MIN_POSITIVE) {
            let mut eig: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
            eig.sort_by(f64::total_cmp);
            return Ok(eig);
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[idx(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    Err(Error::NonConvergence {
        estimate: f64::NAN,
        tolerance: f64::EPSILON,
        subdivisions: MAX_SWEEPS,
    })
}

/// Non-zero eigenfrequencies from the (N+1)×(N+1) mass-weighted dynamical
/// matrix. O(N³): meant for cross-checking [`super::coupled_spectrum`] on
/// small baths.
pub fn dense_spectrum(bath: &DiscreteBath) -> Result<Vec<f64>> {
    let n = bath.n_modes() + 1;
    let m = bath.system_mass();
    let mut a = vec![0.0; n * n];
    a[0] = bath.stiffness();
    for (i, (mi, wi)) in bath.masses().iter().zip(bath.frequencies()).enumerate() {
        let k = i + 1;
        let coupling = -wi * wi * (mi / m).sqrt();
        a[k * n + k] = wi * wi;
        a[k] = coupling;
        a[k * n] = coupling;
    }
    let eig = symmetric_eigenvalues(a, n)?;
    // the smallest eigenvalue is the translational zero mode
    Ok(eig[1..].iter().map(|e| e.max(0.0).sqrt()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_matrix() {
        // [[2, 1], [1, 2]] → 1, 3
        let e = symmetric_eigenvalues(vec![2.0, 1.0, 1.0, 2.0], 2).unwrap();
        assert!((e[0] - 1.0).abs() < 1e-15 && (e[1] - 3.0).abs() < 1e-15);
        // tridiagonal 2, −1: eigenvalues 2 − 2cos(kπ/(n+1))
        let n = 6;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + i] = 2.0;
            if i + 1 < n {
                a[i * n + i + 1] = -1.0;
                a[(i + 1) * n + i] = -1.0;
            }
        }
        let e = symmetric_eigenvalues(a, n).unwrap();
        for (k, v) in e.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((v - exact).abs() < 1e-13);
        }
        assert!(symmetric_eigenvalues(vec![1.0; 3], 2).is_err());
    }

    #[test]
    fn dynamical_matrix_has_zero_mode() {
        let bath = DiscreteBath::from_masses(0.5, vec![0.4, 1.3, 0.2], 1.5).unwrap();
        let n = 4;
        let mut a = vec![0.0; n * n];
        a[0] = bath.stiffness();
        for i in 0..3 {
            let w = bath.frequencies()[i];
            let c = -w * w * (bath.masses()[i] / 1.5f64).sqrt();
            a[(i + 1) * n + i + 1] = w * w;
            a[i + 1] = c;
            a[(i + 1) * n] = c;
        }
        let e = symmetric_eigenvalues(a, n).unwrap();
        assert!(e[0].abs() < 1e-14, "{e:?}");
        assert_eq!(dense_spectrum(&bath).unwrap().len(), 3);
    }

    #[test]
    fn unit_two_mode_case() {
        let bath = DiscreteBath::from_masses(1.0, vec![1.0], 1.0).unwrap();
        let e = dense_spectrum(&bath).unwrap();
        assert!((e[0] - 2f64.sqrt()).abs() < 1e-14);
    }
}
