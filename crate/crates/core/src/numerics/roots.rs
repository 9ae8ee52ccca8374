use crate::{Error, Result};

const MAX_ITERATIONS: usize = 400;

/// An interval known to contain a sign change of some function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootBracket {
    lo: f64,
    hi: f64,
    f_lo: f64,
    f_hi: f64,
}

impl RootBracket {
    /// Evaluates `f` at both ends and checks for a strict sign change.
    pub fn new<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Result<Self> {
        Self::from_values(lo, hi, f(lo), f(hi))
    }

    pub fn from_values(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        if !(lo < hi) || !(f_lo * f_hi < 0.0) {
            return Err(Error::InvalidBracket { lo, hi, f_lo, f_hi });
        }
        Ok(Self { lo, hi, f_lo, f_hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }
}

/// Finds a root of `f` inside `bracket` to bracket width `tol`.
///
/// Illinois-modified false position, falling back to bisection whenever an
/// iteration fails to halve the bracket. The bracket is maintained throughout,
/// so the result always lies in `[lo, hi]`. `tol = 0` iterates until the
/// bracket collapses to adjacent floating-point numbers.
pub fn find_root<F: Fn(f64) -> f64>(f: F, bracket: RootBracket, tol: f64) -> Result<f64> {
    let RootBracket {
        lo: mut a,
        hi: mut b,
        f_lo: mut fa,
        f_hi: mut fb,
    } = RootBracket::from_values(bracket.lo, bracket.hi, bracket.f_lo, bracket.f_hi)?;
    // which end the previous iteration replaced: -1 lower, +1 upper
    let mut last = 0i32;

    for _ in 0..MAX_ITERATIONS {
        let width = b - a;
        let mid = a + 0.5 * width;
        if width <= tol || mid <= a || mid >= b {
            break;
        }

        let mut x = (a * fb - b * fa) / (fb - fa);
        if !(x > a && x < b) {
            x = mid;
        }
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx * fa > 0.0 {
            a = x;
            fa = fx;
            if last == -1 {
                fb *= 0.5;
            }
            last = -1;
        } else {
            b = x;
            fb = fx;
            if last == 1 {
                fa *= 0.5;
            }
            last = 1;
        }

        // Bisect whenever false position fails to halve the bracket.
        if b - a > 0.5 * width {
            let mid = a + 0.5 * (b - a);
            if mid <= a || mid >= b {
                break;
            }
            let fm = f(mid);
            if fm == 0.0 {
                return Ok(mid);
            }
            if fm * fa > 0.0 {
                a = mid;
                fa = fm;
            } else {
                b = mid;
                fb = fm;
            }
            last = 0;
        }
    }

    Ok(if fa.abs() <= fb.abs() { a } else { b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, SQRT_2};

    fn solve<F: Fn(f64) -> f64 + Copy>(f: F, lo: f64, hi: f64, tol: f64) -> f64 {
        find_root(f, RootBracket::new(&f, lo, hi).unwrap(), tol).unwrap()
    }

    #[test]
    fn square_root_of_two() {
        let r = solve(|x| x * x - 2.0, 1.0, 2.0, 1e-12);
        assert!((r - SQRT_2).abs() <= 1e-12, "{r}");
    }

    #[test]
    fn cosine_zero() {
        let r = solve(f64::cos, 1.0, 2.0, 1e-12);
        assert!((r - FRAC_PI_2).abs() <= 1e-12, "{r}");
    }

    #[test]
    fn odd_function() {
        assert_eq!(solve(|x| x, -1.0, 1.0, 1e-12), 0.0);
    }

    #[test]
    fn machine_precision_mode() {
        let r = solve(|x| x * x * x - 3.0, 0.0, 3.0, 0.0);
        assert!((r - 3f64.cbrt()).abs() <= 4.0 * f64::EPSILON, "{r}");
    }

    #[test]
    fn flat_then_steep_function_still_converges() {
        // false position alone stalls on this one
        let r = solve(|x| x.powi(9) - 1e-9, 0.0, 10.0, 1e-14);
        assert!((r - 0.1).abs() < 1e-12, "{r}");
    }

    #[test]
    fn rejects_missing_sign_change() {
        let f = |x: f64| x * x + 1.0;
        assert!(matches!(
            RootBracket::new(&f, -1.0, 1.0),
            Err(Error::InvalidBracket { .. })
        ));
        assert!(RootBracket::new(&|x: f64| x, 1.0, -1.0).is_err());
        assert!(RootBracket::from_values(0.0, 1.0, 0.0, 1.0).is_err());
    }

    proptest! {
        #[test]
        fn root_stays_inside_bracket(c in -0.99f64..0.99, lo in -5.0f64..-1.0, hi in 1.0f64..5.0) {
            let f = |x: f64| (x - c) * (1.0 + x * x);
            let r = solve(f, lo, hi, 1e-13);
            prop_assert!(r >= lo && r <= hi);
            prop_assert!((r - c).abs() < 1e-12);
        }
    }
}
