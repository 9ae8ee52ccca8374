use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::{Error, Result};

const GAUSS_ORDER: usize = 20;
const INITIAL_PANELS: usize = 4;

/// Tolerances for the adaptive integrators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_subdivisions: 2000,
        }
    }
}

impl QuadratureSpec {
    pub fn new(rel_tol: f64, abs_tol: f64, max_subdivisions: usize) -> Result<Self> {
        let spec = Self {
            rel_tol,
            abs_tol,
            max_subdivisions,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !(self.abs_tol >= 0.0) || self.max_subdivisions < 1 {
            return Err(Error::InvalidParameter(format!(
                "quadrature settings require rel_tol > 0, abs_tol >= 0, max_subdivisions >= 1 (got {self:?})"
            )));
        }
        Ok(())
    }
}

/// Nodes and weights of the Gauss-Legendre rule on [-1, 1].
fn gauss_legendre() -> &'static [(f64, f64); GAUSS_ORDER] {
    static RULE: OnceLock<[(f64, f64); GAUSS_ORDER]> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GAUSS_ORDER;
        let mut rule = [(0.0, 0.0); GAUSS_ORDER];
        for i in 0..n / 2 {
            // Newton iteration on P_n from the Chebyshev-like initial guess.
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            rule[i] = (-x, w);
            rule[n - 1 - i] = (x, w);
        }
        rule
    })
}

fn gauss<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<f64> {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut sum = 0.0;
    for &(x, w) in gauss_legendre() {
        let t = mid + half * x;
        let v = f(t);
        if !v.is_finite() {
            return Err(Error::NonFinite { at: t });
        }
        sum += w * v;
    }
    Ok(sum * half)
}

struct Panel {
    a: f64,
    b: f64,
    left: f64,
    right: f64,
    error: f64,
}

impl Panel {
    fn new<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, whole: f64) -> Result<Self> {
        let m = 0.5 * (a + b);
        let left = gauss(f, a, m)?;
        let right = gauss(f, m, b)?;
        Ok(Self {
            a,
            b,
            left,
            right,
            error: (left + right - whole).abs(),
        })
    }

    fn value(&self) -> f64 {
        self.left + self.right
    }
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Globally adaptive Gauss-Legendre integration of `f` over `[a, b]`.
///
/// Each panel is estimated by the 20-point rule on the whole panel and on its
/// two halves; the difference is the panel's error estimate and the halved
/// value is kept. The panel with the largest estimate is split until the
/// summed estimate drops below `max(abs_tol, rel_tol * |I|)`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain(format!("finite interval required, got [{a}, {b}]")));
    }
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        return integrate(f, b, a, spec).map(|v| -v);
    }

    let mut heap = BinaryHeap::new();
    let width = (b - a) / INITIAL_PANELS as f64;
    for i in 0..INITIAL_PANELS {
        let lo = a + width * i as f64;
        let hi = if i + 1 == INITIAL_PANELS { b } else { lo + width };
        let whole = gauss(&f, lo, hi)?;
        heap.push(Panel::new(&f, lo, hi, whole)?);
    }

    let mut subdivisions = 0;
    loop {
        let (total, error) = heap
            .iter()
            .fold((0.0, 0.0), |(v, e), p| (v + p.value(), e + p.error));
        let tolerance = spec.abs_tol.max(spec.rel_tol * total.abs());
        if error <= tolerance {
            return Ok(total);
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(Error::NonConvergence {
                estimate: error,
                tolerance,
                subdivisions,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let m = 0.5 * (worst.a + worst.b);
        if !(worst.a < m && m < worst.b) {
            // Panel shrunk to adjacent floats; nothing left to refine.
            return Err(Error::NonConvergence {
                estimate: error,
                tolerance,
                subdivisions,
            });
        }
        heap.push(Panel::new(&f, worst.a, m, worst.left)?);
        heap.push(Panel::new(&f, m, worst.b, worst.right)?);
        subdivisions += 1;
    }
}

/// Integral of `f` over `(a, ∞)` through the map ω = a + t/(1 − t), t ∈ (0, 1).
pub fn integrate_from<F: Fn(f64) -> f64>(f: F, a: f64, spec: QuadratureSpec) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::Domain(format!("finite lower limit required, got {a}")));
    }
    let mapped = |t: f64| {
        let s = 1.0 - t;
        let v = f(a + t / s);
        // The rule never samples t = 1, but far tails may underflow to 0 * inf.
        if v == 0.0 {
            0.0
        } else {
            v / (s * s)
        }
    };
    integrate(mapped, 0.0, 1.0, spec)
}

/// Integral of `f` over `(0, ∞)`.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: F, spec: QuadratureSpec) -> Result<f64> {
    integrate_from(f, 0.0, spec)
}
