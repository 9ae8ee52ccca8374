/// Central-difference derivative with one Richardson step.
///
/// Combines the central differences at `h0` and `h0 / 2`; the truncation error
/// is O(h0⁴). `f` is sampled in `[x - h0, x + h0]`.
pub fn derivative<F: Fn(f64) -> f64>(f: F, x: f64, h0: f64) -> f64 {
    let central = |h: f64| (f(x + h) - f(x - h)) / (2.0 * h);
    let coarse = central(h0);
    let fine = central(0.5 * h0);
    (4.0 * fine - coarse) / 3.0
}
