use std::ops::{Mul, Sub};

use crate::error::{Error, Result};

/// Central difference `(f(t + h) − f(t − h))/2h`.
pub fn finite_difference<T, F>(f: F, t: f64, h: f64) -> T
where
    F: Fn(f64) -> T,
    T: Sub<Output = T> + Mul<f64, Output = T>,
{
    (f(t + h) - f(t - h)) * (0.5 / h)
}

/// `n + 1` equally spaced points on `[0, t_end]`, with `n = ceil(t_end/dt)`.
pub fn uniform_grid(t_end: f64, dt: f64) -> Result<Vec<f64>> {
    if !(dt > 0.0 && dt.is_finite() && t_end > 0.0 && t_end.is_finite()) {
        return Err(Error::Grid(format!(
            "need 0 < dt and 0 < t_end, got dt={dt}, t_end={t_end}"
        )));
    }
    let n = ((t_end / dt) - 1e-9).ceil().max(2.0) as usize;
    let step = t_end / n as f64;
    Ok((0..=n).map(|k| k as f64 * step).collect())
}

/// Integral of uniformly sampled `rates` over `times`.
///
/// Composite Simpson for an odd number of samples; for an even number the
/// last interval is added with the trapezoid rule.
pub fn integrate_rate(times: &[f64], rates: &[f64]) -> Result<f64> {
    if times.len() != rates.len() {
        return Err(Error::Grid(format!(
            "{} times but {} rates",
            times.len(),
            rates.len()
        )));
    }
    if times.len() < 3 {
        return Err(Error::Grid(format!(
            "need at least 3 samples, got {}",
            times.len()
        )));
    }
    let h = (times[times.len() - 1] - times[0]) / (times.len() - 1) as f64;
    if h.is_nan() || h <= 0.0 {
        return Err(Error::Grid("times must be increasing".into()));
    }
    for (k, &t) in times.iter().enumerate() {
        let expected = times[0] + k as f64 * h;
        if (t - expected).abs() > 1e-9 * h.max(expected.abs()) {
            return Err(Error::Grid(format!(
                "sample {k} at t={t} is off the uniform grid"
            )));
        }
    }
    let simpson_len = if rates.len() % 2 == 1 {
        rates.len()
    } else {
        rates.len() - 1
    };
    let body = &rates[..simpson_len];
    let interior: f64 = body[1..simpson_len - 1]
        .iter()
        .enumerate()
        .map(|(k, r)| if k % 2 == 0 { 4.0 * r } else { 2.0 * r })
        .sum();
    let mut total = h / 3.0 * (body[0] + interior + body[simpson_len - 1]);
    if simpson_len < rates.len() {
        total += h / 2.0 * (rates[simpson_len - 1] + rates[simpson_len]);
    }
    Ok(total)
}
