//! Least-squares scaling exponents on log-log axes.

use crate::{McError, SampleEstimate};
use serde::Serialize;
use serde_json::{json, Value};

/// `log p ≈ intercept + slope · log n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExponentFit {
    /// Fitted exponent of `n`.
    pub slope: f64,
    /// Intercept on the natural-log scale.
    pub intercept: f64,
    /// Standard error of the slope (0 for a perfect fit).
    pub stderr: f64,
    /// `(n, p)` pairs used.
    pub points: Vec<(f64, f64)>,
}

impl ExponentFit {
    /// `{"slope", "intercept", "stderr", "points": [[n, p], ..]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "slope": self.slope,
            "intercept": self.intercept,
            "stderr": self.stderr,
            "points": self.points.iter().map(|&(n, p)| json!([n, p])).collect::<Vec<_>>(),
        })
    }

    /// Fitted value at `n`.
    pub fn predict(&self, n: f64) -> f64 {
        (self.intercept + self.slope * n.ln()).exp()
    }
}

/// Ordinary least squares of `ln p` on `ln n`. Needs at least three points,
/// all with `n > 0` and `p > 0`.
pub fn fit_exponent(points: &[(f64, f64)]) -> Result<ExponentFit, McError> {
    if points.iter().any(|&(n, p)| !(n > 0.0 && p > 0.0 && n.is_finite() && p.is_finite())) {
        return Err(McError::InvalidRequest("fit points need positive, finite n and p".into()));
    }
    if points.len() < 3 {
        return Err(McError::TooFewPoints(points.len()));
    }
    let k = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(McError::InvalidRequest("fit needs at least two distinct n".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = xs.iter().zip(&ys).map(|(x, y)| (y - intercept - slope * x).powi(2)).sum();
    let stderr = (sse / (k - 2.0) / sxx).sqrt();
    Ok(ExponentFit { slope, intercept, stderr, points: points.to_vec() })
}

/// Fits the estimates whose Wilson lower bound is positive; the rest are
/// dropped because a zero estimate has no logarithm.
pub fn fit_estimates(estimates: &[SampleEstimate]) -> Result<ExponentFit, McError> {
    let usable: Vec<(f64, f64)> =
        estimates.iter().filter(|e| e.lo > 0.0).map(|e| (e.n as f64, e.p_hat)).collect();
    fit_exponent(&usable)
}
