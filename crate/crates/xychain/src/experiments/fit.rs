//! Least-squares fits of entropy curves to the critical chord-length form
//! and to a straight line.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{argument, Result};
use crate::experiments::EntropyCurve;

/// Fit model selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FitModel {
    /// `S = (c/3) log₂((L/π) sin(πℓ/L)) + c₁` on `ℓ = 1, …, L−1`.
    Log,
    /// `S = a ℓ + b` on `ℓ = 1, …, ⌊L/2⌋`.
    Linear,
}

/// Fitted coefficients of the selected model and goodness of both models.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FitResult {
    /// Model whose coefficients are reported.
    pub model: FitModel,
    /// Central charge for the log model; slope for the linear model.
    pub c_fit: f64,
    /// Offset `c₁` for the log model; intercept for the linear model.
    pub c1: f64,
    /// Coefficient of determination of the log model.
    pub r_squared_log: f64,
    /// Coefficient of determination of the linear model.
    pub r_squared_linear: f64,
}

/// Smallest number of interior points accepted by [`critical_fit`].
pub const MIN_INTERIOR_POINTS: usize = 4;

struct LineFit {
    slope: f64,
    intercept: f64,
    r_squared: f64,
}

fn fit_line(x: &[f64], y: &[f64]) -> LineFit {
    let count = x.len() as f64;
    let mean_x = x.iter().sum::<f64>() / count;
    let mean_y = y.iter().sum::<f64>() / count;
    let sxx: f64 = x.iter().map(|v| (v - mean_x).powi(2)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mean_x) * (b - mean_y)).sum();
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let intercept = mean_y - slope * mean_x;
    let residual: f64 = x.iter().zip(y).map(|(a, b)| (b - slope * a - intercept).powi(2)).sum();
    let total: f64 = y.iter().map(|b| (b - mean_y).powi(2)).sum();
    let r_squared = if total > 0.0 {
        (1.0 - residual / total).clamp(0.0, 1.0)
    } else if residual <= f64::EPSILON {
        1.0
    } else {
        0.0
    };
    LineFit {
        slope,
        intercept,
        r_squared,
    }
}

/// Chord-length abscissa `log₂((L/π) sin(πℓ/L))`.
pub fn chord_log(length: usize, total: usize) -> f64 {
    let l = total as f64;
    ((l / PI) * (PI * length as f64 / l).sin()).log2()
}

/// Fits an entropy curve, excluding the endpoints `ℓ = 0` and `ℓ = L`.
pub fn critical_fit(curve: &EntropyCurve, model: FitModel) -> Result<FitResult> {
    let total = curve.total_length();
    if total < MIN_INTERIOR_POINTS + 1 {
        return Err(argument(format!(
            "fit needs at least {MIN_INTERIOR_POINTS} interior points, curve has {}",
            total.saturating_sub(1)
        )));
    }
    let interior: Vec<usize> = (1..total).collect();
    let x_log: Vec<f64> = interior.iter().map(|&l| chord_log(l, total) / 3.0).collect();
    let y_log: Vec<f64> = interior.iter().map(|&l| curve.entropies[l]).collect();
    let log = fit_line(&x_log, &y_log);
    let half: Vec<usize> = (1..=total / 2).collect();
    let x_lin: Vec<f64> = half.iter().map(|&l| l as f64).collect();
    let y_lin: Vec<f64> = half.iter().map(|&l| curve.entropies[l]).collect();
    let linear = fit_line(&x_lin, &y_lin);
    let (c_fit, c1) = match model {
        FitModel::Log => (log.slope, log.intercept),
        FitModel::Linear => (linear.slope, linear.intercept),
    };
    Ok(FitResult {
        model,
        c_fit,
        c1,
        r_squared_log: log.r_squared,
        r_squared_linear: linear.r_squared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_synthetic_chord_curve() {
        let total = 12;
        let entropies = (0..=total)
            .map(|l| if l == 0 || l == total { 0.0 } else { 0.5 / 3.0 * chord_log(l, total) + 0.3 })
            .collect();
        let fit = critical_fit(&EntropyCurve::from_entropies(entropies), FitModel::Log).unwrap();
        assert!((fit.c_fit - 0.5).abs() < 1e-9);
        assert!((fit.c1 - 0.3).abs() < 1e-9);
        assert!((fit.r_squared_log - 1.0).abs() < 1e-12);
    }

    #[test]
    fn recovers_a_line() {
        let entropies = (0..=8).map(|l| 0.7 * l as f64 + 0.1).collect();
        let fit = critical_fit(&EntropyCurve::from_entropies(entropies), FitModel::Linear).unwrap();
        assert!((fit.c_fit - 0.7).abs() < 1e-12 && (fit.c1 - 0.1).abs() < 1e-12);
        assert!((fit.r_squared_linear - 1.0).abs() < 1e-12);
        assert!((0.0..=1.0).contains(&fit.r_squared_log));
    }

    #[test]
    fn rejects_short_curves() {
        let curve = EntropyCurve::from_entropies(vec![0.0, 0.5, 0.6, 0.5, 0.0]);
        assert!(critical_fit(&curve, FitModel::Log).is_err());
    }
}
