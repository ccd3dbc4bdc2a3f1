//! Single-mode formulas: the dispersion relation, the Bogoliubov angle and
//! the ground energy of the unshifted fermionic Hamiltonian.

use std::f64::consts::PI;

use crate::model::ModelParams;
use crate::tolerances::TOLERANCES;

/// Excitation energy `w_p = √((1 − λ cos 2πp)² + (λγ sin 2πp)²)` at
/// momentum fraction `p`.
pub fn dispersion(params: &ModelParams, p: f64) -> f64 {
    let (s, c) = (2.0 * PI * p).sin_cos();
    let a = 1.0 - params.lambda() * c;
    let b = params.lambda() * params.gamma() * s;
    a.hypot(b)
}

/// Diagonal single-particle energy `λ cos 2πp − 1` of a plane-wave mode.
pub fn hopping_energy(params: &ModelParams, p: f64) -> f64 {
    params.lambda() * (2.0 * PI * p).cos() - 1.0
}

/// Bogoliubov angle `θ_p = arccos((−1 + λ cos 2πp) / w_p)` in `[0, π]`.
///
/// A vanishing frequency (the `p = 0` mode at `λ = 1`) gives `π`, the limit
/// approached from `λ < 1`.
pub fn bogoliubov_angle(params: &ModelParams, p: f64) -> f64 {
    let w = dispersion(params, p);
    if w <= TOLERANCES.zero_frequency {
        return PI;
    }
    (hopping_energy(params, p) / w).clamp(-1.0, 1.0).acos()
}

/// Lowest eigenvalue of the fermionic Hamiltonian before its constant shift.
///
/// Each opposite-momentum pair contributes `ε − w`, and each of the two
/// self-paired modes (`p = 0` and `p = 1/2`) contributes `min(0, ε)`, where
/// `ε` is the [`hopping_energy`].
pub fn fermionic_ground_energy(params: &ModelParams) -> f64 {
    let n = params.n();
    let fraction = |k: usize| k as f64 / n as f64;
    let pairs: f64 = (1..n / 2)
        .map(|j| hopping_energy(params, fraction(j)) - dispersion(params, fraction(j)))
        .sum();
    pairs + hopping_energy(params, 0.0).min(0.0) + hopping_energy(params, 0.5).min(0.0)
}
