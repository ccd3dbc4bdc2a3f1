//! Gate constructors: standard one- and two-qubit gates, the matchgate
//! rotations of [`su2`], and the named two-local gates used by the circuit
//! builders (Bogoliubov, Fourier, phase, fermionic swap and Laplace gates).

pub mod dense;
pub mod gamma;
pub mod su2;

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::sim::GateMatrix;
use crate::C64;

pub use gamma::{gamma_matrices, GammaSet};
pub use su2::{sigma_pm, u_pm_circuit, u_pm_dense, Axis, Sign, Su2Axis};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn unit(angle: f64) -> C64 {
    C64::from_polar(1.0, angle)
}

/// Pauli X.
pub fn pauli_x() -> GateMatrix {
    GateMatrix::one([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]])
}

/// Pauli Z.
pub fn pauli_z() -> GateMatrix {
    GateMatrix::one([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]])
}

/// Hadamard.
pub fn hadamard() -> GateMatrix {
    let h = c(FRAC_1_SQRT_2, 0.0);
    GateMatrix::one([[h, h], [h, -h]])
}

/// `S = diag(1, i)`.
pub fn s_gate() -> GateMatrix {
    phase(PI / 2.0)
}

/// `S† = diag(1, -i)`.
pub fn s_dagger() -> GateMatrix {
    phase(-PI / 2.0)
}

/// `diag(1, e^{iα})`: a phase on the occupied state.
pub fn phase(alpha: f64) -> GateMatrix {
    GateMatrix::one([[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), unit(alpha)]])
}

/// `exp(i a Z) = diag(e^{ia}, e^{-ia})`.
pub fn z_phase(a: f64) -> GateMatrix {
    GateMatrix::one([[unit(a), c(0.0, 0.0)], [c(0.0, 0.0), unit(-a)]])
}

/// CNOT with the first target as control.
pub fn cnot() -> GateMatrix {
    let o = c(0.0, 0.0);
    let l = c(1.0, 0.0);
    GateMatrix::two([[l, o, o, o], [o, l, o, o], [o, o, o, l], [o, o, l, o]])
}

/// Bogoliubov rotation: `cos(θ/2)` on `|00⟩, |11⟩`, `i sin(θ/2)` coupling
/// them, identity on the single-occupation states.
pub fn bog_gate(theta: f64) -> GateMatrix {
    let (s, co) = (0.5 * theta).sin_cos();
    let o = c(0.0, 0.0);
    let l = c(1.0, 0.0);
    let cs = c(co, 0.0);
    let is = c(0.0, s);
    GateMatrix::two([[cs, o, o, is], [o, l, o, o], [o, o, l, o], [is, o, o, cs]])
}

/// `R(θ) = e^{iθ/2} U_Z⁺(θ) U_Z⁻(θ)`, a phase `e^{iθ}` whenever the first
/// wire is occupied.
pub fn phase_gate_r(theta: f64) -> GateMatrix {
    let plus = u_pm_dense(Su2Axis::new(Axis::Z, Sign::Plus), theta);
    let minus = u_pm_dense(Su2Axis::new(Axis::Z, Sign::Minus), theta);
    let product = plus.matrix().dot(minus.matrix()) * unit(0.5 * theta);
    GateMatrix::from_unitary(product)
}

/// Two-mode Fourier butterfly `F_p = R(2πp + π) · U_Y⁻(π/2)`.
///
/// On the single-particle states `(|10⟩, |01⟩)` it acts as
/// `(1/√2) [[e^{iφ}, e^{iφ}], [-1, 1]]` with `φ = 2πp + π`, and it fixes
/// `|00⟩`.
pub fn fourier_gate(p: f64) -> GateMatrix {
    let rotation = u_pm_dense(Su2Axis::new(Axis::Y, Sign::Minus), PI / 2.0);
    let phase = phase_gate_r(2.0 * PI * p + PI);
    GateMatrix::from_unitary(phase.matrix().dot(rotation.matrix()))
}

/// Fermionic swap `R(π) · U_Y⁻(π)`: exchanges the two wires and multiplies
/// `|11⟩` by `-1`.
pub fn fswap_gate() -> GateMatrix {
    let rotation = u_pm_dense(Su2Axis::new(Axis::Y, Sign::Minus), PI);
    GateMatrix::from_unitary(phase_gate_r(PI).matrix().dot(rotation.matrix()))
}

/// Laplace gate `(e^{-βw/2} X + e^{βw/2} Z) / √(e^{-βw} + e^{βw})`.
///
/// Acting on `|0⟩` its excited amplitude is `e^{-βw}` times the ground
/// amplitude. The normalization is evaluated without overflow for
/// large `βw`.
pub fn laplace_gate(beta: f64, w: f64) -> GateMatrix {
    let a = beta * w;
    let (x_weight, z_weight) = if a >= 0.0 {
        let z = 1.0 / (1.0 + (-2.0 * a).exp()).sqrt();
        ((-a).exp() * z, z)
    } else {
        let x = 1.0 / (1.0 + (2.0 * a).exp()).sqrt();
        (x, a.exp() * x)
    };
    GateMatrix::one([[c(z_weight, 0.0), c(x_weight, 0.0)], [c(x_weight, 0.0), c(-z_weight, 0.0)]])
}
