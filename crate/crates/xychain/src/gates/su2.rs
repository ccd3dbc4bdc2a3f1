//! The `SU(2)⁺ × SU(2)⁻` generators of two-qubit matchgates and their
//! exponentials, both dense and decomposed into standard gates.

use ndarray::Array2;

use crate::circuits::{Circuit, GateKind};
use crate::gates::dense::{identity, kron, pauli_matrix};
use crate::sim::{GateMatrix, Pauli};
use crate::C64;

/// Rotation axis of an `SU(2)±` factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Generated by `(-XX ± YY)/2`.
    X,
    /// Generated by `(YX ± XY)/2`.
    Y,
    /// Generated by `(ZI ± IZ)/2`.
    Z,
}

/// Which of the two commuting `SU(2)` factors a generator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    /// Acts on the even-parity block `{|00⟩, |11⟩}`.
    Plus,
    /// Acts on the odd-parity block `{|01⟩, |10⟩}`.
    Minus,
}

/// An axis together with the factor it rotates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Su2Axis {
    /// Rotation axis.
    pub axis: Axis,
    /// Factor selector.
    pub sign: Sign,
}

impl Su2Axis {
    /// Creates an axis/sign pair.
    pub const fn new(axis: Axis, sign: Sign) -> Self {
        Self { axis, sign }
    }

    /// All six axis/sign combinations.
    pub fn all() -> [Su2Axis; 6] {
        let mut out = [Su2Axis::new(Axis::X, Sign::Plus); 6];
        let mut i = 0;
        for axis in [Axis::X, Axis::Y, Axis::Z] {
            for sign in [Sign::Plus, Sign::Minus] {
                out[i] = Su2Axis::new(axis, sign);
                i += 1;
            }
        }
        out
    }

    fn sign_value(self) -> f64 {
        match self.sign {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// The Hermitian 4×4 generator `Σ^±` for the given axis.
pub fn sigma_pm(which: Su2Axis) -> Array2<C64> {
    let s = which.sign_value();
    let p = |a: Pauli| pauli_matrix(a);
    let i2 = identity(2);
    let (first, second, first_weight) = match which.axis {
        Axis::X => (kron(&p(Pauli::X), &p(Pauli::X)), kron(&p(Pauli::Y), &p(Pauli::Y)), -1.0),
        Axis::Y => (kron(&p(Pauli::Y), &p(Pauli::X)), kron(&p(Pauli::X), &p(Pauli::Y)), 1.0),
        Axis::Z => (kron(&p(Pauli::Z), &i2), kron(&i2, &p(Pauli::Z)), 1.0),
    };
    (first * C64::new(first_weight, 0.0) + second * C64::new(s, 0.0)) * C64::new(0.5, 0.0)
}

/// Closed-form `exp(-iθΣ/2)`.
///
/// Every `Σ^±` has eigenvalues in `{-1, 0, 1}`, so
/// `exp(-iθΣ/2) = I + (cos(θ/2) - 1) Σ² - i sin(θ/2) Σ`.
pub fn u_pm_dense(which: Su2Axis, theta: f64) -> GateMatrix {
    let sigma = sigma_pm(which);
    let sigma_sq = sigma.dot(&sigma);
    let half = 0.5 * theta;
    let m = identity(4) + sigma_sq * C64::new(half.cos() - 1.0, 0.0) + sigma * C64::new(0.0, -half.sin());
    GateMatrix::from_unitary(m)
}

/// `exp(-iθΣ/2)` as a circuit of Hadamard, S, S†, CNOT and Z-phase gates.
///
/// The X and Y variants conjugate two entangling `exp(i a Z⊗Z)` rotations,
/// each realized as CNOT · `exp(i a Z)` on the target · CNOT. The Z variant
/// needs only single-qubit phases. All variants equal [`u_pm_dense`] up to a
/// global phase.
pub fn u_pm_circuit(which: Su2Axis, theta: f64) -> Circuit {
    let s = which.sign_value();
    let quarter = 0.25 * theta;
    let mut c = Circuit::new(2);
    let steps: Vec<(GateKind, &[usize])> = match which.axis {
        Axis::X => [
            vec![(GateKind::S, &[0][..]), (GateKind::S, &[1]), (GateKind::Hadamard, &[0]), (GateKind::Hadamard, &[1])],
            zz_rotation(-s * quarter),
            vec![
                (GateKind::Hadamard, &[0][..]),
                (GateKind::Hadamard, &[1]),
                (GateKind::Sdg, &[0]),
                (GateKind::Sdg, &[1]),
                (GateKind::Hadamard, &[0]),
                (GateKind::Hadamard, &[1]),
            ],
            zz_rotation(quarter),
            vec![(GateKind::Hadamard, &[0][..]), (GateKind::Hadamard, &[1])],
        ]
        .concat(),
        Axis::Y => [
            vec![(GateKind::S, &[1][..]), (GateKind::Hadamard, &[0]), (GateKind::Hadamard, &[1])],
            zz_rotation(s * quarter),
            vec![
                (GateKind::Hadamard, &[0][..]),
                (GateKind::Hadamard, &[1]),
                (GateKind::S, &[0]),
                (GateKind::Sdg, &[1]),
                (GateKind::Hadamard, &[0]),
                (GateKind::Hadamard, &[1]),
            ],
            zz_rotation(quarter),
            vec![(GateKind::Hadamard, &[0][..]), (GateKind::Hadamard, &[1]), (GateKind::Sdg, &[0])],
        ]
        .concat(),
        Axis::Z => vec![
            (GateKind::ZPhase(-quarter), &[0][..]),
            (GateKind::ZPhase(-s * quarter), &[1]),
        ],
    };
    for (kind, targets) in steps {
        c.push(kind, targets).expect("two-qubit decomposition uses valid targets");
    }
    c
}

/// `exp(i a Z⊗Z)` as CNOT, a Z phase on the target, CNOT.
fn zz_rotation(angle: f64) -> Vec<(GateKind, &'static [usize])> {
    vec![
        (GateKind::Cnot, &[0, 1][..]),
        (GateKind::ZPhase(angle), &[1]),
        (GateKind::Cnot, &[0, 1]),
    ]
}
