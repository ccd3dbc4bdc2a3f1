//! Clifford-algebra generators on qubit registers.

use ndarray::Array2;

use crate::error::{argument, Result};
use crate::gates::dense::{identity, kron, pauli_matrix};
use crate::sim::Pauli;
use crate::C64;

/// The `2n` generators of the Clifford algebra on `n` qubits.
#[derive(Debug, Clone)]
pub struct GammaSet {
    /// Qubit count.
    pub n: usize,
    /// The `2n` Hermitian, unitary, pairwise anticommuting matrices.
    pub matrices: Vec<Array2<C64>>,
}

/// Largest register for which the generators are materialized densely.
pub const MAX_GAMMA_QUBITS: usize = 8;

/// Builds the generators for an even qubit count between 2 and 8.
///
/// The two-qubit set is `(I⊗X, I⊗Y, X⊗Z, Y⊗Z)`. Each step to `n` qubits
/// keeps the previous set behind two identity factors and appends the
/// two-qubit set followed by a parity string `Z^{⊗(n-2)}`, so the generators
/// satisfy `{γ_i, γ_j} = 2 δ_ij I`.
pub fn gamma_matrices(n: usize) -> Result<GammaSet> {
    if !n.is_multiple_of(2) || !(2..=MAX_GAMMA_QUBITS).contains(&n) {
        return Err(argument(format!(
            "gamma matrices need an even qubit count in 2..={MAX_GAMMA_QUBITS}, got {n}"
        )));
    }
    let x = pauli_matrix(Pauli::X);
    let y = pauli_matrix(Pauli::Y);
    let z = pauli_matrix(Pauli::Z);
    let i2 = identity(2);
    let base = vec![kron(&i2, &x), kron(&i2, &y), kron(&x, &z), kron(&y, &z)];
    let mut current = base.clone();
    let mut parity = identity(1);
    for _ in (4..=n).step_by(2) {
        parity = kron(&parity, &kron(&z, &z));
        let lifted = identity(4);
        let mut next: Vec<Array2<C64>> = current.iter().map(|g| kron(&lifted, g)).collect();
        next.extend(base.iter().map(|g| kron(g, &parity)));
        current = next;
    }
    Ok(GammaSet {
        n,
        matrices: current,
    })
}

impl GammaSet {
    /// The spinor generator `-(i/4)[γ_a, γ_b]` for one-based indices.
    pub fn rotation_generator(&self, a: usize, b: usize) -> Array2<C64> {
        let ga = &self.matrices[a - 1];
        let gb = &self.matrices[b - 1];
        (ga.dot(gb) - gb.dot(ga)) * C64::new(0.0, -0.25)
    }
}
