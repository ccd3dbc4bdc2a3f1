//! Dense circuit assembly and spectral matrix functions used as oracles.

use ndarray::Array2;

use crate::circuits::Circuit;
use crate::error::{argument, Result};
use crate::sim::eigen::hermitian_eigensystem;
use crate::sim::StateVector;
use crate::C64;

/// Largest register for which a dense unitary is assembled.
pub const MAX_DENSE_QUBITS: usize = 12;

/// Multiplies out a circuit into a dense `2^n × 2^n` unitary.
///
/// Column `j` is the circuit applied to basis state `j`, so the result is the
/// product of embedded gate matrices in application order.
pub fn circuit_to_unitary(circuit: &Circuit, num_qubits: usize) -> Result<Array2<C64>> {
    if num_qubits > MAX_DENSE_QUBITS {
        return Err(crate::Error::Capacity(format!(
            "dense unitaries are limited to {MAX_DENSE_QUBITS} qubits"
        )));
    }
    if let Some(q) = circuit.max_target() {
        if q >= num_qubits {
            return Err(argument(format!(
                "circuit targets qubit {q} but only {num_qubits} qubits were requested"
            )));
        }
    }
    let dim = 1usize << num_qubits;
    let mut unitary = Array2::from_elem((dim, dim), C64::new(0.0, 0.0));
    for col in 0..dim {
        let mut state = StateVector::basis(num_qubits, col)?;
        circuit.apply(&mut state)?;
        for (row, amp) in state.amplitudes().iter().enumerate() {
            unitary[[row, col]] = *amp;
        }
    }
    Ok(unitary)
}

/// Evaluates `f(A) = V f(Λ) V†` for a Hermitian matrix `A = V Λ V†`.
pub fn hermitian_function(matrix: &Array2<C64>, f: impl Fn(f64) -> C64) -> Result<Array2<C64>> {
    let system = hermitian_eigensystem(matrix)?;
    let values: Vec<C64> = system.values.iter().map(|&v| f(v)).collect();
    let v = &system.vectors;
    let scaled = Array2::from_shape_fn(v.dim(), |(r, c)| v[[r, c]] * values[c]);
    Ok(scaled.dot(&v.t().mapv(|z| z.conj())))
}

/// Applies a dense matrix to a statevector.
pub fn apply_dense(matrix: &Array2<C64>, state: &StateVector) -> Result<StateVector> {
    if matrix.dim() != (state.amplitudes().len(), state.amplitudes().len()) {
        return Err(argument("matrix does not match state dimension"));
    }
    let amps = matrix.dot(&ndarray::ArrayView1::from(state.amplitudes()));
    StateVector::normalized(state.num_qubits(), amps.to_vec())
}

/// Conjugate transpose of a dense matrix.
pub fn adjoint(matrix: &Array2<C64>) -> Array2<C64> {
    matrix.t().mapv(|z| z.conj())
}

/// Largest entrywise modulus of `a - b`.
pub fn max_abs_difference(a: &Array2<C64>, b: &Array2<C64>) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Largest modulus among off-diagonal entries.
pub fn max_off_diagonal(matrix: &Array2<C64>) -> f64 {
    matrix
        .indexed_iter()
        .filter(|((r, c), _)| r != c)
        .map(|(_, z)| z.norm())
        .fold(0.0, f64::max)
}

/// `|Tr(A† B)|`, equal to the dimension when `A` and `B` agree up to phase.
pub fn phase_insensitive_overlap(a: &Array2<C64>, b: &Array2<C64>) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum::<C64>().norm()
}
