//! Laplacian-state and thermofield-double preparation.

use crate::circuits::{Circuit, GateKind};
use crate::error::{argument, Result};
use crate::model::ModeTable;

/// One Laplace gate per energy qubit.
///
/// On the all-zeros register it prepares the product state whose amplitude
/// on energy bitstring `E` is `e^{−βE/2}/√Z`. A gate `L(b, w)` weights the
/// excited state by `e^{−bw}` relative to the ground state, so each qubit
/// receives `L(β/2, w)`.
pub fn build_laplacian(table: &ModeTable, beta: f64) -> Result<Circuit> {
    if !beta.is_finite() || beta < 0.0 {
        return Err(argument(format!("beta must be finite and non-negative, got {beta}")));
    }
    let mut circuit = Circuit::new(table.modes());
    for (q, &frequency) in table.energy_frequencies().iter().enumerate() {
        circuit.push(
            GateKind::Laplace {
                beta: 0.5 * beta,
                frequency,
            },
            &[q],
        )?;
    }
    Ok(circuit)
}

/// Thermofield double on `2m` qubits for an `m`-mode table.
///
/// The Laplacian state is prepared on the left register (wires `0..m`) and
/// each left qubit is copied onto its mirror `m + i` by a CNOT, giving
/// `Σ_E √(e^{−βE}/Z) |E⟩_L |E⟩_R` in the energy basis.
pub fn build_tfd(table: &ModeTable, beta: f64) -> Result<Circuit> {
    let m = table.modes();
    let mut circuit = Circuit::new(2 * m);
    circuit.append(&build_laplacian(table, beta)?)?;
    for i in 0..m {
        circuit.push(GateKind::Cnot, &[i, m + i])?;
    }
    Ok(circuit)
}
