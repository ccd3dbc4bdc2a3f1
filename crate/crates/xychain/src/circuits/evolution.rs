//! Exact time evolution through the energy basis.
//!
//! The evolution operator is `exp(−(i/2) H t)`: in the energy basis each
//! mode qubit with frequency `w` picks up the phase `e^{−iwt/2}` when
//! excited. Conjugating this phase layer by the diagonalizing circuit gives
//! position-space evolution with no Trotter error.

use crate::circuits::{build_udis, Circuit, GateKind};
use crate::error::{argument, Result};
use crate::model::{ModeTable, ModelParams};
use crate::sim::StateVector;

/// One phase gate `diag(1, e^{−iwt/2})` per energy qubit.
pub fn build_time_evolution(table: &ModeTable, t: f64) -> Result<Circuit> {
    if !t.is_finite() {
        return Err(argument("evolution time must be finite"));
    }
    let mut circuit = Circuit::new(table.modes());
    for (q, &w) in table.energy_frequencies().iter().enumerate() {
        circuit.push(GateKind::Phase(-0.5 * w * t), &[q])?;
    }
    Ok(circuit)
}

/// Position-space evolution `U_Dis · T(t) · U_Dis†` of the full chain.
pub fn build_position_evolution(params: &ModelParams, t: f64) -> Result<Circuit> {
    let udis = build_udis(params)?;
    let table = ModeTable::new(params)?;
    let mut circuit = udis.inverse();
    circuit.append(&build_time_evolution(&table, t)?)?;
    circuit.append(&udis)?;
    Ok(circuit)
}

/// Evolves the position state with a single occupied site for time `t`.
pub fn evolve_position_state(params: &ModelParams, site: usize, t: f64) -> Result<StateVector> {
    if site >= params.n() {
        return Err(argument(format!("site {site} out of range for {} sites", params.n())));
    }
    let mut state = StateVector::with_occupied(params.n(), &[site])?;
    build_position_evolution(params, t)?.apply(&mut state)?;
    Ok(state)
}
