//! The Bogoliubov layer and the full diagonalizing circuit.

use std::f64::consts::PI;

use crate::circuits::{build_fourier, Circuit, GateKind};
use crate::error::Result;
use crate::model::{FixedPairGate, ModeTable, ModelParams};

/// One Bogoliubov rotation per opposite-momentum pair, plus the gate on the
/// self-paired wires described by [`FixedPairGate`].
pub fn build_bog_layer(table: &ModeTable) -> Result<Circuit> {
    let mut circuit = Circuit::new(table.modes());
    for pair in table.pairs() {
        circuit.push(GateKind::Bog(pair.angle), &[pair.wires.0, pair.wires.1])?;
    }
    let last = table.modes() - 1;
    match table.fixed_gate() {
        FixedPairGate::BothFilled => circuit.push(GateKind::Bog(PI), &[last - 1, last])?,
        FixedPairGate::Flip(wire) => circuit.push(GateKind::X, &[wire])?,
        FixedPairGate::Empty => {}
    }
    Ok(circuit)
}

/// The diagonalizing circuit for a block of momentum modes: the Bogoliubov
/// layer followed by the Fourier transform on the block.
///
/// It maps energy-basis states to position-basis states and sends the
/// all-zeros register to the ground state.
pub fn build_udis_for(table: &ModeTable) -> Result<Circuit> {
    let mut circuit = build_bog_layer(table)?;
    circuit.append(&build_fourier(table.modes())?)?;
    Ok(circuit)
}

/// The diagonalizing circuit of the full chain.
pub fn build_udis(params: &ModelParams) -> Result<Circuit> {
    params.require_radix2()?;
    build_udis_for(&ModeTable::new(params)?)
}
