//! Fermionic swap networks that move momentum modes between layouts.

use crate::circuits::{Circuit, GateKind};
use crate::error::{argument, Result};
use crate::model::MomentumLayout;

/// Adjacent fermionic swaps carrying every mode from its wire in `from` to
/// its wire in `to`.
///
/// Each mode is bubbled into place in target wire order, so the identity
/// permutation gives an empty circuit.
pub fn momentum_reorder_network(from: &MomentumLayout, to: &MomentumLayout) -> Result<Circuit> {
    if from.len() != to.len() {
        return Err(argument(format!(
            "layouts have different mode counts ({} and {})",
            from.len(),
            to.len()
        )));
    }
    let mut current = from.labels().to_vec();
    let mut circuit = Circuit::new(from.len());
    for (i, &k) in to.labels().iter().enumerate() {
        let mut j = current.iter().position(|&c| c == k).expect("layouts are permutations");
        while j > i {
            current.swap(j - 1, j);
            circuit.push(GateKind::Fswap, &[j - 1, j])?;
            j -= 1;
        }
    }
    Ok(circuit)
}
