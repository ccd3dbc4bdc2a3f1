//! Momentum-space coarse graining.
//!
//! The coarse-graining circuit returns the chain to momentum space, moves
//! the kept modes onto the first `keep` wires and applies the Fourier
//! transform of a `keep`-site chain to them. Tracing out the remaining
//! wires leaves the low-momentum state on a shorter position-space chain.
//!
//! The kept modes are the pairs `±j/n` for `1 ≤ j < keep/2` and the two
//! self-paired momenta `0` and `1/2`, which share the last pair of wires in
//! every canonical layout.

use crate::circuits::{build_fourier, momentum_reorder_network, Circuit};
use crate::error::{argument, Result};
use crate::model::{MomentumLayout, ModelParams};
use crate::sim::{DensityMatrix, PartialTrace, StateVector};

fn check_keep(params: &ModelParams, keep: usize) -> Result<()> {
    params.require_radix2()?;
    if keep < 2 || !keep.is_power_of_two() || keep > params.n() {
        return Err(argument(format!(
            "kept mode count must be a power of two between 2 and {}, got {keep}",
            params.n()
        )));
    }
    Ok(())
}

/// Layout with the kept modes on wires `0..keep` in the canonical order of
/// a `keep`-mode block, followed by the discarded pairs.
pub fn coarse_layout(n: usize, keep: usize) -> Result<MomentumLayout> {
    if keep < 2 || !keep.is_multiple_of(2) || keep > n || !n.is_multiple_of(2) {
        return Err(argument(format!("cannot keep {keep} of {n} modes")));
    }
    let mut labels = Vec::with_capacity(n);
    for j in 1..keep / 2 {
        labels.push(j);
        labels.push(n - j);
    }
    labels.push(n / 2);
    labels.push(0);
    for j in keep / 2..n / 2 {
        labels.push(j);
        labels.push(n - j);
    }
    MomentumLayout::from_wire_labels(labels)
}

/// The coarse-graining circuit on `n` wires.
pub fn build_rg(params: &ModelParams, keep: usize) -> Result<Circuit> {
    check_keep(params, keep)?;
    let n = params.n();
    let mut circuit = build_fourier(n)?.inverse();
    let from = MomentumLayout::canonical(n)?;
    circuit.append(&momentum_reorder_network(&from, &coarse_layout(n, keep)?)?)?;
    let coarse: Vec<usize> = (0..keep).collect();
    circuit.append_mapped(&build_fourier(keep)?, &coarse)?;
    Ok(circuit)
}

/// Applies [`build_rg`] and traces out the discarded wires, returning the
/// state of the `keep`-site chain.
pub fn coarse_grain(state: &StateVector, params: &ModelParams, keep: usize) -> Result<DensityMatrix> {
    if state.num_qubits() != params.n() {
        return Err(argument(format!(
            "state has {} qubits but the chain has {} sites",
            state.num_qubits(),
            params.n()
        )));
    }
    let mut moved = state.clone();
    build_rg(params, keep)?.apply(&mut moved)?;
    let kept: Vec<usize> = (0..keep).collect();
    moved.partial_trace(&kept)
}

/// Position-space state of the full chain whose momentum content is the
/// `keep`-qubit state `low` on the kept modes, with every other mode empty.
///
/// Qubit `w` of `low` is the kept mode on wire `w` of the canonical
/// `keep`-mode layout.
pub fn below_cutoff_state(params: &ModelParams, keep: usize, low: &StateVector) -> Result<StateVector> {
    check_keep(params, keep)?;
    if low.num_qubits() != keep {
        return Err(argument(format!("expected a {keep}-qubit state, got {}", low.num_qubits())));
    }
    let n = params.n();
    let wire_of = |w: usize| if w + 2 < keep { w } else { n - keep + w };
    let mut amplitudes = vec![crate::C64::new(0.0, 0.0); 1 << n];
    for (index, &a) in low.amplitudes().iter().enumerate() {
        let mut full = 0usize;
        for w in 0..keep {
            if index >> (keep - 1 - w) & 1 == 1 {
                full |= 1 << (n - 1 - wire_of(w));
            }
        }
        amplitudes[full] = a;
    }
    let mut state = StateVector::from_amplitudes(n, amplitudes)?;
    build_fourier(n)?.apply(&mut state)?;
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::GateKind;
    use crate::sim::gate_matrix::max_identity_deviation;
    use crate::sim::unitary::adjoint;
    use crate::sim::circuit_to_unitary;
    use crate::C64;

    fn params() -> ModelParams {
        ModelParams::ground(8, 1.0, 1.0).unwrap()
    }

    #[test]
    fn coarse_layout_n8() {
        assert_eq!(coarse_layout(8, 4).unwrap().labels(), &[1, 7, 4, 0, 2, 6, 3, 5]);
        assert_eq!(coarse_layout(8, 8).unwrap(), MomentumLayout::canonical(8).unwrap());
    }

    #[test]
    fn reorder_moves_the_fixed_pair_past_whole_pairs() {
        let n = 8;
        let network =
            momentum_reorder_network(&MomentumLayout::canonical(n).unwrap(), &coarse_layout(n, 4).unwrap()).unwrap();
        // Each self-paired mode crosses the four discarded wires.
        assert_eq!(network.count(|k| matches!(k, GateKind::Fswap)), 8);
    }

    #[test]
    fn circuit_is_unitary_and_fixes_vacuum() {
        let u = circuit_to_unitary(&build_rg(&params(), 4).unwrap(), 8).unwrap();
        assert!(max_identity_deviation(&adjoint(&u).dot(&u)) < 1e-10);
        assert!((u[[0, 0]] - C64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn vacuum_coarse_grains_to_vacuum() {
        let rho = coarse_grain(&StateVector::zero(8).unwrap(), &params(), 4).unwrap();
        assert_eq!(rho.num_qubits(), 4);
        assert!((rho.purity() - 1.0).abs() < 1e-10);
        assert!((rho.entries()[[0, 0]].re - 1.0).abs() < 1e-10);
    }

    #[test]
    fn below_cutoff_particle_stays_pure() {
        for wire in 0..4 {
            let low = StateVector::with_occupied(4, &[wire]).unwrap();
            let state = below_cutoff_state(&params(), 4, &low).unwrap();
            let rho = coarse_grain(&state, &params(), 4).unwrap();
            assert!((rho.purity() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn coarse_state_is_the_short_chain_transform() {
        let low = StateVector::with_occupied(4, &[0, 3]).unwrap();
        let state = below_cutoff_state(&params(), 4, &low).unwrap();
        let rho = coarse_grain(&state, &params(), 4).unwrap();
        let mut expected = low.clone();
        build_fourier(4).unwrap().apply(&mut expected).unwrap();
        let overlap = DensityMatrix::from_pure(&expected).overlap(&rho).unwrap();
        assert!((overlap - 1.0).abs() < 1e-10);
    }

    #[test]
    fn rejects_bad_cutoffs() {
        for keep in [0, 3, 6, 16] {
            assert!(build_rg(&params(), keep).is_err());
        }
    }
}
