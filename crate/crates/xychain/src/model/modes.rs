//! Per-wire description of the energy basis: which Bogoliubov rotation acts
//! on each pair of momentum wires and which excitation energy each energy
//! qubit carries.

use std::f64::consts::FRAC_PI_2;

use crate::error::{argument, Result};
use crate::model::{bogoliubov_angle, dispersion, MomentumLayout, ModelParams};

/// An opposite-momentum pair rotated by one Bogoliubov gate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairMode {
    /// Wires `(2j−2, 2j−1)` of the pair.
    pub wires: (usize, usize),
    /// Momentum fraction of the first wire; the second carries its negative.
    pub fraction: f64,
    /// Bogoliubov angle for this pair.
    pub angle: f64,
    /// Excitation energy shared by both energy qubits of the pair.
    pub frequency: f64,
}

/// Gate placed on the last two wires, which hold the self-paired momenta
/// `1/2` (wire `n−2`) and `0` (wire `n−1`).
///
/// A self-paired mode is filled in the ground state when its angle exceeds
/// `π/2`. Both filled is a `Bog(π)` on the two wires, exactly one filled is
/// an X on that wire, and neither filled needs no gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedPairGate {
    /// `Bog(π)` on both wires.
    BothFilled,
    /// X on the given wire.
    Flip(usize),
    /// No gate.
    Empty,
}

/// Energy-basis structure of a block of `modes` momentum wires.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeTable {
    modes: usize,
    pairs: Vec<PairMode>,
    fixed: FixedPairGate,
    half_filled: bool,
    zero_filled: bool,
    frequencies: Vec<f64>,
}

impl ModeTable {
    /// Mode table of the full chain.
    pub fn new(params: &ModelParams) -> Result<Self> {
        Self::for_block(params, params.n())
    }

    /// Mode table of the lowest `modes` momenta of the chain.
    ///
    /// The block keeps the pairs with fractions `j/n` for `1 ≤ j < modes/2`
    /// together with the self-paired momenta `0` and `1/2`, laid out as in
    /// [`MomentumLayout::canonical`] for `modes` wires. Energies and angles
    /// are those of the full chain.
    pub fn for_block(params: &ModelParams, modes: usize) -> Result<Self> {
        let n = params.n();
        if modes < 2 || !modes.is_multiple_of(2) || modes > n {
            return Err(argument(format!(
                "block size must be even, at least 2 and at most {n}, got {modes}"
            )));
        }
        let mut frequencies = vec![0.0; modes];
        let pairs: Vec<PairMode> = (1..modes / 2)
            .map(|j| {
                let fraction = j as f64 / n as f64;
                let frequency = dispersion(params, fraction);
                let wires = (2 * j - 2, 2 * j - 1);
                frequencies[wires.0] = frequency;
                frequencies[wires.1] = frequency;
                PairMode {
                    wires,
                    fraction,
                    angle: bogoliubov_angle(params, fraction),
                    frequency,
                }
            })
            .collect();
        let half_wire = modes - 2;
        let zero_wire = modes - 1;
        let half_filled = bogoliubov_angle(params, 0.5) > FRAC_PI_2;
        let zero_filled = bogoliubov_angle(params, 0.0) > FRAC_PI_2;
        let (w_half, w_zero) = (dispersion(params, 0.5), dispersion(params, 0.0));
        let fixed = match (half_filled, zero_filled) {
            (true, true) => FixedPairGate::BothFilled,
            (true, false) => FixedPairGate::Flip(half_wire),
            (false, true) => FixedPairGate::Flip(zero_wire),
            (false, false) => FixedPairGate::Empty,
        };
        // Bog(π) exchanges the roles of the two wires: exciting energy qubit
        // n−2 empties the momentum-0 mode and vice versa.
        if fixed == FixedPairGate::BothFilled {
            frequencies[half_wire] = w_zero;
            frequencies[zero_wire] = w_half;
        } else {
            frequencies[half_wire] = w_half;
            frequencies[zero_wire] = w_zero;
        }
        Ok(Self {
            modes,
            pairs,
            fixed,
            half_filled,
            zero_filled,
            frequencies,
        })
    }

    /// Number of wires in the block.
    pub fn modes(&self) -> usize {
        self.modes
    }

    /// Opposite-momentum pairs in wire order.
    pub fn pairs(&self) -> &[PairMode] {
        &self.pairs
    }

    /// Gate on the self-paired wires.
    pub fn fixed_gate(&self) -> FixedPairGate {
        self.fixed
    }

    /// Whether the momentum-`1/2` mode is filled in the ground state.
    pub fn half_filled(&self) -> bool {
        self.half_filled
    }

    /// Whether the momentum-0 mode is filled in the ground state.
    pub fn zero_filled(&self) -> bool {
        self.zero_filled
    }

    /// Excitation energy carried by each energy qubit.
    pub fn energy_frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    /// Energy of an energy-basis bitstring (qubit 0 most significant).
    pub fn energy_of_index(&self, index: usize) -> f64 {
        let m = self.modes;
        (0..m)
            .filter(|&q| index >> (m - 1 - q) & 1 == 1)
            .map(|q| self.frequencies[q])
            .sum()
    }

    /// Canonical momentum layout of the block.
    pub fn layout(&self) -> MomentumLayout {
        MomentumLayout::canonical(self.modes).expect("block size validated at construction")
    }
}
