//! Gibbs-state oracle and thermofield-double entropy tables.

use serde::Serialize;

use crate::circuits::{build_tfd, build_udis, Circuit};
use crate::error::{argument, Error, Result};
use crate::experiments::{run_entropy_curve, EntropyCurve};
use crate::model::{build_hamiltonian, HamiltonianForm, ModeTable, ModelParams};
use crate::sim::unitary::{adjoint, hermitian_function};
use crate::sim::{circuit_to_unitary, von_neumann_entropy, DensityMatrix, PartialTrace, StateVector};
use crate::C64;

/// Largest chain accepted by [`thermal_state_oracle`].
pub const MAX_THERMAL_MODES: usize = 10;

/// Basis in which a thermal state is expressed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ThermalBasis {
    /// Energy eigenbasis defined by the diagonalizing circuit.
    Energy,
    /// Site occupation basis.
    Position,
}

/// `e^{−βH}/Z` from a dense eigendecomposition of the fermionic Hamiltonian.
///
/// The energy-basis form is `U† ρ U` with `U` the dense diagonalizing
/// circuit.
pub fn thermal_state_oracle(params: &ModelParams, beta: f64, basis: ThermalBasis) -> Result<DensityMatrix> {
    let n = params.n();
    if n > MAX_THERMAL_MODES {
        return Err(Error::Capacity(format!(
            "thermal oracle supports at most {MAX_THERMAL_MODES} modes, got {n}"
        )));
    }
    if !beta.is_finite() || beta < 0.0 {
        return Err(argument(format!("beta must be finite and non-negative, got {beta}")));
    }
    let h = build_hamiltonian(params, HamiltonianForm::Fermionic)?;
    let weights = hermitian_function(&h, |e| C64::new((-beta * e.max(0.0)).exp(), 0.0))?;
    let z: C64 = weights.diag().sum();
    let position = DensityMatrix::new(n, weights.mapv(|w| w / z))?;
    match basis {
        ThermalBasis::Position => Ok(position),
        ThermalBasis::Energy => {
            let udis = circuit_to_unitary(&build_udis(params)?, n)?;
            position.conjugate(&adjoint(&udis))
        }
    }
}

/// Thermofield double of the chain on `2n` qubits in the energy basis of
/// both registers.
pub fn prepare_tfd(params: &ModelParams, beta: f64) -> Result<StateVector> {
    let table = ModeTable::new(params)?;
    let mut state = StateVector::zero(2 * params.n())?;
    build_tfd(&table, beta)?.apply(&mut state)?;
    Ok(state)
}

/// Thermofield double with the left register rotated to position space.
pub fn prepare_tfd_position(params: &ModelParams, beta: f64) -> Result<StateVector> {
    let mut state = prepare_tfd(params, beta)?;
    let mut rotate = Circuit::new(2 * params.n());
    let left: Vec<usize> = (0..params.n()).collect();
    rotate.append_mapped(&build_udis(params)?, &left)?;
    rotate.apply(&mut state)?;
    Ok(state)
}

/// Entropies of one thermofield double.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TfdEntropyRow {
    /// Inverse temperature.
    pub beta: f64,
    /// Entropy between the left and right registers, in bits.
    pub half_cut: f64,
    /// Block entropy of the first `ℓ` left-register sites in position space.
    pub curve: EntropyCurve,
}

/// For each inverse temperature, prepares the thermofield double and
/// records the left–right entropy and the left-chain block entropy curve.
pub fn run_tfd_entropy_vs_beta(params: &ModelParams, betas: &[f64]) -> Result<Vec<TfdEntropyRow>> {
    if betas.iter().any(|b| !b.is_finite() || *b < 0.0) {
        return Err(argument("every beta must be finite and non-negative"));
    }
    let m = params.n();
    let left: Vec<usize> = (0..m).collect();
    betas
        .iter()
        .map(|&beta| {
            let state = prepare_tfd_position(params, beta)?;
            let half_cut = von_neumann_entropy(&state.partial_trace(&left)?)?;
            let curve = run_entropy_curve(&state, &left)?;
            Ok(TfdEntropyRow { beta, half_cut, curve })
        })
        .collect()
}
