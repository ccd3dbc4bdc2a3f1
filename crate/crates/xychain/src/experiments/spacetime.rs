//! `⟨Z_i⟩(t)` grids for the full chain and for its coarse-grained block.

use serde::Serialize;

use crate::circuits::{build_time_evolution, build_udis, build_udis_for, coarse_grain};
use crate::error::{argument, Result};
use crate::model::{ModeTable, ModelParams};
use crate::sim::{circuit_to_unitary, DensityMatrix, Pauli, StateVector};

/// Expectation values `⟨Z_i⟩` indexed by time (rows) and site (columns).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpacetimeGrid {
    /// Sample times.
    pub times: Vec<f64>,
    /// Site indices.
    pub sites: Vec<usize>,
    /// `values[t][i]` is `⟨Z_i⟩` at `times[t]`.
    pub values: Vec<Vec<f64>>,
}

fn check_times(times: &[f64]) -> Result<()> {
    if times.iter().any(|t| !t.is_finite()) {
        return Err(argument("all times must be finite"));
    }
    Ok(())
}

/// Evolves the position state with one occupied site and records `⟨Z_i⟩`.
pub fn run_expz_spacetime(params: &ModelParams, initial_site: usize, times: &[f64]) -> Result<SpacetimeGrid> {
    let n = params.n();
    if initial_site >= n {
        return Err(argument(format!("site {initial_site} out of range for {n} sites")));
    }
    let initial = StateVector::with_occupied(n, &[initial_site])?;
    run_expz_from_state(params, &initial, times)
}

/// Evolves an arbitrary position-space state and records `⟨Z_i⟩`.
pub fn run_expz_from_state(params: &ModelParams, initial: &StateVector, times: &[f64]) -> Result<SpacetimeGrid> {
    check_times(times)?;
    let n = params.n();
    let udis = build_udis(params)?;
    let table = ModeTable::new(params)?;
    let mut energy_state = initial.clone();
    udis.inverse().apply(&mut energy_state)?;
    let mut values = Vec::with_capacity(times.len());
    for &t in times {
        let mut state = energy_state.clone();
        build_time_evolution(&table, t)?.apply(&mut state)?;
        udis.apply(&mut state)?;
        let row = (0..n)
            .map(|q| state.expectation_pauli(&[(q, Pauli::Z)]))
            .collect::<Result<Vec<_>>>()?;
        values.push(row);
    }
    Ok(SpacetimeGrid {
        times: times.to_vec(),
        sites: (0..n).collect(),
        values,
    })
}

/// Coarse-grains `initial` onto the lowest `keep` momenta and evolves the
/// resulting block state with the kept modes' energies.
///
/// The block evolution is `V T(t) V†`, where `V` is the diagonalizing circuit
/// of the block (see [`ModeTable::for_block`]) and `T(t)` its phase layer.
pub fn run_expz_coarse(
    params: &ModelParams,
    keep: usize,
    initial: &StateVector,
    times: &[f64],
) -> Result<SpacetimeGrid> {
    check_times(times)?;
    let rho = coarse_grain(initial, params, keep)?;
    let table = ModeTable::for_block(params, keep)?;
    let udis = circuit_to_unitary(&build_udis_for(&table)?, keep)?;
    let energy_rho = rho.conjugate(&crate::sim::unitary::adjoint(&udis))?;
    let mut values = Vec::with_capacity(times.len());
    for &t in times {
        let phases = circuit_to_unitary(&build_time_evolution(&table, t)?, keep)?;
        let evolved: DensityMatrix = energy_rho.conjugate(&udis.dot(&phases))?;
        let row = (0..keep).map(|q| evolved.expectation_z(q)).collect::<Result<Vec<_>>>()?;
        values.push(row);
    }
    Ok(SpacetimeGrid {
        times: times.to_vec(),
        sites: (0..keep).collect(),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::below_cutoff_state;

    fn times() -> Vec<f64> {
        vec![0.0, 0.5, 1.7, 4.0]
    }

    #[test]
    fn initial_column_is_the_excitation() {
        let params = ModelParams::ground(8, 1.0, 1.0).unwrap();
        let grid = run_expz_spacetime(&params, 3, &times()).unwrap();
        for (i, &z) in grid.values[0].iter().enumerate() {
            let expected = if i == 3 { -1.0 } else { 1.0 };
            assert!((z - expected).abs() < 1e-10);
        }
        assert!(grid.values.iter().flatten().all(|z| z.abs() <= 1.0 + 1e-9));
    }

    #[test]
    fn field_only_grid_is_stationary() {
        let params = ModelParams::ground(8, 0.0, 1.0).unwrap();
        let grid = run_expz_spacetime(&params, 2, &times()).unwrap();
        for row in &grid.values {
            for (a, b) in row.iter().zip(&grid.values[0]) {
                assert!((a - b).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn coarse_ground_state_is_stationary() {
        let params = ModelParams::ground(8, 1.0, 1.0).unwrap();
        let mut ground = StateVector::zero(8).unwrap();
        build_udis(&params).unwrap().apply(&mut ground).unwrap();
        let grid = run_expz_coarse(&params, 4, &ground, &times()).unwrap();
        for row in &grid.values {
            for (a, b) in row.iter().zip(&grid.values[0]) {
                assert!((a - b).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn coarse_grid_matches_fine_evolution_then_coarse_graining() {
        let params = ModelParams::ground(8, 1.0, 1.0).unwrap();
        let low = StateVector::with_occupied(4, &[1]).unwrap();
        let initial = below_cutoff_state(&params, 4, &low).unwrap();
        let coarse = run_expz_coarse(&params, 4, &initial, &times()).unwrap();
        let udis = build_udis(&params).unwrap();
        let table = ModeTable::new(&params).unwrap();
        for (row, &t) in coarse.values.iter().zip(&times()) {
            let mut fine = initial.clone();
            udis.inverse().apply(&mut fine).unwrap();
            build_time_evolution(&table, t).unwrap().apply(&mut fine).unwrap();
            udis.apply(&mut fine).unwrap();
            let rho = coarse_grain(&fine, &params, 4).unwrap();
            for (q, z) in row.iter().enumerate() {
                assert!((z - rho.expectation_z(q).unwrap()).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let params = ModelParams::ground(4, 1.0, 1.0).unwrap();
        assert!(run_expz_spacetime(&params, 4, &[0.0]).is_err());
        assert!(run_expz_spacetime(&params, 0, &[f64::NAN]).is_err());
    }
}
