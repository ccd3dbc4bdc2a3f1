//! Oracle suite run by the `verify` subcommand.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::circuits::{below_cutoff_state, build_fourier, build_udis, coarse_grain, evolve_position_state};
use crate::error::Result;
use crate::experiments::{prepare_tfd, thermal_state_oracle, ThermalBasis};
use crate::gates::{u_pm_circuit, u_pm_dense, Su2Axis};
use crate::model::{build_hamiltonian, exact_spectrum, HamiltonianForm, MomentumLayout, ModelParams};
use crate::sim::unitary::{adjoint, apply_dense, hermitian_function, max_off_diagonal, phase_insensitive_overlap};
use crate::sim::{circuit_to_unitary, DensityMatrix, PartialTrace, StateVector};
use crate::C64;

/// Largest chain the oracle suite accepts.
pub const MAX_VERIFY_SITES: usize = 8;

/// Outcome of one oracle comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    /// Short identifier of the comparison.
    pub name: String,
    /// Worst observed deviation.
    pub deviation: f64,
    /// Largest deviation that counts as agreement.
    pub tolerance: f64,
}

impl Check {
    fn new(name: impl Into<String>, deviation: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            deviation,
            tolerance,
        }
    }

    /// Whether the deviation is within tolerance. NaN never passes.
    pub fn passed(&self) -> bool {
        self.deviation <= self.tolerance
    }
}

/// Runs every oracle comparison for the chain described by `params`.
///
/// The seed drives the random angles and below-cutoff states.
pub fn run_oracle_suite(params: &ModelParams, seed: u64) -> Result<Vec<Check>> {
    params.require_radix2()?;
    if params.n() > MAX_VERIFY_SITES {
        return Err(crate::Error::Capacity(format!(
            "verification runs dense oracles on at most {MAX_VERIFY_SITES} sites"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = diagonalization(params)?;
    checks.push(decompositions(&mut rng)?);
    checks.push(fourier_dft(params.n())?);
    checks.push(time_evolution(params)?);
    checks.push(gibbs_state(params)?);
    if params.n() >= 4 {
        checks.push(coarse_isometry(params, &mut rng)?);
    }
    Ok(checks)
}

fn diagonalization(params: &ModelParams) -> Result<Vec<Check>> {
    let n = params.n();
    let u = circuit_to_unitary(&build_udis(params)?, n)?;
    let h = build_hamiltonian(params, HamiltonianForm::Fermionic)?;
    let d = adjoint(&u).dot(&h).dot(&u);
    let mut diagonal: Vec<f64> = d.diag().iter().map(|z| z.re).collect();
    let floor = diagonal.iter().copied().fold(f64::INFINITY, f64::min);
    diagonal.iter_mut().for_each(|e| *e -= floor);
    diagonal.sort_by(f64::total_cmp);
    let spectrum_gap = exact_spectrum(params)?.max_deviation(&diagonal).unwrap_or(f64::INFINITY);
    Ok(vec![
        Check::new("diagonalization.off_diagonal", max_off_diagonal(&d), 1e-8),
        Check::new("diagonalization.spectrum", spectrum_gap, 1e-8),
    ])
}

fn decompositions(rng: &mut impl Rng) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for which in Su2Axis::all() {
        for _ in 0..5 {
            let theta = rng.gen_range(-2.0 * PI..2.0 * PI);
            let circuit = circuit_to_unitary(&u_pm_circuit(which, theta), 2)?;
            let overlap = phase_insensitive_overlap(&circuit, u_pm_dense(which, theta).matrix());
            worst = worst.max((overlap - 4.0).abs());
        }
    }
    Ok(Check::new("gates.su2_decomposition", worst, 1e-9))
}

fn fourier_dft(n: usize) -> Result<Check> {
    let circuit = build_fourier(n)?;
    let layout = MomentumLayout::canonical(n)?;
    let scale = 1.0 / (n as f64).sqrt();
    let mut worst: f64 = 0.0;
    for k in 0..n {
        let mut state = StateVector::with_occupied(n, &[layout.wire_of_label(k)])?;
        circuit.apply(&mut state)?;
        for j in 0..n {
            let expected = C64::from_polar(scale, 2.0 * PI * (j * k) as f64 / n as f64);
            worst = worst.max((state.amplitudes()[1 << (n - 1 - j)] - expected).norm());
        }
    }
    Ok(Check::new("fourier.one_particle_dft", worst, 1e-8))
}

fn time_evolution(params: &ModelParams) -> Result<Check> {
    let n = params.n();
    let h = build_hamiltonian(params, HamiltonianForm::Fermionic)?;
    let mut worst: f64 = 0.0;
    for t in [0.1, 1.0, 10.0] {
        let propagator = hermitian_function(&h, |e| C64::from_polar(1.0, -0.5 * e * t))?;
        let expected = apply_dense(&propagator, &StateVector::with_occupied(n, &[0])?)?;
        let state = evolve_position_state(params, 0, t)?;
        worst = worst.max((state.inner(&expected)?.norm() - 1.0).abs());
    }
    Ok(Check::new("evolution.dense_overlap", worst, 1e-8))
}

fn gibbs_state(params: &ModelParams) -> Result<Check> {
    let n = params.n();
    let left: Vec<usize> = (0..n).collect();
    let mut worst: f64 = 0.0;
    for beta in [0.0, 1.0, 10.0] {
        let reduced = prepare_tfd(params, beta)?.partial_trace(&left)?;
        let oracle = thermal_state_oracle(params, beta, ThermalBasis::Energy)?;
        worst = worst.max(reduced.trace_distance(&oracle)?);
    }
    Ok(Check::new("thermal.gibbs_trace_distance", worst, 1e-8))
}

fn random_state(num_qubits: usize, rng: &mut impl Rng) -> Result<StateVector> {
    let amplitudes = (0..1usize << num_qubits)
        .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    StateVector::normalized(num_qubits, amplitudes)
}

fn coarse_isometry(params: &ModelParams, rng: &mut impl Rng) -> Result<Check> {
    let keep = params.n() / 2;
    let mut worst: f64 = 0.0;
    for _ in 0..3 {
        let (low_a, low_b) = (random_state(keep, rng)?, random_state(keep, rng)?);
        let fine_a = below_cutoff_state(params, keep, &low_a)?;
        let fine_b = below_cutoff_state(params, keep, &low_b)?;
        let (rho_a, rho_b): (DensityMatrix, DensityMatrix) =
            (coarse_grain(&fine_a, params, keep)?, coarse_grain(&fine_b, params, keep)?);
        let fidelity = fine_a.inner(&fine_b)?.norm_sqr();
        worst = worst.max((rho_a.overlap(&rho_b)? - fidelity).abs());
        worst = worst.max(1.0 - rho_a.purity());
    }
    Ok(Check::new("rg.below_cutoff_isometry", worst, 1e-8))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_on_small_chains() {
        for (n, lambda, gamma) in [(2, 0.4, 1.0), (4, 1.0, 1.0), (4, 1.5, 0.5)] {
            let params = ModelParams::ground(n, lambda, gamma).unwrap();
            let checks = run_oracle_suite(&params, 7).unwrap();
            assert!(checks.iter().all(Check::passed), "{checks:?}");
        }
    }

    #[test]
    fn nan_deviation_fails() {
        assert!(!Check::new("x", f64::NAN, 1.0).passed());
    }

    #[test]
    fn rejects_large_or_irregular_chains() {
        assert!(run_oracle_suite(&ModelParams::ground(16, 1.0, 1.0).unwrap(), 0).is_err());
        assert!(run_oracle_suite(&ModelParams::ground(6, 1.0, 1.0).unwrap(), 0).is_err());
    }
}
