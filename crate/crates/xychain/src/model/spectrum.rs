//! The exact many-body spectrum as subset sums of mode frequencies.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{dispersion, ModelParams};

/// Largest mode count accepted by [`exact_spectrum`].
pub const MAX_SPECTRUM_MODES: usize = 20;

/// All `2^n` energy levels, sorted ascending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    levels: Vec<f64>,
}

impl Spectrum {
    /// Levels in ascending order.
    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    /// Largest absolute difference to a sorted list of the same length.
    pub fn max_deviation(&self, other: &[f64]) -> Option<f64> {
        (other.len() == self.levels.len()).then(|| {
            self.levels
                .iter()
                .zip(other)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }
}

/// Every subset sum of the frequencies `w_{k/n}`, `k = 0, …, n−1`.
pub fn exact_spectrum(params: &ModelParams) -> Result<Spectrum> {
    let n = params.n();
    if n > MAX_SPECTRUM_MODES {
        return Err(Error::Capacity(format!(
            "spectrum enumeration supports at most {MAX_SPECTRUM_MODES} modes, got {n}"
        )));
    }
    let frequencies: Vec<f64> = (0..n).map(|k| dispersion(params, k as f64 / n as f64)).collect();
    let mut levels = vec![0.0; 1 << n];
    for (k, &w) in frequencies.iter().enumerate() {
        let half = 1usize << k;
        for subset in 0..half {
            levels[half + subset] = levels[subset] + w;
        }
    }
    levels.sort_by(f64::total_cmp);
    Ok(Spectrum { levels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_hamiltonian, HamiltonianForm};
    use crate::sim::hermitian_eigenvalues;

    #[test]
    fn two_sites_field_only() {
        let s = exact_spectrum(&ModelParams::ground(2, 0.0, 1.0).unwrap()).unwrap();
        assert_eq!(s.levels(), &[0.0, 1.0, 1.0, 2.0]);
    }

    #[test]
    fn four_site_ising_levels() {
        let params = ModelParams::ground(4, 1.0, 1.0).unwrap();
        let s = exact_spectrum(&params).unwrap();
        assert_eq!(s.levels().len(), 16);
        assert_eq!(s.levels()[0], 0.0);
        let r2 = std::f64::consts::SQRT_2;
        let singles = [0.0, r2, 2.0, r2];
        let mut expected: Vec<f64> = (0..16usize)
            .map(|mask| (0..4).filter(|b| mask >> b & 1 == 1).map(|b| singles[b]).sum())
            .collect();
        expected.sort_by(f64::total_cmp);
        assert!(s.max_deviation(&expected).unwrap() < 1e-12);
    }

    #[test]
    fn matches_dense_fermionic_hamiltonian() {
        for n in [2, 4, 8] {
            for (lambda, gamma) in [(0.0, 1.0), (0.5, 1.0), (1.0, 1.0), (1.5, 1.0), (1.0, 0.5)] {
                let params = ModelParams::ground(n, lambda, gamma).unwrap();
                let h = build_hamiltonian(&params, HamiltonianForm::Fermionic).unwrap();
                let values = hermitian_eigenvalues(&h).unwrap();
                let spectrum = exact_spectrum(&params).unwrap();
                let deviation = spectrum.max_deviation(&values).unwrap();
                assert!(deviation < 1e-8, "n={n} λ={lambda} γ={gamma}: {deviation:e}");
            }
        }
    }

    #[test]
    fn capacity_limit() {
        let params = ModelParams::ground(22, 1.0, 1.0).unwrap();
        assert!(matches!(exact_spectrum(&params), Err(Error::Capacity(_))));
    }
}
