//! Block entanglement entropy curves `S(ℓ)`.
//!
//! Curves come from two independent routes: partial traces of a full
//! statevector or density matrix, and the correlation matrix of the
//! Gaussian ground state, which reaches chains too long or of a size the
//! radix-2 Fourier circuit does not support.

use std::f64::consts::PI;

use ndarray::Array2;
use serde::Serialize;

use crate::error::{argument, Result};
use crate::model::{ModeTable, ModelParams};
use crate::sim::density::entropy_of_spectrum;
use crate::sim::{hermitian_eigenvalues, von_neumann_entropy, DensityMatrix, PartialTrace, StateVector};
use crate::C64;

/// Entropy in bits of the first `ℓ` sites, for `ℓ = 0, …, L`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyCurve {
    /// Block lengths `0..=L`.
    pub lengths: Vec<usize>,
    /// `S(ℓ)` in bits.
    pub entropies: Vec<f64>,
}

impl EntropyCurve {
    /// Builds a curve from entropies indexed by block length.
    pub fn from_entropies(entropies: Vec<f64>) -> Self {
        Self {
            lengths: (0..entropies.len()).collect(),
            entropies,
        }
    }

    /// Total length `L`.
    pub fn total_length(&self) -> usize {
        self.lengths.len().saturating_sub(1)
    }

    /// Largest `|S(ℓ) − S(L − ℓ)|`.
    pub fn asymmetry(&self) -> f64 {
        let l = self.total_length();
        (0..=l)
            .map(|i| (self.entropies[i] - self.entropies[l - i]).abs())
            .fold(0.0, f64::max)
    }
}

fn check_sites(num_qubits: usize, sites: &[usize]) -> Result<()> {
    let mut seen = vec![false; num_qubits];
    for &s in sites {
        if s >= num_qubits || std::mem::replace(&mut seen[s], true) {
            return Err(argument(format!("block sites must be distinct and below {num_qubits}")));
        }
    }
    Ok(())
}

/// Entropy of the first `ℓ` entries of `sites` for a pure state.
///
/// Each reduced state is formed on whichever side of the cut is smaller,
/// since both sides of a pure state have the same entropy.
pub fn run_entropy_curve(state: &StateVector, sites: &[usize]) -> Result<EntropyCurve> {
    let n = state.num_qubits();
    check_sites(n, sites)?;
    let mut entropies = vec![0.0];
    for l in 1..=sites.len() {
        let block = &sites[..l];
        let complement: Vec<usize> = (0..n).filter(|q| !block.contains(q)).collect();
        let side = if complement.is_empty() || block.len() <= complement.len() {
            block.to_vec()
        } else {
            complement
        };
        let s = if side.len() == n {
            0.0
        } else {
            von_neumann_entropy(&state.partial_trace(&side)?)?
        };
        entropies.push(s);
    }
    Ok(EntropyCurve::from_entropies(entropies))
}

/// Entropy of the first `ℓ` entries of `sites` for a mixed state.
pub fn run_entropy_curve_mixed(rho: &DensityMatrix, sites: &[usize]) -> Result<EntropyCurve> {
    check_sites(rho.num_qubits(), sites)?;
    let mut entropies = vec![0.0];
    for l in 1..=sites.len() {
        entropies.push(von_neumann_entropy(&rho.partial_trace(&sites[..l])?)?);
    }
    Ok(EntropyCurve::from_entropies(entropies))
}

/// Position-space two-point functions `G_ij = ⟨c_i† c_j⟩` and
/// `F_ij = ⟨c_i c_j⟩` of the ground state.
///
/// In momentum space the ground state fills each self-paired mode whose
/// angle exceeds `π/2`, gives the pair `(j, n−j)` occupation `sin²(θ/2)`
/// and the anomalous amplitudes `⟨a_{n−j} a_j⟩ = −⟨a_j a_{n−j}⟩ = u* v`
/// with `u = cos(θ/2)` and `v = i sin(θ/2)`. Plane waves
/// `c_j = Σ_k e^{2πikj/n} a_k / √n` carry these to position space.
pub fn ground_correlations(params: &ModelParams) -> Result<(Array2<C64>, Array2<C64>)> {
    let n = params.n();
    let table = ModeTable::new(params)?;
    let mut occupation = vec![0.0; n];
    let mut anomalous: Vec<((usize, usize), C64)> = Vec::new();
    for (j, pair) in (1..n / 2).zip(table.pairs()) {
        let (s, c) = (0.5 * pair.angle).sin_cos();
        occupation[j] = s * s;
        occupation[n - j] = s * s;
        let value = C64::new(c, 0.0) * C64::new(0.0, s);
        anomalous.push(((n - j, j), value));
        anomalous.push(((j, n - j), -value));
    }
    occupation[0] = if table.zero_filled() { 1.0 } else { 0.0 };
    occupation[n / 2] = if table.half_filled() { 1.0 } else { 0.0 };
    let phase = |x: f64| C64::from_polar(1.0 / n as f64, 2.0 * PI * x / n as f64);
    let g = Array2::from_shape_fn((n, n), |(i, j)| {
        (0..n)
            .map(|k| phase((k * j) as f64 - (k * i) as f64) * occupation[k])
            .sum()
    });
    let f = Array2::from_shape_fn((n, n), |(i, j)| {
        anomalous
            .iter()
            .map(|&((k, kp), value)| phase((k * i + kp * j) as f64) * value)
            .sum()
    });
    Ok((g, f))
}

/// Ground-state entropy curve over contiguous sites `0..ℓ` from the
/// correlation matrix.
///
/// For each block the `2ℓ × 2ℓ` matrix `[[I − Gᵀ, F], [F†, G]]` has
/// eigenvalues `ν`, and `S = −Σ ν log₂ ν`.
pub fn gaussian_ground_entropy_curve(params: &ModelParams) -> Result<EntropyCurve> {
    let n = params.n();
    let (g, f) = ground_correlations(params)?;
    let mut entropies = vec![0.0];
    for l in 1..=n {
        let gamma = Array2::from_shape_fn((2 * l, 2 * l), |(r, c)| match (r < l, c < l) {
            (true, true) => {
                let identity = if r == c { 1.0 } else { 0.0 };
                C64::new(identity, 0.0) - g[[c, r]]
            }
            (true, false) => f[[r, c - l]],
            (false, true) => f[[c, r - l]].conj(),
            (false, false) => g[[r - l, c - l]],
        });
        let values = hermitian_eigenvalues(&gamma)?;
        entropies.push(entropy_of_spectrum(&values).clamp(0.0, l as f64));
    }
    Ok(EntropyCurve::from_entropies(entropies))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::build_udis;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn ground_state(params: &ModelParams) -> StateVector {
        let mut state = StateVector::zero(params.n()).unwrap();
        build_udis(params).unwrap().apply(&mut state).unwrap();
        state
    }

    #[test]
    fn bell_pairs_across_a_cut() {
        let h = C64::new(0.5, 0.0);
        let z = C64::new(0.0, 0.0);
        // Two Bell pairs (0,2) and (1,3).
        let mut amps = vec![z; 16];
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            amps[(a << 3) | (b << 2) | (a << 1) | b] = h;
        }
        let state = StateVector::from_amplitudes(4, amps).unwrap();
        let curve = run_entropy_curve(&state, &[0, 1, 2, 3]).unwrap();
        assert_eq!(curve.entropies[0], 0.0);
        assert!((curve.entropies[2] - 2.0).abs() < 1e-12);
        assert!(curve.entropies[4].abs() < 1e-12);
        let single = StateVector::from_amplitudes(2, vec![C64::new(FRAC_1_SQRT_2, 0.0), z, z, C64::new(FRAC_1_SQRT_2, 0.0)]).unwrap();
        assert!((run_entropy_curve(&single, &[0, 1]).unwrap().entropies[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn critical_ground_curve_is_symmetric_and_concave() {
        let params = ModelParams::ground(8, 1.0, 1.0).unwrap();
        let curve = run_entropy_curve(&ground_state(&params), &(0..8).collect::<Vec<_>>()).unwrap();
        assert!(curve.asymmetry() < 1e-8);
        for w in curve.entropies.windows(3) {
            assert!(w[1] >= 0.5 * (w[0] + w[2]) - 1e-8);
        }
    }

    #[test]
    fn gaussian_route_matches_statevector_route() {
        for (lambda, gamma) in [(1.0, 1.0), (1.5, 1.0), (0.5, 1.0), (0.7, 0.3), (0.0, 1.0)] {
            let params = ModelParams::ground(8, lambda, gamma).unwrap();
            let direct = run_entropy_curve(&ground_state(&params), &(0..8).collect::<Vec<_>>()).unwrap();
            let gaussian = gaussian_ground_entropy_curve(&params).unwrap();
            for (a, b) in direct.entropies.iter().zip(&gaussian.entropies) {
                assert!((a - b).abs() < 1e-9, "λ={lambda} γ={gamma}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn mixed_curve_of_maximally_mixed_state() {
        let rho = DensityMatrix::diagonal(3, &[0.125; 8]).unwrap();
        let curve = run_entropy_curve_mixed(&rho, &[0, 1, 2]).unwrap();
        for (l, s) in curve.entropies.iter().enumerate() {
            assert!((s - l as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_repeated_sites() {
        let state = StateVector::zero(3).unwrap();
        assert!(run_entropy_curve(&state, &[0, 0]).is_err());
        assert!(run_entropy_curve(&state, &[3]).is_err());
    }
}
