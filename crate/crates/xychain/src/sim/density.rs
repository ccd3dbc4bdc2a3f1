//! Density matrices, partial traces and von Neumann entropy.

use ndarray::Array2;

use crate::error::{argument, validation, Result};
use crate::sim::eigen::{hermiticity_deviation, hermitian_eigenvalues};
use crate::sim::state::qubit_mask;
use crate::sim::StateVector;
use crate::tolerances::TOLERANCES;
use crate::C64;

/// A Hermitian, unit-trace operator on `m` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    num_qubits: usize,
    entries: Array2<C64>,
}

impl DensityMatrix {
    /// Wraps a matrix after checking its shape, Hermiticity and trace.
    pub fn new(num_qubits: usize, entries: Array2<C64>) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if entries.dim() != (dim, dim) {
            return Err(argument(format!(
                "density matrix on {num_qubits} qubits must be {dim}x{dim}"
            )));
        }
        let deviation = hermiticity_deviation(&entries);
        if deviation > TOLERANCES.hermiticity {
            return Err(validation(format!(
                "density matrix is not Hermitian: max |ρ - ρ†| = {deviation:e}"
            )));
        }
        let trace: C64 = entries.diag().sum();
        if (trace - C64::new(1.0, 0.0)).norm() > TOLERANCES.trace {
            return Err(validation(format!("density matrix trace is {trace}, not 1")));
        }
        Ok(Self {
            num_qubits,
            entries,
        })
    }

    /// The projector `|ψ⟩⟨ψ|`.
    pub fn from_pure(state: &StateVector) -> Self {
        let amps = state.amplitudes();
        let dim = amps.len();
        let entries = Array2::from_shape_fn((dim, dim), |(r, c)| amps[r] * amps[c].conj());
        Self {
            num_qubits: state.num_qubits(),
            entries,
        }
    }

    /// Diagonal density matrix with the given probabilities.
    pub fn diagonal(num_qubits: usize, probabilities: &[f64]) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if probabilities.len() != dim {
            return Err(argument(format!("expected {dim} probabilities")));
        }
        if probabilities.iter().any(|&p| p < -TOLERANCES.positivity) {
            return Err(validation("negative probability"));
        }
        let mut entries = Array2::from_elem((dim, dim), C64::new(0.0, 0.0));
        for (i, &p) in probabilities.iter().enumerate() {
            entries[[i, i]] = C64::new(p, 0.0);
        }
        Self::new(num_qubits, entries)
    }

    /// Number of qubits.
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// Dense matrix entries.
    pub fn entries(&self) -> &Array2<C64> {
        &self.entries
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.entries)
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `Tr(ρ σ)` for another density matrix of the same size.
    pub fn overlap(&self, other: &DensityMatrix) -> Result<f64> {
        self.check_same_size(other)?;
        // Tr(ρσ) = Σ ρ_rc σ_cr = Σ ρ_rc conj(σ_rc) for Hermitian σ.
        let total: C64 = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a * b.conj())
            .sum();
        Ok(total.re)
    }

    /// Trace distance `½ Σ |eig(ρ - σ)|`.
    pub fn trace_distance(&self, other: &DensityMatrix) -> Result<f64> {
        self.check_same_size(other)?;
        let difference = &self.entries - &other.entries;
        let values = hermitian_eigenvalues(&difference)?;
        Ok(0.5 * values.iter().map(|v| v.abs()).sum::<f64>())
    }

    /// Conjugates by a unitary: `U ρ U†`.
    pub fn conjugate(&self, unitary: &Array2<C64>) -> Result<DensityMatrix> {
        if unitary.dim() != self.entries.dim() {
            return Err(argument("unitary does not match density matrix size"));
        }
        let adjoint = unitary.t().mapv(|z| z.conj());
        let entries = unitary.dot(&self.entries).dot(&adjoint);
        Ok(DensityMatrix {
            num_qubits: self.num_qubits,
            entries,
        })
    }

    /// `Tr(ρ Z_q)`.
    pub fn expectation_z(&self, q: usize) -> Result<f64> {
        if q >= self.num_qubits {
            return Err(argument(format!("qubit {q} out of range")));
        }
        let mask = qubit_mask(self.num_qubits, q);
        Ok(self
            .entries
            .diag()
            .iter()
            .enumerate()
            .map(|(i, z)| if i & mask == 0 { z.re } else { -z.re })
            .sum())
    }

    fn check_same_size(&self, other: &DensityMatrix) -> Result<()> {
        if self.num_qubits != other.num_qubits {
            return Err(argument("density matrices have different sizes"));
        }
        Ok(())
    }
}

/// Sources that can be reduced to a density matrix on a subset of qubits.
pub trait PartialTrace {
    /// Traces out every qubit not listed in `keep`.
    ///
    /// The kept qubits appear in the order given, with `keep[0]` as the most
    /// significant qubit of the result.
    fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix>;
}

/// Splits every basis index into a kept index and a traced index.
struct Split {
    kept: Vec<usize>,
    traced: Vec<usize>,
    kept_qubits: usize,
    traced_qubits: usize,
}

impl Split {
    fn new(num_qubits: usize, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(argument("partial trace needs at least one kept qubit"));
        }
        let mut seen = 0usize;
        for &q in keep {
            if q >= num_qubits {
                return Err(argument(format!("kept qubit {q} out of range")));
            }
            let m = qubit_mask(num_qubits, q);
            if seen & m != 0 {
                return Err(argument(format!("kept qubit {q} listed twice")));
            }
            seen |= m;
        }
        let rest: Vec<usize> = (0..num_qubits).filter(|q| !keep.contains(q)).collect();
        let dim = 1usize << num_qubits;
        let gather = |qubits: &[usize], index: usize| {
            qubits.iter().fold(0usize, |acc, &q| {
                (acc << 1) | usize::from(index & qubit_mask(num_qubits, q) != 0)
            })
        };
        Ok(Self {
            kept: (0..dim).map(|i| gather(keep, i)).collect(),
            traced: (0..dim).map(|i| gather(&rest, i)).collect(),
            kept_qubits: keep.len(),
            traced_qubits: rest.len(),
        })
    }
}

impl PartialTrace for StateVector {
    fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let split = Split::new(self.num_qubits(), keep)?;
        let rows = 1usize << split.kept_qubits;
        let cols = 1usize << split.traced_qubits;
        let mut psi = Array2::from_elem((rows, cols), C64::new(0.0, 0.0));
        for (i, amp) in self.amplitudes().iter().enumerate() {
            psi[[split.kept[i], split.traced[i]]] = *amp;
        }
        let entries = psi.dot(&psi.t().mapv(|z| z.conj()));
        Ok(DensityMatrix {
            num_qubits: split.kept_qubits,
            entries,
        })
    }
}

impl PartialTrace for DensityMatrix {
    fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let split = Split::new(self.num_qubits, keep)?;
        let dim = 1usize << split.kept_qubits;
        let mut entries = Array2::from_elem((dim, dim), C64::new(0.0, 0.0));
        let full = self.entries.nrows();
        for r in 0..full {
            for c in 0..full {
                if split.traced[r] == split.traced[c] {
                    entries[[split.kept[r], split.kept[c]]] += self.entries[[r, c]];
                }
            }
        }
        Ok(DensityMatrix {
            num_qubits: split.kept_qubits,
            entries,
        })
    }
}

/// Von Neumann entropy in bits, `-Σ λ log₂ λ`, dropping eigenvalues below
/// the entropy cutoff.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let values = rho.eigenvalues()?;
    Ok(entropy_of_spectrum(&values).clamp(0.0, rho.num_qubits as f64))
}

/// `-Σ λ log₂ λ` over the eigenvalues above the entropy cutoff.
pub fn entropy_of_spectrum(values: &[f64]) -> f64 {
    values
        .iter()
        .filter(|&&v| v > TOLERANCES.entropy_cutoff)
        .map(|&v| -v * v.log2())
        .sum()
}
