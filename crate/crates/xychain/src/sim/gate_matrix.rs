//! Validated one- and two-qubit unitary matrices.

use ndarray::Array2;

use crate::error::{argument, validation, Result};
use crate::tolerances::TOLERANCES;
use crate::C64;

/// A unitary acting on one (2×2) or two (4×4) qubits.
///
/// Two-qubit matrices are indexed with the first target as the more
/// significant bit, so row `2a + b` is the ket `|a b⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct GateMatrix {
    entries: Array2<C64>,
}

impl GateMatrix {
    /// Wraps a 2×2 or 4×4 matrix after checking that it is unitary.
    pub fn new(entries: Array2<C64>) -> Result<Self> {
        let (rows, cols) = entries.dim();
        if rows != cols || !(rows == 2 || rows == 4) {
            return Err(argument(format!(
                "gate matrix must be 2x2 or 4x4, got {rows}x{cols}"
            )));
        }
        let gate = Self { entries };
        let deviation = gate.unitarity_deviation();
        if deviation >= TOLERANCES.unitarity {
            return Err(validation(format!(
                "gate is not unitary: max |G†G - I| = {deviation:e}"
            )));
        }
        Ok(gate)
    }

    /// Builds a gate from a matrix that is unitary by construction.
    pub(crate) fn from_unitary(entries: Array2<C64>) -> Self {
        let gate = Self { entries };
        debug_assert!(gate.unitarity_deviation() < TOLERANCES.unitarity);
        gate
    }

    /// Builds a one-qubit gate from row-major entries.
    pub(crate) fn one(rows: [[C64; 2]; 2]) -> Self {
        Self::from_unitary(Array2::from_shape_fn((2, 2), |(r, c)| rows[r][c]))
    }

    /// Builds a two-qubit gate from row-major entries.
    pub(crate) fn two(rows: [[C64; 4]; 4]) -> Self {
        Self::from_unitary(Array2::from_shape_fn((4, 4), |(r, c)| rows[r][c]))
    }

    /// Number of qubits the gate acts on.
    pub fn arity(&self) -> usize {
        if self.entries.nrows() == 2 {
            1
        } else {
            2
        }
    }

    /// The dense matrix.
    pub fn matrix(&self) -> &Array2<C64> {
        &self.entries
    }

    /// Entry at row `r`, column `c`.
    pub fn get(&self, r: usize, c: usize) -> C64 {
        self.entries[[r, c]]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            entries: self.entries.t().mapv(|z| z.conj()),
        }
    }

    /// Matrix product `self · other`, that is `other` applied first.
    pub fn then_after(&self, other: &GateMatrix) -> Result<Self> {
        if self.arity() != other.arity() {
            return Err(argument("cannot compose gates of different arity"));
        }
        Ok(Self::from_unitary(self.entries.dot(&other.entries)))
    }

    /// Largest entrywise deviation of `G†G` from the identity.
    pub fn unitarity_deviation(&self) -> f64 {
        let product = self.entries.t().mapv(|z| z.conj()).dot(&self.entries);
        max_identity_deviation(&product)
    }
}

/// Largest entrywise deviation of a square matrix from the identity.
pub fn max_identity_deviation(matrix: &Array2<C64>) -> f64 {
    matrix
        .indexed_iter()
        .map(|((r, c), z)| {
            let target = if r == c { 1.0 } else { 0.0 };
            (z - C64::new(target, 0.0)).norm()
        })
        .fold(0.0, f64::max)
}
