//! Small dense-matrix helpers for building gate and operator matrices.

use ndarray::Array2;

use crate::sim::Pauli;
use crate::C64;

/// `dim × dim` complex identity.
pub fn identity(dim: usize) -> Array2<C64> {
    Array2::from_diag_elem(dim, C64::new(1.0, 0.0))
}

/// Kronecker product `a ⊗ b`, with `a` on the more significant index.
pub fn kron(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    Array2::from_shape_fn((ar * br, ac * bc), |(r, c)| a[[r / br, c / bc]] * b[[r % br, c % bc]])
}

/// The 2×2 Pauli matrix for an axis.
pub fn pauli_matrix(axis: Pauli) -> Array2<C64> {
    let z = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    match axis {
        Pauli::X => ndarray::arr2(&[[z, one], [one, z]]),
        Pauli::Y => ndarray::arr2(&[[z, -i], [i, z]]),
        Pauli::Z => ndarray::arr2(&[[one, z], [z, -one]]),
    }
}
