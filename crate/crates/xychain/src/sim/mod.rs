//! Dense statevector and density-matrix kernels.
//!
//! These routines apply gates, assemble circuit unitaries, take partial
//! traces and compute entropies. They double as the verification oracle for
//! every circuit built elsewhere in the crate.

pub mod density;
pub mod eigen;
pub mod gate_matrix;
pub mod state;
pub mod unitary;

pub use density::{von_neumann_entropy, DensityMatrix, PartialTrace};
pub use eigen::{hermitian_eigensystem, hermitian_eigenvalues, Eigensystem};
pub use gate_matrix::GateMatrix;
pub use state::{Pauli, StateVector};
pub use unitary::circuit_to_unitary;
