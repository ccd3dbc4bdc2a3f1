//! Exact two-local circuits for the periodic transverse-field XY chain.
//!
//! The crate builds the free-fermion diagonalizing circuit (a fermionic
//! Fourier transform followed by a layer of Bogoliubov rotations), exact
//! time evolution, momentum-space coarse graining and thermofield-double
//! preparation from one- and two-qubit gates. Every construction is checked
//! against dense-matrix oracles provided by the [`sim`] module.
//!
//! Conventions:
//! * qubit 0 is the most significant bit of an amplitude index;
//! * a qubit in `|1⟩` is an occupied fermionic mode, with Jordan–Wigner
//!   strings running over lower-indexed qubits;
//! * for a two-qubit gate on `(q1, q2)`, `q1` is the more significant slot.

pub mod circuits;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod gates;
pub mod model;
pub mod sim;
pub mod tolerances;

pub use error::{Error, Result};

/// Double-precision complex scalar used for all amplitudes and matrices.
pub type C64 = num_complex::Complex64;
