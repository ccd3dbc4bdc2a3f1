//! Numeric tolerances used by validation checks, collected in one record.

use serde::Serialize;

/// Thresholds applied by constructors and validators across the crate.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Tolerances {
    /// Maximum entrywise deviation of `G†G` from the identity for a gate.
    pub unitarity: f64,
    /// Maximum deviation of a state's squared norm from one.
    pub norm: f64,
    /// Maximum entrywise deviation of a matrix from its adjoint.
    pub hermiticity: f64,
    /// Maximum deviation of a density matrix trace from one.
    pub trace: f64,
    /// Most negative eigenvalue accepted for a density matrix.
    pub positivity: f64,
    /// Eigenvalues below this are dropped from entropy sums.
    pub entropy_cutoff: f64,
    /// Largest imaginary part tolerated in a real-valued expectation.
    pub imaginary: f64,
    /// Frequencies at or below this are treated as zero modes.
    pub zero_frequency: f64,
}

/// The tolerance table used by the library.
pub const TOLERANCES: Tolerances = Tolerances {
    unitarity: 1e-10,
    norm: 1e-9,
    hermiticity: 1e-10,
    trace: 1e-9,
    positivity: 1e-9,
    entropy_cutoff: 1e-12,
    imaginary: 1e-10,
    zero_frequency: 1e-12,
};
