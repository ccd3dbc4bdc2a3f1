//! Chain parameters, the momentum layout, single-mode formulas, dense
//! Hamiltonians and the exact free-fermion spectrum.

pub mod dispersion;
pub mod hamiltonian;
pub mod layout;
pub mod modes;
pub mod params;
pub mod spectrum;

pub use dispersion::{bogoliubov_angle, dispersion, fermionic_ground_energy, hopping_energy};
pub use hamiltonian::{build_hamiltonian, HamiltonianForm, MAX_HAMILTONIAN_QUBITS};
pub use layout::MomentumLayout;
pub use modes::{FixedPairGate, ModeTable, PairMode};
pub use params::ModelParams;
pub use spectrum::{exact_spectrum, Spectrum, MAX_SPECTRUM_MODES};
