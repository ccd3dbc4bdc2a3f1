//! Circuit representation and the builders for every composite operation:
//! Fourier transform, Bogoliubov layer, diagonalizing circuit, time
//! evolution, coarse graining and thermal-state preparation.

pub mod circuit;
pub mod evolution;
pub mod fourier;
pub mod reorder;
pub mod rg;
pub mod thermal;
pub mod udis;

pub use circuit::{Circuit, GateKind, GateOp};
pub use evolution::{build_position_evolution, build_time_evolution, evolve_position_state};
pub use fourier::{build_fourier, butterfly_labels, MAX_FOURIER_MODES};
pub use reorder::momentum_reorder_network;
pub use rg::{below_cutoff_state, build_rg, coarse_grain, coarse_layout};
pub use thermal::{build_laplacian, build_tfd};
pub use udis::{build_bog_layer, build_udis, build_udis_for};
