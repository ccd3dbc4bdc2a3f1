//! Experiment runners built on the circuits, with CSV/JSON output.

pub mod entropy;
pub mod fit;
pub mod output;
pub mod spacetime;
pub mod thermal;

pub use entropy::{
    gaussian_ground_entropy_curve, ground_correlations, run_entropy_curve, run_entropy_curve_mixed, EntropyCurve,
};
pub use fit::{chord_log, critical_fit, FitModel, FitResult};
pub use output::{Manifest, OutputFormat, Table, Value};
pub use spacetime::{run_expz_coarse, run_expz_from_state, run_expz_spacetime, SpacetimeGrid};
pub use thermal::{
    prepare_tfd, prepare_tfd_position, run_tfd_entropy_vs_beta, thermal_state_oracle, TfdEntropyRow, ThermalBasis,
};
