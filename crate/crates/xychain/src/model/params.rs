//! The parameter bundle shared by every builder and experiment.

use serde::Serialize;

use crate::error::{argument, Result};

/// Site count, coupling ratio, anisotropy and inverse temperature.
///
/// The transverse field is normalized to one, so `lambda` is the ratio of
/// the spin coupling to the field. `gamma = 1` is the transverse-field Ising
/// chain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModelParams {
    n: usize,
    lambda: f64,
    gamma: f64,
    beta: f64,
}

impl ModelParams {
    /// Validates and bundles the parameters.
    ///
    /// `n` must be even and at least 2, all reals finite and `beta ≥ 0`.
    /// Circuit builders that need a radix-2 Fourier transform additionally
    /// require `n` to be a power of two.
    pub fn new(n: usize, lambda: f64, gamma: f64, beta: f64) -> Result<Self> {
        if n < 2 || !n.is_multiple_of(2) {
            return Err(argument(format!("site count must be even and at least 2, got {n}")));
        }
        if !lambda.is_finite() || !gamma.is_finite() {
            return Err(argument("lambda and gamma must be finite"));
        }
        if !beta.is_finite() || beta < 0.0 {
            return Err(argument(format!("beta must be finite and non-negative, got {beta}")));
        }
        Ok(Self { n, lambda, gamma, beta })
    }

    /// Parameters at zero inverse temperature.
    pub fn ground(n: usize, lambda: f64, gamma: f64) -> Result<Self> {
        Self::new(n, lambda, gamma, 0.0)
    }

    /// Number of sites, equal to the number of fermionic modes.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Coupling ratio.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Anisotropy.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Inverse temperature.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// The same chain at another inverse temperature.
    pub fn with_beta(&self, beta: f64) -> Result<Self> {
        Self::new(self.n, self.lambda, self.gamma, beta)
    }

    /// The same couplings on a chain of another length.
    pub fn with_sites(&self, n: usize) -> Result<Self> {
        Self::new(n, self.lambda, self.gamma, self.beta)
    }

    /// Whether the site count is a power of two.
    pub fn is_radix2(&self) -> bool {
        self.n.is_power_of_two()
    }

    /// Fails unless the site count is a power of two.
    pub fn require_radix2(&self) -> Result<()> {
        if self.is_radix2() {
            Ok(())
        } else {
            Err(argument(format!(
                "this construction needs a power-of-two site count, got {}",
                self.n
            )))
        }
    }
}
