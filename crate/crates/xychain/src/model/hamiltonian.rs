//! Dense Hamiltonian matrices in the spin and fermionic forms.

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::model::{fermionic_ground_energy, ModelParams};
use crate::C64;

/// Largest site count accepted by [`build_hamiltonian`].
pub const MAX_HAMILTONIAN_QUBITS: usize = 12;

/// Which operator form to assemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamiltonianForm {
    /// `Σ_j λ((1+γ)/2 X_j X_{j+1} + (1−γ)/2 Y_j Y_{j+1}) + Z_j − 1/2` with
    /// periodic spin couplings.
    Pauli,
    /// `Σ_j (λ/2)[(c_j† c_{j+1} + h.c.) + γ(c_j c_{j+1} + c_{j+1}† c_j†)] − c_j† c_j`
    /// with periodic fermions, shifted so the ground energy is zero.
    Fermionic,
}

/// Assembles the Hamiltonian as a dense `2^n × 2^n` matrix.
pub fn build_hamiltonian(params: &ModelParams, form: HamiltonianForm) -> Result<Array2<C64>> {
    let n = params.n();
    if n > MAX_HAMILTONIAN_QUBITS {
        return Err(Error::Capacity(format!(
            "dense Hamiltonian supports at most {MAX_HAMILTONIAN_QUBITS} sites, got {n}"
        )));
    }
    Ok(match form {
        HamiltonianForm::Pauli => pauli_form(params),
        HamiltonianForm::Fermionic => fermionic_form(params),
    })
}

fn bit(index: usize, n: usize, q: usize) -> usize {
    index >> (n - 1 - q) & 1
}

fn pauli_form(params: &ModelParams) -> Array2<C64> {
    let n = params.n();
    let dim = 1usize << n;
    let (lambda, gamma) = (params.lambda(), params.gamma());
    let mut h = Array2::from_elem((dim, dim), C64::new(0.0, 0.0));
    for col in 0..dim {
        for j in 0..n {
            let next = (j + 1) % n;
            let z = if bit(col, n, j) == 1 { -1.0 } else { 1.0 };
            h[[col, col]] += C64::new(z - 0.5, 0.0);
            // XX flips both bits with amplitude 1; YY flips both with
            // amplitude −1 on equal bits and +1 on unequal bits.
            let flipped = col ^ (1 << (n - 1 - j)) ^ (1 << (n - 1 - next));
            let yy = if bit(col, n, j) == bit(col, n, next) { -1.0 } else { 1.0 };
            let amplitude = lambda * (0.5 * (1.0 + gamma) + 0.5 * (1.0 - gamma) * yy);
            h[[flipped, col]] += C64::new(amplitude, 0.0);
        }
    }
    h
}

/// Applies `c_site` (or `c_site†` when `create`) to a basis index, returning
/// the new index and the Jordan–Wigner sign.
fn ladder(index: usize, n: usize, site: usize, create: bool) -> Option<(usize, f64)> {
    let occupied = bit(index, n, site) == 1;
    if occupied == create {
        return None;
    }
    let before = if site == 0 { 0 } else { (index >> (n - site)).count_ones() };
    let sign = if before % 2 == 0 { 1.0 } else { -1.0 };
    Some((index ^ (1 << (n - 1 - site)), sign))
}

/// Applies `op_a op_b` (with `op_b` acting first) to a basis index.
fn bilinear(index: usize, n: usize, a: (usize, bool), b: (usize, bool)) -> Option<(usize, f64)> {
    let (mid, s1) = ladder(index, n, b.0, b.1)?;
    let (out, s2) = ladder(mid, n, a.0, a.1)?;
    Some((out, s1 * s2))
}

fn fermionic_form(params: &ModelParams) -> Array2<C64> {
    let n = params.n();
    let dim = 1usize << n;
    let (lambda, gamma) = (params.lambda(), params.gamma());
    let shift = fermionic_ground_energy(params);
    let mut h = Array2::from_elem((dim, dim), C64::new(0.0, 0.0));
    for col in 0..dim {
        h[[col, col]] -= C64::new(shift, 0.0);
        for j in 0..n {
            let next = (j + 1) % n;
            let terms = [
                ((j, true), (next, false), 0.5 * lambda),
                ((next, true), (j, false), 0.5 * lambda),
                ((j, false), (next, false), 0.5 * lambda * gamma),
                ((next, true), (j, true), 0.5 * lambda * gamma),
                ((j, true), (j, false), -1.0),
            ];
            for (a, b, weight) in terms {
                if let Some((row, sign)) = bilinear(col, n, a, b) {
                    h[[row, col]] += C64::new(weight * sign, 0.0);
                }
            }
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::dense::{identity, kron, pauli_matrix};
    use crate::sim::eigen::hermiticity_deviation;
    use crate::sim::unitary::max_abs_difference;
    use crate::sim::{hermitian_eigenvalues, Pauli};

    fn params(n: usize, lambda: f64, gamma: f64) -> ModelParams {
        ModelParams::ground(n, lambda, gamma).unwrap()
    }

    fn embed(n: usize, ops: &[(usize, Pauli)]) -> Array2<C64> {
        (0..n).fold(identity(1), |acc, q| {
            let factor = ops
                .iter()
                .find(|(site, _)| *site == q)
                .map_or_else(|| identity(2), |(_, p)| pauli_matrix(*p));
            kron(&acc, &factor)
        })
    }

    #[test]
    fn pauli_form_matches_kronecker_products() {
        let n = 4;
        let (lambda, gamma) = (0.8, 0.35);
        let mut expected = Array2::from_elem((16, 16), C64::new(0.0, 0.0));
        for j in 0..n {
            let next = (j + 1) % n;
            let xx = embed(n, &[(j, Pauli::X), (next, Pauli::X)]);
            let yy = embed(n, &[(j, Pauli::Y), (next, Pauli::Y)]);
            let z = embed(n, &[(j, Pauli::Z)]);
            expected = expected
                + xx * C64::new(lambda * 0.5 * (1.0 + gamma), 0.0)
                + yy * C64::new(lambda * 0.5 * (1.0 - gamma), 0.0)
                + z
                - identity(16) * C64::new(0.5, 0.0);
        }
        let h = build_hamiltonian(&params(n, lambda, gamma), HamiltonianForm::Pauli).unwrap();
        assert!(max_abs_difference(&h, &expected) < 1e-12);
    }

    #[test]
    fn two_site_field_only_spectrum() {
        let h = build_hamiltonian(&params(2, 0.0, 1.0), HamiltonianForm::Fermionic).unwrap();
        let values = hermitian_eigenvalues(&h).unwrap();
        for (v, e) in values.iter().zip([0.0, 1.0, 1.0, 2.0]) {
            assert!((v - e).abs() < 1e-12);
        }
    }

    #[test]
    fn forms_agree_without_coupling() {
        // With λ = 0 the spin form equals twice the unshifted fermionic form
        // plus n/2.
        let n = 4;
        let p = params(n, 0.0, 1.0);
        let spin = build_hamiltonian(&p, HamiltonianForm::Pauli).unwrap();
        let fermion = build_hamiltonian(&p, HamiltonianForm::Fermionic).unwrap();
        let raw = fermion + identity(16) * C64::new(fermionic_ground_energy(&p), 0.0);
        let expected = raw * C64::new(2.0, 0.0) + identity(16) * C64::new(n as f64 / 2.0, 0.0);
        assert!(max_abs_difference(&spin, &expected) < 1e-12);
    }

    #[test]
    fn hermitian_and_parity_symmetric() {
        let n = 4;
        let parity = embed(n, &[(0, Pauli::Z), (1, Pauli::Z), (2, Pauli::Z), (3, Pauli::Z)]);
        for (lambda, gamma) in [(0.5, 1.0), (1.0, 1.0), (1.5, 1.0), (1.0, 0.5)] {
            for form in [HamiltonianForm::Pauli, HamiltonianForm::Fermionic] {
                let h = build_hamiltonian(&params(n, lambda, gamma), form).unwrap();
                assert!(hermiticity_deviation(&h) < 1e-12);
                let commutator = h.dot(&parity) - parity.dot(&h);
                assert!(commutator.iter().all(|z| z.norm() < 1e-10));
            }
        }
    }

    #[test]
    fn capacity_limit() {
        let p = params(14, 1.0, 1.0);
        assert!(matches!(
            build_hamiltonian(&p, HamiltonianForm::Fermionic),
            Err(Error::Capacity(_))
        ));
    }
}
