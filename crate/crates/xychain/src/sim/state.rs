//! Dense statevectors and in-place gate application.

use crate::error::{argument, validation, Result};
use crate::sim::GateMatrix;
use crate::tolerances::TOLERANCES;
use crate::C64;

/// Largest register the dense kernels accept.
pub const MAX_QUBITS: usize = 20;

/// Single-qubit Pauli axis used by [`StateVector::expectation_pauli`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    /// Bit flip.
    X,
    /// Bit and phase flip.
    Y,
    /// Phase flip.
    Z,
}

/// Complex amplitudes over the `2^n` computational basis states of `n` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amplitudes: Vec<C64>,
}

/// Bit mask selecting qubit `q` of an `n`-qubit amplitude index.
#[inline]
pub(crate) fn qubit_mask(num_qubits: usize, q: usize) -> usize {
    1usize << (num_qubits - 1 - q)
}

impl StateVector {
    /// The all-zeros basis state `|0…0⟩`.
    pub fn zero(num_qubits: usize) -> Result<Self> {
        Self::basis(num_qubits, 0)
    }

    /// The computational basis state with the given index.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        check_size(num_qubits)?;
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(argument(format!(
                "basis index {index} out of range for {num_qubits} qubits"
            )));
        }
        let mut amplitudes = vec![C64::new(0.0, 0.0); dim];
        amplitudes[index] = C64::new(1.0, 0.0);
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// The basis state with exactly the listed qubits set to `|1⟩`.
    pub fn with_occupied(num_qubits: usize, occupied: &[usize]) -> Result<Self> {
        let mut index = 0;
        for &q in occupied {
            if q >= num_qubits {
                return Err(argument(format!("qubit {q} out of range")));
            }
            index |= qubit_mask(num_qubits, q);
        }
        Self::basis(num_qubits, index)
    }

    /// Wraps amplitudes whose squared norm is one.
    pub fn from_amplitudes(num_qubits: usize, amplitudes: Vec<C64>) -> Result<Self> {
        check_size(num_qubits)?;
        if amplitudes.len() != 1usize << num_qubits {
            return Err(argument(format!(
                "expected {} amplitudes, got {}",
                1usize << num_qubits,
                amplitudes.len()
            )));
        }
        let state = Self {
            num_qubits,
            amplitudes,
        };
        let deviation = (state.norm_sqr() - 1.0).abs();
        if deviation > TOLERANCES.norm {
            return Err(validation(format!(
                "state is not normalized: |norm² - 1| = {deviation:e}"
            )));
        }
        Ok(state)
    }

    /// Normalizes arbitrary nonzero amplitudes.
    pub fn normalized(num_qubits: usize, mut amplitudes: Vec<C64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(argument("cannot normalize a zero or non-finite vector"));
        }
        for z in &mut amplitudes {
            *z /= norm;
        }
        Self::from_amplitudes(num_qubits, amplitudes)
    }

    /// Number of qubits.
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// Amplitudes indexed by basis state.
    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    /// Sum of squared amplitude moduli.
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Inner product `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        if self.num_qubits != other.num_qubits {
            return Err(argument("inner product of states with different sizes"));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Tensor product `self ⊗ other`, with `self` on the leading qubits.
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector> {
        let num_qubits = self.num_qubits + other.num_qubits;
        check_size(num_qubits)?;
        let mut amplitudes = Vec::with_capacity(1usize << num_qubits);
        for a in &self.amplitudes {
            amplitudes.extend(other.amplitudes.iter().map(|b| a * b));
        }
        Ok(StateVector {
            num_qubits,
            amplitudes,
        })
    }

    /// Applies a one-qubit gate to qubit `q`.
    pub fn apply_one_qubit(&mut self, gate: &GateMatrix, q: usize) -> Result<()> {
        if gate.arity() != 1 {
            return Err(argument("expected a one-qubit gate"));
        }
        self.check_qubit(q)?;
        let stride = qubit_mask(self.num_qubits, q);
        let (g00, g01, g10, g11) = (gate.get(0, 0), gate.get(0, 1), gate.get(1, 0), gate.get(1, 1));
        let amps = &mut self.amplitudes;
        for block in (0..amps.len()).step_by(2 * stride) {
            for i0 in block..block + stride {
                let i1 = i0 + stride;
                let (a0, a1) = (amps[i0], amps[i1]);
                amps[i0] = g00 * a0 + g01 * a1;
                amps[i1] = g10 * a0 + g11 * a1;
            }
        }
        Ok(())
    }

    /// Applies a two-qubit gate with `q1` as the more significant slot.
    pub fn apply_two_qubit(&mut self, gate: &GateMatrix, q1: usize, q2: usize) -> Result<()> {
        if gate.arity() != 2 {
            return Err(argument("expected a two-qubit gate"));
        }
        self.check_qubit(q1)?;
        self.check_qubit(q2)?;
        if q1 == q2 {
            return Err(argument(format!("two-qubit gate on repeated qubit {q1}")));
        }
        let m1 = qubit_mask(self.num_qubits, q1);
        let m2 = qubit_mask(self.num_qubits, q2);
        let g = gate.matrix();
        let mut local = [C64::new(0.0, 0.0); 4];
        for base in 0..self.amplitudes.len() {
            if base & (m1 | m2) != 0 {
                continue;
            }
            let idx = [base, base | m2, base | m1, base | m1 | m2];
            for (slot, &i) in local.iter_mut().zip(&idx) {
                *slot = self.amplitudes[i];
            }
            for (r, &i) in idx.iter().enumerate() {
                self.amplitudes[i] = (0..4).map(|c| g[[r, c]] * local[c]).sum();
            }
        }
        Ok(())
    }

    /// Expectation value of a Pauli string given as `(qubit, axis)` pairs.
    pub fn expectation_pauli(&self, ops: &[(usize, Pauli)]) -> Result<f64> {
        let mut flip = 0usize;
        let mut y_mask = 0usize;
        let mut z_mask = 0usize;
        let mut seen = 0usize;
        for &(q, axis) in ops {
            self.check_qubit(q)?;
            let m = qubit_mask(self.num_qubits, q);
            if seen & m != 0 {
                return Err(argument(format!("qubit {q} appears twice in Pauli string")));
            }
            seen |= m;
            match axis {
                Pauli::X => flip |= m,
                Pauli::Y => {
                    flip |= m;
                    y_mask |= m;
                }
                Pauli::Z => z_mask |= m,
            }
        }
        // P|i⟩ = phase(i)|i ^ flip⟩ with Y|0⟩ = i|1⟩ and Y|1⟩ = -i|0⟩.
        let y_count = y_mask.count_ones();
        let base_phase = match y_count % 4 {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        };
        let mut total = C64::new(0.0, 0.0);
        for (i, amp) in self.amplitudes.iter().enumerate() {
            let negative = ((i & z_mask).count_ones() + (i & y_mask).count_ones()) % 2 == 1;
            let phase = if negative { -base_phase } else { base_phase };
            total += self.amplitudes[i ^ flip].conj() * phase * amp;
        }
        if total.im.abs() > TOLERANCES.imaginary {
            return Err(validation(format!(
                "Pauli expectation has imaginary part {:e}",
                total.im
            )));
        }
        Ok(total.re)
    }

    fn check_qubit(&self, q: usize) -> Result<()> {
        if q >= self.num_qubits {
            return Err(argument(format!(
                "qubit {q} out of range for {} qubits",
                self.num_qubits
            )));
        }
        Ok(())
    }
}

fn check_size(num_qubits: usize) -> Result<()> {
    if num_qubits == 0 || num_qubits > MAX_QUBITS {
        return Err(argument(format!(
            "qubit count must be in 1..={MAX_QUBITS}, got {num_qubits}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{cnot, fswap_gate, hadamard, pauli_x, pauli_z};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn bell() -> StateVector {
        let h = C64::new(FRAC_1_SQRT_2, 0.0);
        let z = C64::new(0.0, 0.0);
        StateVector::from_amplitudes(2, vec![h, z, z, h]).unwrap()
    }

    #[test]
    fn x_flips_basis_state() {
        let mut s = StateVector::zero(1).unwrap();
        s.apply_one_qubit(&pauli_x(), 0).unwrap();
        assert_eq!(s, StateVector::basis(1, 1).unwrap());
    }

    #[test]
    fn hadamard_makes_plus_state() {
        let mut s = StateVector::zero(1).unwrap();
        s.apply_one_qubit(&hadamard(), 0).unwrap();
        for a in s.amplitudes() {
            assert!((a - C64::new(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn z_on_second_qubit_of_bell_pair() {
        let mut s = bell();
        s.apply_one_qubit(&pauli_z(), 1).unwrap();
        let a = s.amplitudes();
        assert!((a[0].re - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((a[3].re + FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn cnot_truth_table_on_10() {
        let mut s = StateVector::basis(2, 0b10).unwrap();
        s.apply_two_qubit(&cnot(), 0, 1).unwrap();
        assert_eq!(s, StateVector::basis(2, 0b11).unwrap());
    }

    #[test]
    fn fswap_moves_excitation_up_to_sign() {
        let mut s = StateVector::basis(2, 0b01).unwrap();
        s.apply_two_qubit(&fswap_gate(), 0, 1).unwrap();
        assert!((s.amplitudes()[0b10].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn identity_gate_leaves_state() {
        let mut s = bell();
        let id = GateMatrix::new(ndarray::Array2::eye(4).mapv(|x: f64| C64::new(x, 0.0))).unwrap();
        s.apply_two_qubit(&id, 1, 0).unwrap();
        assert_eq!(s, bell());
    }

    #[test]
    fn two_qubit_gate_rejects_repeated_target() {
        let mut s = StateVector::zero(2).unwrap();
        assert!(matches!(s.apply_two_qubit(&cnot(), 1, 1), Err(crate::Error::Argument(_))));
    }

    #[test]
    fn one_qubit_gate_rejects_out_of_range() {
        let mut s = StateVector::zero(2).unwrap();
        assert!(s.apply_one_qubit(&pauli_x(), 2).is_err());
    }

    #[test]
    fn reversed_targets_swap_slots() {
        let mut s = StateVector::basis(2, 0b01).unwrap();
        s.apply_two_qubit(&cnot(), 1, 0).unwrap();
        assert_eq!(s, StateVector::basis(2, 0b11).unwrap());
    }

    #[test]
    fn pauli_expectations() {
        let zero = StateVector::zero(1).unwrap();
        assert_eq!(zero.expectation_pauli(&[(0, Pauli::Z)]).unwrap(), 1.0);
        assert_eq!(zero.expectation_pauli(&[(0, Pauli::X)]).unwrap(), 0.0);
        let zz = bell().expectation_pauli(&[(0, Pauli::Z), (1, Pauli::Z)]).unwrap();
        assert!((zz - 1.0).abs() < 1e-15);
        let yy = bell().expectation_pauli(&[(0, Pauli::Y), (1, Pauli::Y)]).unwrap();
        assert!((yy + 1.0).abs() < 1e-15);
    }

    #[test]
    fn pauli_expectation_rejects_duplicate_site() {
        let s = bell();
        assert!(s.expectation_pauli(&[(0, Pauli::Z), (0, Pauli::X)]).is_err());
    }
}
