//! Fermionic Fourier transform from momentum wires to position sites.
//!
//! The circuit is a radix-2 network of two-mode butterflies `F_p` with
//! adjacent fermionic swaps moving modes into place. Its one-particle action
//! maps momentum label `k` (on the wire given by the canonical
//! [`MomentumLayout`]) to the plane wave `Σ_j e^{2πikj/n}/√n |j⟩`.
//!
//! The network is built in three stages:
//! 1. a gate skeleton of butterflies and swaps for the recursive even/odd
//!    split, with butterfly labels still open;
//! 2. a swap prefix that routes the canonical layout into the order the
//!    skeleton expects;
//! 3. a backward pass from the target plane waves through the network that
//!    fixes each butterfly label and the residual per-wire input phases.

use std::f64::consts::PI;

use crate::circuits::{Circuit, GateKind};
use crate::error::{argument, Result};
use crate::model::MomentumLayout;
use crate::C64;

/// Largest mode count accepted by [`build_fourier`].
pub const MAX_FOURIER_MODES: usize = 16;

#[derive(Debug, Clone, Copy)]
enum Step {
    /// Butterfly on wires `(w, w+1)`.
    Butterfly(usize),
    /// Fermionic swap on wires `(w, w+1)`.
    Swap(usize),
}

impl Step {
    fn wire(self) -> usize {
        match self {
            Step::Butterfly(w) | Step::Swap(w) => w,
        }
    }
}

/// Adjacent transpositions turning `current` into `target`, recorded as
/// swaps at `offset + position`.
fn bubble<T: PartialEq + Clone>(current: &[T], target: &[T], offset: usize, steps: &mut Vec<Step>) {
    let mut current = current.to_vec();
    for (i, t) in target.iter().enumerate() {
        let mut j = current
            .iter()
            .position(|c| c == t)
            .expect("bubble target is a permutation of the current order");
        while j > i {
            current.swap(j - 1, j);
            steps.push(Step::Swap(offset + j - 1));
            j -= 1;
        }
    }
}

/// Half-output of a butterfly: `(is_upper, index)`.
type Half = (bool, usize);

/// Skeleton for `size` modes on wires `offset..offset+size`.
///
/// Returns the input order (which relative momentum each wire must carry)
/// and the steps. Inputs `m` and `m + size/2` feed one butterfly; its lower
/// output continues into the first half-size transform and its upper output
/// into the second, which are then interleaved into even and odd sites.
fn skeleton(size: usize, offset: usize) -> (Vec<usize>, Vec<Step>) {
    if size == 1 {
        return (vec![0], Vec::new());
    }
    let half = size / 2;
    let (inner_inputs, first) = skeleton(half, offset);
    let (_, second) = skeleton(half, offset + half);
    let mut inputs = Vec::with_capacity(size);
    let mut steps = Vec::new();
    let mut outputs: Vec<Half> = Vec::with_capacity(size);
    for (t, &m) in inner_inputs.iter().enumerate() {
        inputs.push(m + half);
        inputs.push(m);
        steps.push(Step::Butterfly(offset + 2 * t));
        outputs.push((true, m));
        outputs.push((false, m));
    }
    let target: Vec<Half> = inner_inputs
        .iter()
        .map(|&m| (false, m))
        .chain(inner_inputs.iter().map(|&m| (true, m)))
        .collect();
    bubble(&outputs, &target, offset, &mut steps);
    steps.extend(first);
    steps.extend(second);
    let interleaved: Vec<usize> = (0..half).map(|i| 2 * i).chain((0..half).map(|i| 2 * i + 1)).collect();
    let sites: Vec<usize> = (0..size).collect();
    bubble(&interleaved, &sites, offset, &mut steps);
    (inputs, steps)
}

/// Builds the fermionic Fourier transform on `n` wires.
///
/// Input wires follow [`MomentumLayout::canonical`]; output wire `j` is site
/// `j`. `n` must be a power of two between 2 and [`MAX_FOURIER_MODES`].
pub fn build_fourier(n: usize) -> Result<Circuit> {
    if !(2..=MAX_FOURIER_MODES).contains(&n) || !n.is_power_of_two() {
        return Err(argument(format!(
            "Fourier transform needs a power-of-two mode count in 2..={MAX_FOURIER_MODES}, got {n}"
        )));
    }
    let layout = MomentumLayout::canonical(n)?;
    let (inputs, skeleton_steps) = skeleton(n, 0);
    let mut steps = Vec::new();
    bubble(layout.labels(), &inputs, 0, &mut steps);
    steps.extend(skeleton_steps);

    // Forward pass: momentum support of each wire before every butterfly.
    let mut support: Vec<u32> = layout.labels().iter().map(|&k| 1u32 << k).collect();
    let mut lower_support = Vec::new();
    for step in &steps {
        let w = step.wire();
        match step {
            Step::Swap(_) => support.swap(w, w + 1),
            Step::Butterfly(_) => {
                lower_support.push(support[w + 1]);
                let joined = support[w] | support[w + 1];
                support[w] = joined;
                support[w + 1] = joined;
            }
        }
    }

    // Backward pass: rows of the target one-particle matrix pulled back
    // through each gate. A swap maps rows (u, l) to (−l, −u); a butterfly
    // with phase φ maps them to ((e^{−iφ}u − l)/√2, (e^{−iφ}u + l)/√2).
    let scale = 1.0 / (n as f64).sqrt();
    let mut rows: Vec<Vec<C64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|k| C64::from_polar(scale, 2.0 * PI * (k * j) as f64 / n as f64))
                .collect()
        })
        .collect();
    let mut labels = vec![0.0; steps.len()];
    let mut butterfly_index = lower_support.len();
    for (index, step) in steps.iter().enumerate().rev() {
        let w = step.wire();
        let (upper, lower) = (rows[w].clone(), rows[w + 1].clone());
        match step {
            Step::Swap(_) => {
                rows[w] = lower.iter().map(|z| -z).collect();
                rows[w + 1] = upper.iter().map(|z| -z).collect();
            }
            Step::Butterfly(_) => {
                butterfly_index -= 1;
                let k = lower_support[butterfly_index].trailing_zeros() as usize;
                let raw = (upper[k] / lower[k]).arg();
                let turns = ((raw - PI) / (2.0 * PI)).rem_euclid(1.0);
                let p = ((turns * n as f64).round() / n as f64).rem_euclid(1.0);
                labels[index] = p;
                let rotate = C64::from_polar(1.0, -(2.0 * PI * p + PI));
                let r = std::f64::consts::FRAC_1_SQRT_2;
                rows[w] = upper.iter().zip(&lower).map(|(u, l)| (rotate * u - l) * r).collect();
                rows[w + 1] = upper.iter().zip(&lower).map(|(u, l)| (rotate * u + l) * r).collect();
            }
        }
    }

    let mut circuit = Circuit::new(n);
    for (wire, row) in rows.iter().enumerate() {
        let correction = row[layout.label_of_wire(wire)];
        debug_assert!((correction.norm() - 1.0).abs() < 1e-9);
        let angle = correction.arg();
        if angle.abs() > 1e-12 {
            circuit.push(GateKind::Phase(angle), &[wire])?;
        }
    }
    for (step, p) in steps.iter().zip(labels) {
        let w = step.wire();
        let kind = match step {
            Step::Swap(_) => GateKind::Fswap,
            Step::Butterfly(_) => GateKind::Fourier(p),
        };
        circuit.push(kind, &[w, w + 1])?;
    }
    Ok(circuit)
}

/// Butterfly labels of a Fourier circuit as integer multiples of `1/n`,
/// sorted ascending.
pub fn butterfly_labels(circuit: &Circuit) -> Vec<usize> {
    let n = circuit.num_qubits() as f64;
    let mut labels: Vec<usize> = circuit
        .ops()
        .iter()
        .filter_map(|op| match op.kind {
            GateKind::Fourier(p) => Some((p * n).round() as usize),
            _ => None,
        })
        .collect();
    labels.sort_unstable();
    labels
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::StateVector;

    /// Columns of the one-particle block: entry `[j][k]` is the amplitude on
    /// site `j` for a particle entering with momentum `k`.
    fn one_particle_matrix(circuit: &Circuit, n: usize) -> Vec<Vec<C64>> {
        let layout = MomentumLayout::canonical(n).unwrap();
        let mut m = vec![vec![C64::new(0.0, 0.0); n]; n];
        for k in 0..n {
            let mut state = StateVector::with_occupied(n, &[layout.wire_of_label(k)]).unwrap();
            circuit.apply(&mut state).unwrap();
            for (j, row) in m.iter_mut().enumerate() {
                row[k] = state.amplitudes()[1 << (n - 1 - j)];
            }
        }
        m
    }

    #[test]
    fn one_particle_action_is_the_dft() {
        for n in [2, 4, 8, 16] {
            let circuit = build_fourier(n).unwrap();
            let m = one_particle_matrix(&circuit, n);
            let scale = 1.0 / (n as f64).sqrt();
            let mut worst: f64 = 0.0;
            for (j, row) in m.iter().enumerate() {
                for (k, z) in row.iter().enumerate() {
                    let expected = C64::from_polar(scale, 2.0 * PI * (j * k) as f64 / n as f64);
                    worst = worst.max((z - expected).norm());
                }
            }
            assert!(worst < 1e-12, "n={n}: {worst:e}");
        }
    }

    #[test]
    fn vacuum_is_fixed() {
        let circuit = build_fourier(8).unwrap();
        let mut state = StateVector::zero(8).unwrap();
        circuit.apply(&mut state).unwrap();
        assert!((state.amplitudes()[0] - C64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn gate_counts() {
        for (n, butterflies) in [(2, 1), (4, 4), (8, 12), (16, 32)] {
            let circuit = build_fourier(n).unwrap();
            assert_eq!(circuit.count(|k| matches!(k, GateKind::Fourier(_))), butterflies);
        }
        let n8 = build_fourier(8).unwrap();
        assert_eq!(n8.count(|k| matches!(k, GateKind::Fswap)), 36);
    }

    #[test]
    fn butterfly_label_multisets() {
        assert_eq!(butterfly_labels(&build_fourier(2).unwrap()), vec![1]);
        assert_eq!(butterfly_labels(&build_fourier(4).unwrap()), vec![0, 0, 2, 3]);
        assert_eq!(
            butterfly_labels(&build_fourier(8).unwrap()),
            vec![0, 0, 0, 0, 0, 0, 2, 2, 4, 5, 6, 7]
        );
    }

    #[test]
    fn rejects_unsupported_sizes() {
        for n in [0, 1, 3, 6, 12, 32] {
            assert!(build_fourier(n).is_err());
        }
    }
}
