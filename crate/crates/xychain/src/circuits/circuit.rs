//! Circuit representation: an ordered list of named gates on target wires,
//! with a line-oriented text serialization.
//!
//! The text format has a header line `qubits <n>` followed by one gate per
//! line, `<kind> <params...> <targets...>`. Blank lines and lines starting
//! with `#` are ignored. Parameters are written with the shortest decimal
//! representation that round-trips exactly. A `custom` gate lists its arity
//! followed by the real and imaginary parts of its matrix in row-major order.

use std::fmt::Write as _;

use ndarray::Array2;

use crate::error::{argument, Error, Result};
use crate::gates;
use crate::sim::{GateMatrix, StateVector};
use crate::C64;

/// A gate type together with its real parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum GateKind {
    /// Hadamard.
    Hadamard,
    /// `diag(1, i)`.
    S,
    /// `diag(1, -i)`.
    Sdg,
    /// Pauli X.
    X,
    /// Controlled NOT, first target controls.
    Cnot,
    /// `exp(i a Z)`.
    ZPhase(f64),
    /// `diag(1, e^{iα})`.
    Phase(f64),
    /// Bogoliubov rotation by the given angle.
    Bog(f64),
    /// Fourier butterfly with momentum fraction `p`.
    Fourier(f64),
    /// Adjoint of the Fourier butterfly with momentum fraction `p`.
    FourierAdj(f64),
    /// Fermionic swap.
    Fswap,
    /// Two-wire phase `R(θ)`.
    PhaseR(f64),
    /// Laplace gate for inverse temperature and mode frequency.
    Laplace {
        /// Inverse temperature.
        beta: f64,
        /// Mode frequency.
        frequency: f64,
    },
    /// Arbitrary validated unitary.
    Custom(GateMatrix),
}

impl GateKind {
    /// Number of target wires.
    pub fn arity(&self) -> usize {
        match self {
            GateKind::Hadamard
            | GateKind::S
            | GateKind::Sdg
            | GateKind::X
            | GateKind::ZPhase(_)
            | GateKind::Phase(_)
            | GateKind::Laplace { .. } => 1,
            GateKind::Cnot
            | GateKind::Bog(_)
            | GateKind::Fourier(_)
            | GateKind::FourierAdj(_)
            | GateKind::Fswap
            | GateKind::PhaseR(_) => 2,
            GateKind::Custom(g) => g.arity(),
        }
    }

    /// Name used in the text format.
    pub fn name(&self) -> &'static str {
        match self {
            GateKind::Hadamard => "h",
            GateKind::S => "s",
            GateKind::Sdg => "sdg",
            GateKind::X => "x",
            GateKind::Cnot => "cnot",
            GateKind::ZPhase(_) => "zphase",
            GateKind::Phase(_) => "phase",
            GateKind::Bog(_) => "bog",
            GateKind::Fourier(_) => "fourier",
            GateKind::FourierAdj(_) => "fourier_adj",
            GateKind::Fswap => "fswap",
            GateKind::PhaseR(_) => "phase_r",
            GateKind::Laplace { .. } => "laplace",
            GateKind::Custom(_) => "custom",
        }
    }

    /// Real parameters in serialization order.
    pub fn params(&self) -> Vec<f64> {
        match self {
            GateKind::ZPhase(a)
            | GateKind::Phase(a)
            | GateKind::Bog(a)
            | GateKind::Fourier(a)
            | GateKind::FourierAdj(a)
            | GateKind::PhaseR(a) => vec![*a],
            GateKind::Laplace { beta, frequency } => vec![*beta, *frequency],
            GateKind::Custom(g) => {
                let mut out = vec![g.arity() as f64];
                for z in g.matrix().iter() {
                    out.push(z.re);
                    out.push(z.im);
                }
                out
            }
            _ => Vec::new(),
        }
    }

    /// The gate's unitary matrix.
    pub fn matrix(&self) -> GateMatrix {
        match self {
            GateKind::Hadamard => gates::hadamard(),
            GateKind::S => gates::s_gate(),
            GateKind::Sdg => gates::s_dagger(),
            GateKind::X => gates::pauli_x(),
            GateKind::Cnot => gates::cnot(),
            GateKind::ZPhase(a) => gates::z_phase(*a),
            GateKind::Phase(a) => gates::phase(*a),
            GateKind::Bog(theta) => gates::bog_gate(*theta),
            GateKind::Fourier(p) => gates::fourier_gate(*p),
            GateKind::FourierAdj(p) => gates::fourier_gate(*p).adjoint(),
            GateKind::Fswap => gates::fswap_gate(),
            GateKind::PhaseR(theta) => gates::phase_gate_r(*theta),
            GateKind::Laplace { beta, frequency } => gates::laplace_gate(*beta, *frequency),
            GateKind::Custom(g) => g.clone(),
        }
    }

    /// The inverse gate.
    pub fn adjoint(&self) -> GateKind {
        match self {
            GateKind::S => GateKind::Sdg,
            GateKind::Sdg => GateKind::S,
            GateKind::ZPhase(a) => GateKind::ZPhase(-a),
            GateKind::Phase(a) => GateKind::Phase(-a),
            GateKind::Bog(theta) => GateKind::Bog(-theta),
            GateKind::Fourier(p) => GateKind::FourierAdj(*p),
            GateKind::FourierAdj(p) => GateKind::Fourier(*p),
            GateKind::PhaseR(theta) => GateKind::PhaseR(-theta),
            GateKind::Custom(g) => GateKind::Custom(g.adjoint()),
            GateKind::Hadamard | GateKind::X | GateKind::Cnot | GateKind::Fswap | GateKind::Laplace { .. } => {
                self.clone()
            }
        }
    }

    fn from_parts(name: &str, params: &[f64]) -> std::result::Result<GateKind, String> {
        let expect = |count: usize| {
            if params.len() == count {
                Ok(())
            } else {
                Err(format!("gate `{name}` takes {count} parameter(s), got {}", params.len()))
            }
        };
        let kind = match name {
            "h" => expect(0).map(|_| GateKind::Hadamard)?,
            "s" => expect(0).map(|_| GateKind::S)?,
            "sdg" => expect(0).map(|_| GateKind::Sdg)?,
            "x" => expect(0).map(|_| GateKind::X)?,
            "cnot" => expect(0).map(|_| GateKind::Cnot)?,
            "fswap" => expect(0).map(|_| GateKind::Fswap)?,
            "zphase" => expect(1).map(|_| GateKind::ZPhase(params[0]))?,
            "phase" => expect(1).map(|_| GateKind::Phase(params[0]))?,
            "bog" => expect(1).map(|_| GateKind::Bog(params[0]))?,
            "fourier" => expect(1).map(|_| GateKind::Fourier(params[0]))?,
            "fourier_adj" => expect(1).map(|_| GateKind::FourierAdj(params[0]))?,
            "phase_r" => expect(1).map(|_| GateKind::PhaseR(params[0]))?,
            "laplace" => expect(2).map(|_| GateKind::Laplace {
                beta: params[0],
                frequency: params[1],
            })?,
            "custom" => {
                let arity = params.first().copied().unwrap_or(0.0);
                let dim = match arity {
                    1.0 => 2,
                    2.0 => 4,
                    _ => return Err("custom gate arity must be 1 or 2".into()),
                };
                expect(1 + 2 * dim * dim)?;
                let entries: Vec<C64> = params[1..].chunks(2).map(|p| C64::new(p[0], p[1])).collect();
                let matrix = Array2::from_shape_vec((dim, dim), entries).map_err(|e| e.to_string())?;
                GateKind::Custom(GateMatrix::new(matrix).map_err(|e| e.to_string())?)
            }
            other => return Err(format!("unknown gate kind `{other}`")),
        };
        Ok(kind)
    }

    fn param_count(name: &str, first_param: Option<f64>) -> Option<usize> {
        match name {
            "h" | "s" | "sdg" | "x" | "cnot" | "fswap" => Some(0),
            "zphase" | "phase" | "bog" | "fourier" | "fourier_adj" | "phase_r" => Some(1),
            "laplace" => Some(2),
            "custom" => match first_param {
                Some(1.0) => Some(1 + 8),
                Some(2.0) => Some(1 + 32),
                _ => None,
            },
            _ => None,
        }
    }
}

/// One gate applied to specific wires.
#[derive(Debug, Clone, PartialEq)]
pub struct GateOp {
    /// Gate type and parameters.
    pub kind: GateKind,
    /// Target wires; the first is the more significant slot.
    pub targets: Vec<usize>,
}

/// An ordered gate list on a fixed number of wires.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Circuit {
    num_qubits: usize,
    ops: Vec<GateOp>,
}

impl Circuit {
    /// An empty circuit on `num_qubits` wires.
    pub fn new(num_qubits: usize) -> Self {
        Self {
            num_qubits,
            ops: Vec::new(),
        }
    }

    /// Number of wires.
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// Gates in application order.
    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    /// Number of gates.
    pub fn len(&self) -> usize {
        self.ops.len()
    }

    /// Whether the circuit has no gates.
    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Largest wire index used by any gate.
    pub fn max_target(&self) -> Option<usize> {
        self.ops.iter().flat_map(|op| op.targets.iter().copied()).max()
    }

    /// Number of gates whose kind satisfies `predicate`.
    pub fn count(&self, predicate: impl Fn(&GateKind) -> bool) -> usize {
        self.ops.iter().filter(|op| predicate(&op.kind)).count()
    }

    /// Appends a gate after validating its targets and parameters.
    pub fn push(&mut self, kind: GateKind, targets: &[usize]) -> Result<()> {
        if targets.len() != kind.arity() {
            return Err(argument(format!(
                "gate `{}` needs {} target(s), got {}",
                kind.name(),
                kind.arity(),
                targets.len()
            )));
        }
        if let Some(&q) = targets.iter().find(|&&q| q >= self.num_qubits) {
            return Err(argument(format!(
                "target {q} out of range for {} qubits",
                self.num_qubits
            )));
        }
        if targets.len() == 2 && targets[0] == targets[1] {
            return Err(argument(format!("gate `{}` has repeated target", kind.name())));
        }
        if kind.params().iter().any(|p| !p.is_finite()) {
            return Err(argument(format!("gate `{}` has a non-finite parameter", kind.name())));
        }
        self.ops.push(GateOp {
            kind,
            targets: targets.to_vec(),
        });
        Ok(())
    }

    /// Appends another circuit with its wire `i` placed on `wire_map[i]`.
    pub fn append_mapped(&mut self, other: &Circuit, wire_map: &[usize]) -> Result<()> {
        if wire_map.len() < other.num_qubits {
            return Err(argument("wire map is shorter than the appended circuit"));
        }
        for op in &other.ops {
            let targets: Vec<usize> = op.targets.iter().map(|&q| wire_map[q]).collect();
            self.push(op.kind.clone(), &targets)?;
        }
        Ok(())
    }

    /// Appends another circuit on the same wires.
    pub fn append(&mut self, other: &Circuit) -> Result<()> {
        let identity: Vec<usize> = (0..other.num_qubits).collect();
        self.append_mapped(other, &identity)
    }

    /// The inverse circuit: reversed order, each gate replaced by its adjoint.
    pub fn inverse(&self) -> Circuit {
        Circuit {
            num_qubits: self.num_qubits,
            ops: self
                .ops
                .iter()
                .rev()
                .map(|op| GateOp {
                    kind: op.kind.adjoint(),
                    targets: op.targets.clone(),
                })
                .collect(),
        }
    }

    /// Applies every gate to a state in order.
    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        if let Some(q) = self.max_target() {
            if q >= state.num_qubits() {
                return Err(argument(format!(
                    "circuit targets qubit {q} but the state has {} qubits",
                    state.num_qubits()
                )));
            }
        }
        for op in &self.ops {
            let gate = op.kind.matrix();
            match op.targets.as_slice() {
                [q] => state.apply_one_qubit(&gate, *q)?,
                [q1, q2] => state.apply_two_qubit(&gate, *q1, *q2)?,
                _ => unreachable!("push validates arity"),
            }
        }
        Ok(())
    }

    /// Serializes to the line-oriented text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("qubits {}\n", self.num_qubits);
        for op in &self.ops {
            out.push_str(op.kind.name());
            for p in op.kind.params() {
                let _ = write!(out, " {p:?}");
            }
            for q in &op.targets {
                let _ = write!(out, " {q}");
            }
            out.push('\n');
        }
        out
    }

    /// Parses the line-oriented text format.
    pub fn from_text(text: &str) -> Result<Circuit> {
        let parse_error = |line: usize, message: String| Error::Parse { line, message };
        let mut circuit: Option<Circuit> = None;
        for (index, raw) in text.lines().enumerate() {
            let line_no = index + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let Some(c) = circuit.as_mut() else {
                match tokens.as_slice() {
                    ["qubits", n] => {
                        let n = n
                            .parse()
                            .map_err(|_| parse_error(line_no, format!("bad qubit count `{n}`")))?;
                        circuit = Some(Circuit::new(n));
                        continue;
                    }
                    _ => return Err(parse_error(line_no, "expected header `qubits <n>`".into())),
                }
            };
            let name = tokens[0];
            let first = tokens.get(1).and_then(|t| t.parse::<f64>().ok());
            let count = GateKind::param_count(name, first)
                .ok_or_else(|| parse_error(line_no, format!("unknown or malformed gate `{name}`")))?;
            if tokens.len() < 1 + count {
                return Err(parse_error(line_no, "missing parameters".into()));
            }
            let params = tokens[1..1 + count]
                .iter()
                .map(|t| t.parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| parse_error(line_no, e.to_string()))?;
            let targets = tokens[1 + count..]
                .iter()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| parse_error(line_no, e.to_string()))?;
            let kind = GateKind::from_parts(name, &params).map_err(|m| parse_error(line_no, m))?;
            c.push(kind, &targets)
                .map_err(|e| parse_error(line_no, e.to_string()))?;
        }
        circuit.ok_or_else(|| parse_error(0, "empty circuit text".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::circuit_to_unitary;
    use crate::sim::gate_matrix::max_identity_deviation;

    fn sample() -> Circuit {
        let mut c = Circuit::new(3);
        c.push(GateKind::Hadamard, &[0]).unwrap();
        c.push(GateKind::Fourier(0.125), &[0, 1]).unwrap();
        c.push(GateKind::Bog(2.356_194_490_192_345), &[1, 2]).unwrap();
        c.push(GateKind::Laplace { beta: 1.0, frequency: 0.3 }, &[2]).unwrap();
        c.push(GateKind::Phase(-0.1), &[1]).unwrap();
        c.push(GateKind::Fswap, &[2, 1]).unwrap();
        c.push(GateKind::Custom(gates::hadamard()), &[2]).unwrap();
        c
    }

    #[test]
    fn text_round_trip_is_exact() {
        let c = sample();
        let parsed = Circuit::from_text(&c.to_text()).unwrap();
        assert_eq!(parsed, c);
    }

    #[test]
    fn text_format_lines() {
        let text = sample().to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "qubits 3");
        assert_eq!(lines[1], "h 0");
        assert_eq!(lines[2], "fourier 0.125 0 1");
        assert_eq!(lines[6], "fswap 2 1");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Circuit::from_text("qubits 2\nh 0\nbogus 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = Circuit::from_text("h 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = Circuit::from_text("qubits 2\ncnot 0 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn inverse_undoes_circuit() {
        let c = sample();
        let mut both = c.clone();
        both.append(&c.inverse()).unwrap();
        let u = circuit_to_unitary(&both, 3).unwrap();
        assert!(max_identity_deviation(&u) < 1e-12);
    }

    #[test]
    fn push_validates_targets() {
        let mut c = Circuit::new(2);
        assert!(c.push(GateKind::Cnot, &[0]).is_err());
        assert!(c.push(GateKind::Cnot, &[1, 1]).is_err());
        assert!(c.push(GateKind::X, &[2]).is_err());
        assert!(c.push(GateKind::Phase(f64::NAN), &[0]).is_err());
    }
}
