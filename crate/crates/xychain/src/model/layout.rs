//! Assignment of momentum labels `k ∈ {0, …, n−1}` (fraction `k/n`) to
//! qubit wires.

use crate::error::{argument, Result};

/// A bijection between momentum labels and wires.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentumLayout {
    label_of_wire: Vec<usize>,
    wire_of_label: Vec<usize>,
}

impl MomentumLayout {
    /// Builds a layout from the label carried by each wire.
    pub fn from_wire_labels(label_of_wire: Vec<usize>) -> Result<Self> {
        let n = label_of_wire.len();
        if n == 0 {
            return Err(argument("layout needs at least one mode"));
        }
        let mut wire_of_label = vec![usize::MAX; n];
        for (wire, &k) in label_of_wire.iter().enumerate() {
            if k >= n || wire_of_label[k] != usize::MAX {
                return Err(argument(format!("wire labels are not a permutation of 0..{n}")));
            }
            wire_of_label[k] = wire;
        }
        Ok(Self {
            label_of_wire,
            wire_of_label,
        })
    }

    /// The canonical layout for `n` modes.
    ///
    /// For `1 ≤ j < n/2` the pair `(j, n−j)` occupies wires `(2j−2, 2j−1)`.
    /// The two self-paired labels share the last two wires: `n/2` on wire
    /// `n−2` and `0` on wire `n−1`.
    pub fn canonical(n: usize) -> Result<Self> {
        if n < 2 || !n.is_multiple_of(2) {
            return Err(argument(format!("mode count must be even and at least 2, got {n}")));
        }
        let mut labels = Vec::with_capacity(n);
        for j in 1..n / 2 {
            labels.push(j);
            labels.push(n - j);
        }
        labels.push(n / 2);
        labels.push(0);
        Self::from_wire_labels(labels)
    }

    /// Number of modes.
    pub fn len(&self) -> usize {
        self.label_of_wire.len()
    }

    /// Whether the layout is empty; never true for a constructed layout.
    pub fn is_empty(&self) -> bool {
        self.label_of_wire.is_empty()
    }

    /// Momentum label carried by `wire`.
    pub fn label_of_wire(&self, wire: usize) -> usize {
        self.label_of_wire[wire]
    }

    /// Wire carrying momentum label `k`.
    pub fn wire_of_label(&self, k: usize) -> usize {
        self.wire_of_label[k]
    }

    /// Labels in wire order.
    pub fn labels(&self) -> &[usize] {
        &self.label_of_wire
    }

    /// The opposite momentum `(n − k) mod n`.
    pub fn partner(&self, k: usize) -> usize {
        (self.len() - k) % self.len()
    }
}
