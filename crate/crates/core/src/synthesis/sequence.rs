use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{LevelOp, RingMatrix, TwoLevelKind};
use crate::ring::{CycloElem, Degree};

/// Level operators whose product, written left to right, is
/// `ops[0] * ops[1] * ... * ops[q-1]`. Applied to a vector, the last
/// operator acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpSequence {
    degree: Degree,
    dim: usize,
    ops: Vec<LevelOp>,
}

impl OpSequence {
    pub fn new(degree: Degree, dim: usize) -> Self {
        OpSequence {
            degree,
            dim,
            ops: Vec::new(),
        }
    }

    pub fn from_ops(degree: Degree, dim: usize, ops: Vec<LevelOp>) -> Result<Self> {
        if let Some(op) = ops.iter().find(|op| op.max_index() >= dim) {
            return Err(Error::IndexOutOfRange {
                index: op.max_index(),
                dim,
            });
        }
        Ok(OpSequence { degree, dim, ops })
    }

    /// Builds from operators listed in the order they act on a vector.
    pub fn from_applied(degree: Degree, dim: usize, mut applied: Vec<LevelOp>) -> Result<Self> {
        applied.reverse();
        Self::from_ops(degree, dim, applied)
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ops(&self) -> &[LevelOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Operators in the order they act on a vector.
    pub fn applied(&self) -> impl Iterator<Item = &LevelOp> {
        self.ops.iter().rev()
    }

    pub fn product(&self) -> Result<RingMatrix> {
        let mut m = RingMatrix::identity_deg(self.degree, self.dim);
        for op in self.applied() {
            op.apply_rows(&mut m)?;
        }
        Ok(m)
    }

    pub fn apply(&self, v: &[CycloElem]) -> Result<Vec<CycloElem>> {
        if v.len() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "sequence of dimension {} applied to a vector of length {}",
                self.dim,
                v.len()
            )));
        }
        let mut w = v.to_vec();
        for op in self.applied() {
            op.apply(&mut w)?;
        }
        Ok(w)
    }

    /// The inverse sequence, with phases expressed over `zeta_degree`.
    pub fn inverse(&self) -> Result<Self> {
        let ops = self
            .ops
            .iter()
            .rev()
            .flat_map(LevelOp::inverse)
            .map(|op| {
                op.with_phase_order(self.degree.n()).ok_or(Error::NotDivisible {
                    from: match op {
                        LevelOp::OneLevel { order, .. } => order,
                        LevelOp::TwoLevel { .. } => 1,
                    },
                    to: self.degree.n(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(OpSequence { ops, ..*self })
    }

    /// Counts keyed by `ONE` or the two-level operator name.
    pub fn counts(&self) -> BTreeMap<&'static str, usize> {
        let mut m = BTreeMap::new();
        for op in &self.ops {
            let key = match op {
                LevelOp::OneLevel { .. } => "ONE",
                LevelOp::TwoLevel { kind, .. } => kind.name(),
            };
            *m.entry(key).or_insert(0) += 1;
        }
        m
    }

    /// True iff every operator is a `zeta_n` phase or one of `kinds`.
    pub fn uses_only(&self, phase_order: u32, kinds: &[TwoLevelKind]) -> bool {
        self.ops.iter().all(|op| match *op {
            LevelOp::OneLevel { order, .. } => order == phase_order,
            LevelOp::TwoLevel { kind, .. } => kinds.contains(&kind),
        })
    }
}
