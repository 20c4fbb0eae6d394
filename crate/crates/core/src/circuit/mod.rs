//! Circuits over a work register plus catalyst and ancilla wires, with exact
//! evaluation and a line-based text format.
//!
//! Wire 0 is the most significant bit of a basis index. Level operators are
//! stored against the full register, so evaluation is a plain left-to-right
//! sweep over the instructions.

mod text;

use std::collections::BTreeMap;
use std::fmt;

use crate::catalytic::EmbeddingDescriptor;
use crate::error::{Error, Result};
use crate::linalg::{LevelOp, RingMatrix, RingVector};
use crate::ring::{CycloElem, Degree, Family};
use crate::synthesis::OpSequence;

/// Single-wire gates used to prepare and release catalysts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    H,
    /// `diag(1, zeta_order)`.
    T(u32),
    /// `diag(1, zeta_order^-1)`.
    Tdg(u32),
}

impl Gate {
    fn check(&self, degree: Degree) -> Result<()> {
        let order = match *self {
            Gate::H => 8,
            Gate::T(o) | Gate::Tdg(o) => o,
        };
        if order == 0 || !degree.n().is_multiple_of(order) {
            return Err(Error::NotDivisible {
                from: order,
                to: degree.n(),
            });
        }
        Ok(())
    }

    /// Row-major 2x2 entries at `degree`.
    pub fn block(&self, degree: Degree) -> Result<[CycloElem; 4]> {
        self.check(degree)?;
        let z = CycloElem::zero(degree);
        let o = CycloElem::one(degree);
        Ok(match *self {
            Gate::H => {
                let s = CycloElem::inv_sqrt2(degree)?;
                [s.clone(), s.clone(), s.clone(), -s]
            }
            Gate::T(n) => [o, z.clone(), z, CycloElem::root_of_unity(degree, n, 1)?],
            Gate::Tdg(n) => [o, z.clone(), z, CycloElem::root_of_unity(degree, n, -1)?],
        })
    }

    pub fn dagger(&self) -> Gate {
        match *self {
            Gate::H => Gate::H,
            Gate::T(n) => Gate::Tdg(n),
            Gate::Tdg(n) => Gate::T(n),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::H => f.write_str("H"),
            Gate::T(n) => write!(f, "T{n}"),
            Gate::Tdg(n) => write!(f, "Tdg{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instruction {
    Level(LevelOp),
    Gate { gate: Gate, wire: usize },
    /// Records that an embedding was applied; no effect on evaluation.
    Mark(EmbeddingDescriptor),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    degree: Degree,
    work: usize,
    extra: usize,
    instructions: Vec<Instruction>,
}

impl Circuit {
    pub fn new(degree: Degree, work: usize, extra: usize) -> Result<Self> {
        if work + extra > 24 {
            return Err(Error::Precondition(format!(
                "circuit width {} is too large",
                work + extra
            )));
        }
        Ok(Circuit {
            degree,
            work,
            extra,
            instructions: Vec::new(),
        })
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn work(&self) -> usize {
        self.work
    }

    pub fn ancilla_count(&self) -> usize {
        self.extra
    }

    pub fn width(&self) -> usize {
        self.work + self.extra
    }

    /// Dimension of the full state space.
    pub fn dim(&self) -> usize {
        1 << self.width()
    }

    pub fn instructions(&self) -> &[Instruction] {
        &self.instructions
    }

    fn check(&self, ins: &Instruction) -> Result<()> {
        match ins {
            Instruction::Level(op) => {
                if op.max_index() >= self.dim() {
                    return Err(Error::IndexOutOfRange {
                        index: op.max_index(),
                        dim: self.dim(),
                    });
                }
                if let LevelOp::OneLevel { order, .. } = *op {
                    if order == 0 || !self.degree.n().is_multiple_of(order) {
                        return Err(Error::NotDivisible {
                            from: order,
                            to: self.degree.n(),
                        });
                    }
                }
                if let LevelOp::TwoLevel { kind, .. } = *op {
                    kind.block(self.degree)?;
                }
                Ok(())
            }
            Instruction::Gate { gate, wire } => {
                if *wire >= self.width() {
                    return Err(Error::IndexOutOfRange {
                        index: *wire,
                        dim: self.width(),
                    });
                }
                gate.check(self.degree)
            }
            Instruction::Mark(_) => Ok(()),
        }
    }

    pub fn push(&mut self, ins: Instruction) -> Result<()> {
        self.check(&ins)?;
        self.instructions.push(ins);
        Ok(())
    }

    pub fn push_level(&mut self, op: LevelOp) -> Result<()> {
        self.push(Instruction::Level(op))
    }

    pub fn push_gate(&mut self, gate: Gate, wire: usize) -> Result<()> {
        self.push(Instruction::Gate { gate, wire })
    }

    /// Applies every instruction in order to a state vector.
    pub fn eval(&self, v: &[CycloElem]) -> Result<Vec<CycloElem>> {
        if v.len() != self.dim() {
            return Err(Error::ShapeMismatch(format!(
                "dimension mismatch: circuit acts on {} amplitudes, got {}",
                self.dim(),
                v.len()
            )));
        }
        if let Some(x) = v.iter().find(|x| x.degree() != self.degree) {
            return Err(Error::DegreeMismatch {
                left: x.degree().n(),
                right: self.degree.n(),
            });
        }
        let mut w = v.to_vec();
        for ins in &self.instructions {
            match ins {
                Instruction::Level(op) => op.apply(&mut w)?,
                Instruction::Gate { gate, wire } => {
                    let [a, b, c, d] = gate.block(self.degree)?;
                    let bit = 1 << (self.width() - 1 - wire);
                    let diagonal = b.is_zero() && c.is_zero();
                    for i in (0..w.len()).filter(|i| i & bit == 0) {
                        let (x, y) = (w[i].clone(), w[i | bit].clone());
                        if diagonal {
                            w[i] = &a * &x;
                            w[i | bit] = &d * &y;
                        } else {
                            w[i] = &a * &x + &b * &y;
                            w[i | bit] = &c * &x + &d * &y;
                        }
                    }
                }
                Instruction::Mark(_) => {}
            }
        }
        Ok(w)
    }

    /// The full `2^width` square matrix of the circuit.
    pub fn matrix(&self) -> Result<RingMatrix> {
        let dim = self.dim();
        let mut m = RingMatrix::zeros_deg(self.degree, dim, dim);
        for j in 0..dim {
            let col = self.eval(&RingVector::basis_deg(self.degree, dim, j)?)?;
            for (i, x) in col.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    /// Checks `C (e_i (x) e_0...) = (U e_i) (x) e_0...` for every basis
    /// index `i`. Returns the first failing `i`.
    pub fn verify(&self, u: &RingMatrix) -> Result<Option<usize>> {
        if !u.is_square() || u.rows() != 1 << self.work {
            return Err(Error::ShapeMismatch(format!(
                "dimension mismatch: circuit has {} work wires, matrix is {}x{}",
                self.work,
                u.rows(),
                u.cols()
            )));
        }
        let u = if u.degree() == self.degree {
            u.clone()
        } else {
            u.embed_degree(self.degree)?
        };
        let dim = self.dim();
        let zero = CycloElem::zero(self.degree);
        for i in 0..u.rows() {
            let input = RingVector::basis_deg(self.degree, dim, i << self.extra)?;
            let out = self.eval(&input)?;
            let ok = out.iter().enumerate().all(|(r, x)| {
                if r % (1 << self.extra) == 0 {
                    x == u.get(r >> self.extra, i)
                } else {
                    *x == zero
                }
            });
            if !ok {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Instruction counts keyed by mnemonic.
    pub fn counts(&self) -> BTreeMap<String, usize> {
        let mut m = BTreeMap::new();
        for ins in &self.instructions {
            let key = match ins {
                Instruction::Level(LevelOp::OneLevel { .. }) => "ONE".to_string(),
                Instruction::Level(LevelOp::TwoLevel { kind, .. }) => kind.name().to_string(),
                Instruction::Gate { gate, .. } => format!("GATE {gate}"),
                Instruction::Mark(_) => continue,
            };
            *m.entry(key).or_insert(0) += 1;
        }
        m
    }

    /// Prepares the catalyst `(1, zeta_order)/sqrt2 = T H e_0` on `wire`.
    pub fn prepare_catalyst(&mut self, order: u32, wire: usize) -> Result<()> {
        self.push_gate(Gate::H, wire)?;
        self.push_gate(Gate::T(order), wire)
    }

    /// The dagger of [`Circuit::prepare_catalyst`].
    pub fn release_catalyst(&mut self, order: u32, wire: usize) -> Result<()> {
        self.push_gate(Gate::Tdg(order), wire)?;
        self.push_gate(Gate::H, wire)
    }
}

/// Wraps `inner`, which acts on `m` work wires plus one catalyst wire, with
/// the catalyst preparation and release for the embedding of the given
/// family and `k`. The circuit works at the embedding's source degree.
pub fn wrap_with_catalyst(inner: &OpSequence, family: Family, k: u32) -> Result<Circuit> {
    let desc = match family {
        Family::Pow2 => EmbeddingDescriptor::phi(k)?,
        Family::ThreePow2 => EmbeddingDescriptor::psi(k)?,
    };
    let dim = inner.dim();
    if !dim.is_power_of_two() || dim < 2 {
        return Err(Error::NotPowerOfTwo(dim));
    }
    let width = dim.trailing_zeros() as usize;
    let mut c = Circuit::new(desc.source(), width - 1, 1)?;
    let order = desc.source().n();
    c.prepare_catalyst(order, width - 1)?;
    c.push(Instruction::Mark(desc))?;
    for op in inner.applied() {
        c.push_level(*op)?;
    }
    c.release_catalyst(order, width - 1)?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::TwoLevelKind;

    fn deg(n: u32) -> Degree {
        Degree::new(n).unwrap()
    }

    #[test]
    fn empty_circuit_is_identity() {
        let c = Circuit::new(deg(16), 1, 1).unwrap();
        let v: Vec<_> = (0..4).map(|i| CycloElem::zeta_pow(deg(16), i)).collect();
        assert_eq!(c.eval(&v).unwrap(), v);
        assert!(c.eval(&v[..2]).is_err());
    }

    #[test]
    fn preparation_gives_catalysts() {
        for (n, desc) in [
            (16, EmbeddingDescriptor::phi(4).unwrap()),
            (24, EmbeddingDescriptor::psi(3).unwrap()),
        ] {
            let mut c = Circuit::new(deg(n), 0, 1).unwrap();
            c.prepare_catalyst(n, 0).unwrap();
            let e0 = RingVector::basis_deg(deg(n), 2, 0).unwrap();
            assert_eq!(c.eval(&e0).unwrap(), desc.catalyst().0);
            c.release_catalyst(n, 0).unwrap();
            assert_eq!(c.eval(&e0).unwrap(), e0.0);
        }
    }

    #[test]
    fn gate_positions() {
        // T on wire 0 of two wires multiplies indices with the top bit set
        let mut c = Circuit::new(deg(8), 2, 0).unwrap();
        c.push_gate(Gate::T(8), 0).unwrap();
        let m = c.matrix().unwrap();
        assert_eq!(m.get(2, 2), &CycloElem::zeta(deg(8)));
        assert_eq!(m.get(1, 1), &CycloElem::one(deg(8)));
        assert!(c.push_gate(Gate::H, 2).is_err());
        assert!(c.push_gate(Gate::T(16), 0).is_err());
        assert!(c.push_level(LevelOp::phase(8, 1, 4)).is_err());
    }

    #[test]
    fn wrap_empty_is_identity() {
        let inner = OpSequence::new(deg(8), 4);
        let c = wrap_with_catalyst(&inner, Family::Pow2, 4).unwrap();
        assert_eq!(c.ancilla_count(), 1);
        assert_eq!(c.verify(&RingMatrix::identity_deg(deg(16), 2)).unwrap(), None);
        let x = LevelOp::x(0, 1).unwrap().matrix(deg(16), 2).unwrap();
        assert_eq!(c.verify(&x).unwrap(), Some(0));
        assert!(c.verify(&RingMatrix::identity_deg(deg(16), 4)).is_err());
    }

    #[test]
    fn wrapped_phi4_image_acts_as_v() {
        // phi_4(T_16) on one work wire, wrapped, acts as T_16
        let t = LevelOp::phase(16, 1, 1).matrix(deg(16), 2).unwrap();
        let image = EmbeddingDescriptor::phi(4).unwrap().embed_matrix(&t).unwrap();
        // phi_4(T_16) = diag(1, 1) (+) Lambda_4, i.e. X then zeta_8 on index 3
        let inner = OpSequence::from_ops(
            deg(8),
            4,
            vec![
                LevelOp::phase(8, 1, 3),
                LevelOp::two(TwoLevelKind::X, 2, 3).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(inner.product().unwrap(), image);
        let c = wrap_with_catalyst(&inner, Family::Pow2, 4).unwrap();
        assert_eq!(c.verify(&t).unwrap(), None);
    }
}
