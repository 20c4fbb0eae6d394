//! Column-by-column reduction of a unitary into level operators, shared by
//! `R_12` (base `1 + i`, mixer `Hp`) and `R_8` (base `1 - zeta_8`, mixer `H`).
//!
//! Entries of `base^k u` that are not divisible by the base are paired; a
//! pair `(x, y)` with `x = zeta^l y mod base^(t+1)` is sent by
//! `mixer * diag(1, zeta^l)` to a pair divisible by `base^(t+1)`, where
//! `base^t` is the denominator the mixer introduces. The lde then drops.

use crate::error::{Error, Result};
use crate::linalg::{LevelOp, RingMatrix, RingVector, TwoLevelKind};
use crate::ring::{norm_residue_class, CycloElem, Degree, LdeBase};

use super::sequence::OpSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Pairing {
    /// Pair within classes of `u^dagger u mod 2`.
    NormClass,
    /// Every entry off the base is in one class.
    Single,
}

#[derive(Clone, Debug)]
pub(crate) struct Scheme {
    pub degree: Degree,
    pub base: LdeBase,
    pub mixer: TwoLevelKind,
    /// `base^t` is the denominator the mixer introduces.
    pub mixer_valuation: u32,
    pub pairing: Pairing,
}

/// A column reduction: the operators in the order they act on the column,
/// and the lde before each round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnReduction {
    pub ops: OpSequence,
    pub lde_trace: Vec<u32>,
}

/// A full decomposition with one lde trace per column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub ops: OpSequence,
    pub lde_traces: Vec<Vec<u32>>,
}

impl Scheme {
    pub fn r12() -> Self {
        let degree = Degree::new(12).expect("whitelisted");
        Scheme {
            degree,
            base: LdeBase::delta(degree),
            mixer: TwoLevelKind::Hp,
            mixer_valuation: 1,
            pairing: Pairing::NormClass,
        }
    }

    pub fn r8() -> Self {
        let degree = Degree::new(8).expect("whitelisted");
        Scheme {
            degree,
            base: LdeBase::one_minus_zeta(degree).expect("power of two"),
            mixer: TwoLevelKind::H,
            mixer_valuation: 2,
            pairing: Pairing::Single,
        }
    }

    fn order(&self) -> u32 {
        self.degree.n()
    }

    fn check_degree(&self, u: &CycloElem) -> Result<()> {
        if u.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: u.degree().n(),
                right: self.degree.n(),
            });
        }
        Ok(())
    }

    fn check_vector(&self, u: &[CycloElem]) -> Result<()> {
        if u.is_empty() {
            return Err(Error::ShapeMismatch("empty vector".into()));
        }
        u.iter().try_for_each(|x| self.check_degree(x))?;
        if !RingVector::from(u.to_vec()).is_unit() {
            return Err(Error::NotUnitVector);
        }
        Ok(())
    }

    /// Smallest `l` with `x = zeta^l y mod base^(t+1)`, for integral `x, y`.
    pub fn pair_exponent(&self, x: &CycloElem, y: &CycloElem) -> Result<Option<u32>> {
        self.check_degree(x)?;
        self.check_degree(y)?;
        let p = self.mixer_valuation + 1;
        for l in 0..self.order() {
            let d = x - &(&CycloElem::zeta_pow(self.degree, l as i64) * y);
            if self.base.divides_pow(&d, p)? {
                return Ok(Some(l));
            }
        }
        Ok(None)
    }

    /// Ops sending a unit vector `zeta^l e_j'` to `e_j`: the phase first,
    /// then the swap. Listed in the order they act.
    pub fn base_case(&self, u: &[CycloElem], j: usize) -> Result<Vec<LevelOp>> {
        let dim = u.len();
        if j >= dim {
            return Err(Error::IndexOutOfRange { index: j, dim });
        }
        let nonzero: Vec<usize> = (0..dim).filter(|&i| !u[i].is_zero()).collect();
        let [src] = nonzero[..] else {
            return Err(Error::Precondition(
                "base case needs a vector with exactly one nonzero entry".into(),
            ));
        };
        let l = u[src].root_of_unity_exponent().ok_or_else(|| {
            Error::Precondition(format!("entry {} is not a root of unity", u[src]))
        })?;
        let mut ops = Vec::new();
        if l != 0 {
            ops.push(LevelOp::phase(self.order(), -(l as i64), src));
        }
        if src != j {
            ops.push(LevelOp::x(src.min(j), src.max(j))?);
        }
        Ok(ops)
    }

    fn class_key(&self, x: &CycloElem) -> Result<u8> {
        Ok(match self.pairing {
            Pairing::NormClass => norm_residue_class(x)? as u8,
            Pairing::Single => 0,
        })
    }

    /// One round of pair reductions; strictly lowers the lde of `u`.
    /// Listed in the order they act.
    pub fn lde_step(&self, u: &[CycloElem]) -> Result<Vec<LevelOp>> {
        self.check_vector(u)?;
        let k = self.base.lde_all(u)?;
        if k == 0 {
            return Err(Error::Precondition("lde step needs lde >= 1".into()));
        }
        let scaled: Vec<CycloElem> = u.iter().map(|x| self.base.scale_up(x, k)).collect();
        let mut classes: Vec<(u8, Vec<usize>)> = Vec::new();
        for (i, x) in scaled.iter().enumerate() {
            if self.base.divides(x)? {
                continue;
            }
            let key = self.class_key(x)?;
            match classes.iter_mut().find(|(c, _)| *c == key) {
                Some((_, v)) => v.push(i),
                None => classes.push((key, vec![i])),
            }
        }
        let mut ops = Vec::new();
        for (key, idx) in &classes {
            if idx.len() % 2 != 0 {
                return Err(Error::Internal(format!(
                    "class {key} has an odd number of entries off the base"
                )));
            }
            for pair in idx.chunks(2) {
                let (j, j2) = (pair[0], pair[1]);
                let l = self.pair_exponent(&scaled[j], &scaled[j2])?.ok_or_else(|| {
                    Error::Internal(format!("no pairing exponent for entries {j} and {j2}"))
                })?;
                if l != 0 {
                    ops.push(LevelOp::phase(self.order(), l as i64, j2));
                }
                ops.push(LevelOp::two(self.mixer, j, j2)?);
            }
        }
        Ok(ops)
    }

    pub fn column_reduce(&self, u: &[CycloElem], j: usize) -> Result<ColumnReduction> {
        self.check_vector(u)?;
        let mut v = u.to_vec();
        let mut applied = Vec::new();
        let mut trace = Vec::new();
        loop {
            let k = self.base.lde_all(&v)?;
            if let Some(&prev) = trace.last() {
                if k >= prev {
                    return Err(Error::Internal(format!("lde did not drop: {prev} -> {k}")));
                }
            }
            trace.push(k);
            let round = if k == 0 {
                self.base_case(&v, j)?
            } else {
                self.lde_step(&v)?
            };
            for op in &round {
                op.apply(&mut v)?;
            }
            applied.extend(round);
            if k == 0 {
                break;
            }
        }
        Ok(ColumnReduction {
            ops: OpSequence::from_applied(self.degree, u.len(), applied)?,
            lde_trace: trace,
        })
    }

    /// Writes a unitary `U` as a product of level operators.
    pub fn decompose(&self, u: &RingMatrix) -> Result<Decomposition> {
        if u.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: u.degree().n(),
                right: self.degree.n(),
            });
        }
        if !u.is_unitary() {
            return Err(Error::NotUnitary);
        }
        let dim = u.rows();
        let mut w = u.clone();
        let mut applied = Vec::new();
        let mut traces = Vec::new();
        for col in 0..dim {
            let red = self.column_reduce(&w.column(col), col)?;
            for op in red.ops.applied() {
                op.apply_rows(&mut w)?;
            }
            applied.extend(red.ops.applied().copied());
            traces.push(red.lde_trace);
        }
        if w != RingMatrix::identity_deg(self.degree, dim) {
            return Err(Error::Internal("reduction did not reach the identity".into()));
        }
        // W = g_q ... g_1 and W U = I, so U = g_1^-1 ... g_q^-1
        let reduction = OpSequence::from_applied(self.degree, dim, applied)?;
        Ok(Decomposition {
            ops: reduction.inverse()?,
            lde_traces: traces,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_exponents_r8_cover_all_units() {
        // any two entries off lambda are related by a power of zeta_8 mod lambda^3
        let s = Scheme::r8();
        let units: Vec<CycloElem> = (0..16u64)
            .map(|m| crate::ring::residue::from_mask(s.degree, m))
            .filter(|x| !s.base.divides(x).unwrap())
            .collect();
        assert_eq!(units.len(), 8);
        for x in &units {
            for y in &units {
                assert!(s.pair_exponent(x, y).unwrap().is_some());
            }
        }
    }
}
