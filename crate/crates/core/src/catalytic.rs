//! Two-dimensional catalytic embeddings that halve the cyclotomic degree.
//!
//! Writing every entry as `a + b zeta_src` with `a, b` over the half degree,
//! a matrix `A + B zeta_src` maps to `A (x) I_2 + B (x) L`, where
//! `L = [[0, 1], [zeta_tgt, 0]]` squares to `zeta_tgt I_2`. The catalyst
//! `(1, zeta_src)/sqrt2` is an eigenvector of `L` for `zeta_src`, which gives
//! `phi(U)(u (x) c) = (U u) (x) c`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{RingMatrix, RingVector, Vector};
use crate::ring::{CycloElem, Degree, Family};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EmbeddingDescriptor {
    family: Family,
    k: u32,
}

impl EmbeddingDescriptor {
    /// `phi_k`: `R_{2^k}` into `2x2` blocks over `R_{2^(k-1)}`, `k >= 3`.
    pub fn phi(k: u32) -> Result<Self> {
        if k < 3 {
            return Err(Error::UnsupportedDegree(1u32.checked_shl(k).unwrap_or(0)));
        }
        Degree::pow2(k)?;
        Ok(EmbeddingDescriptor {
            family: Family::Pow2,
            k,
        })
    }

    /// `psi_k`: `R_{3 2^k}` into `2x2` blocks over `R_{3 2^(k-1)}`, `k >= 3`.
    pub fn psi(k: u32) -> Result<Self> {
        if k < 3 {
            return Err(Error::UnsupportedDegree(3u32.checked_shl(k).unwrap_or(0)));
        }
        Degree::three_pow2(k)?;
        Ok(EmbeddingDescriptor {
            family: Family::ThreePow2,
            k,
        })
    }

    /// The embedding that lowers `degree` by one step of its tower.
    pub fn lowering(degree: Degree) -> Result<Self> {
        match degree.family() {
            Family::Pow2 => Self::phi(degree.exponent()),
            Family::ThreePow2 => Self::psi(degree.exponent()),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn source(&self) -> Degree {
        match self.family {
            Family::Pow2 => Degree::pow2(self.k),
            Family::ThreePow2 => Degree::three_pow2(self.k),
        }
        .expect("validated at construction")
    }

    pub fn target(&self) -> Degree {
        self.source().half().expect("k >= 3")
    }

    /// `Lambda_k` or `Gamma_k`: `[[0, 1], [zeta_target, 0]]`.
    pub fn block(&self) -> RingMatrix {
        let t = self.target();
        let z = CycloElem::zero(t);
        RingMatrix::from_rows(vec![
            vec![z.clone(), CycloElem::one(t)],
            vec![CycloElem::zeta(t), z],
        ])
        .expect("2x2")
    }

    /// `(1, zeta_source)/sqrt2` over the source degree.
    pub fn catalyst(&self) -> RingVector {
        let s = self.source();
        let h = CycloElem::inv_sqrt2(s).expect("8 divides every source degree");
        Vector(vec![h.clone(), &h * &CycloElem::zeta(s)])
    }

    fn check_source(&self, u: &CycloElem) -> Result<()> {
        if u.degree() != self.source() {
            return Err(Error::DegreeMismatch {
                left: u.degree().n(),
                right: self.source().n(),
            });
        }
        Ok(())
    }

    /// The `2x2` image `[[a, b], [b zeta_target, a]]` of `a + b zeta_source`.
    pub fn embed_scalar(&self, u: &CycloElem) -> Result<[CycloElem; 4]> {
        self.check_source(u)?;
        let (a, b) = u.split_half()?;
        let bz = &b * &CycloElem::zeta(self.target());
        Ok([a.clone(), b, bz, a])
    }

    pub fn embed_matrix(&self, m: &RingMatrix) -> Result<RingMatrix> {
        let (r, c) = (m.rows(), m.cols());
        let mut out = RingMatrix::zeros_deg(self.target(), 2 * r, 2 * c);
        for i in 0..r {
            for j in 0..c {
                let [a, b, cc, d] = self.embed_scalar(m.get(i, j))?;
                out.set(2 * i, 2 * j, a);
                out.set(2 * i, 2 * j + 1, b);
                out.set(2 * i + 1, 2 * j, cc);
                out.set(2 * i + 1, 2 * j + 1, d);
            }
        }
        Ok(out)
    }

    /// `det(phi(u I_1)) = a^2 - b^2 zeta_target`.
    pub fn relative_norm(&self, u: &CycloElem) -> Result<CycloElem> {
        let [a, b, c, d] = self.embed_scalar(u)?;
        Ok(&a * &d - &b * &c)
    }
}

impl fmt::Display for EmbeddingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Pow2 => write!(f, "phi_{}", self.k),
            Family::ThreePow2 => write!(f, "psi_{}", self.k),
        }
    }
}

/// A chain of descriptors applied first to last; the empty chain is the
/// identity embedding with catalyst `(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalyticEmbedding {
    degree: Degree,
    steps: Vec<EmbeddingDescriptor>,
}

impl CatalyticEmbedding {
    pub fn identity(degree: Degree) -> Self {
        CatalyticEmbedding {
            degree,
            steps: Vec::new(),
        }
    }

    pub fn single(desc: EmbeddingDescriptor) -> Self {
        CatalyticEmbedding {
            degree: desc.source(),
            steps: vec![desc],
        }
    }

    /// The chain that lowers `from` step by step down to `to`.
    pub fn lowering(from: Degree, to: Degree) -> Result<Self> {
        let mut e = Self::identity(from);
        let mut d = from;
        while d != to {
            if d.n() <= to.n() {
                return Err(Error::NotDivisible {
                    from: to.n(),
                    to: from.n(),
                });
            }
            let step = EmbeddingDescriptor::lowering(d)?;
            d = step.target();
            e = e.then(step)?;
        }
        Ok(e)
    }

    /// `self` followed by `next`.
    pub fn then(mut self, next: EmbeddingDescriptor) -> Result<Self> {
        if self.target() != next.source() {
            return Err(Error::DegreeMismatch {
                left: self.target().n(),
                right: next.source().n(),
            });
        }
        self.steps.push(next);
        Ok(self)
    }

    pub fn compose(&self, other: &CatalyticEmbedding) -> Result<Self> {
        other.steps.iter().try_fold(self.clone(), |acc, s| acc.then(*s))
    }

    pub fn steps(&self) -> &[EmbeddingDescriptor] {
        &self.steps
    }

    pub fn source(&self) -> Degree {
        self.degree
    }

    pub fn target(&self) -> Degree {
        self.steps.last().map_or(self.degree, EmbeddingDescriptor::target)
    }

    /// Factor by which dimensions grow.
    pub fn dim_factor(&self) -> usize {
        1 << self.steps.len()
    }

    pub fn embed_matrix(&self, m: &RingMatrix) -> Result<RingMatrix> {
        self.steps.iter().try_fold(m.clone(), |acc, s| s.embed_matrix(&acc))
    }

    /// Tensor product of the step catalysts, all over the source degree.
    pub fn catalyst(&self) -> Result<RingVector> {
        let top = self.degree;
        self.steps.iter().try_fold(
            Vector(vec![CycloElem::one(top)]),
            |acc, s| {
                let c = Vector(
                    s.catalyst()
                        .iter()
                        .map(|x| x.embed(top))
                        .collect::<Result<Vec<_>>>()?,
                );
                Ok(acc.kron(&c))
            },
        )
    }
}
