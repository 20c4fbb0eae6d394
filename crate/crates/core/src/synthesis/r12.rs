//! Exact decomposition over `R_12` into `zeta_12` phases, `X` and `Hp`.

use crate::error::{Error, Result};
use crate::linalg::RingMatrix;
use crate::ring::{norm_residue_class, CycloElem, NormResidueClass};

use super::reduce::{ColumnReduction, Decomposition, Scheme};
use super::sequence::OpSequence;

/// Ops sending the unit vector `zeta_12^l e_j'` to `e_j`.
pub fn base_case_r12(u: &[CycloElem], j: usize) -> Result<OpSequence> {
    let s = Scheme::r12();
    if let Some(x) = u.iter().find(|x| x.degree() != s.degree) {
        return Err(Error::DegreeMismatch {
            left: x.degree().n(),
            right: 12,
        });
    }
    if s.base.lde_all(u)? != 0 {
        return Err(Error::Precondition("base case needs lde 0".into()));
    }
    OpSequence::from_applied(s.degree, u.len(), s.base_case(u, j)?)
}

/// The smallest `l` in `0..12` with `u = zeta_12^l v (mod 2)`; then both
/// entries of `Hp diag(1, zeta_12^l) (u, v)` are divisible by `1 + i`.
pub fn pair_reduce_r12(u: &CycloElem, v: &CycloElem) -> Result<u32> {
    let cu = norm_residue_class(u)?;
    let cv = norm_residue_class(v)?;
    if cu != cv || cu == NormResidueClass::Zero {
        return Err(Error::Precondition(format!(
            "pairing needs equal nonzero norm classes, got {cu} and {cv}"
        )));
    }
    Scheme::r12()
        .pair_exponent(u, v)?
        .ok_or_else(|| Error::Precondition("no pairing exponent exists".into()))
}

/// One round of pair reductions; the product maps `u` to a vector of
/// smaller lde.
pub fn lde_step_r12(u: &[CycloElem]) -> Result<OpSequence> {
    let s = Scheme::r12();
    OpSequence::from_applied(s.degree, u.len(), s.lde_step(u)?)
}

/// Ops whose product sends the unit vector `u` to `e_j`.
pub fn column_reduce_r12(u: &[CycloElem], j: usize) -> Result<ColumnReduction> {
    Scheme::r12().column_reduce(u, j)
}

pub fn decompose_r12(u: &RingMatrix) -> Result<OpSequence> {
    Ok(decompose_r12_traced(u)?.ops)
}

pub fn decompose_r12_traced(u: &RingMatrix) -> Result<Decomposition> {
    Scheme::r12().decompose(u)
}
