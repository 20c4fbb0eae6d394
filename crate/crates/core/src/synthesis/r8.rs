//! Decomposition over `R_8` and the determinant normalization over `R_16`.
//!
//! Over `R_8` the mod-2 pairing used for `R_12` breaks down: the residues of
//! norm class 1 form two orbits under multiplication by `zeta_8`. Reducing
//! with `lambda = 1 - zeta_8` instead works, since every unit of
//! `Z[zeta_8]/(lambda^3)` is a power of `zeta_8` and `H` divides by
//! `sqrt2 ~ lambda^2`.

use crate::error::{Error, Result};
use crate::linalg::{LevelOp, RingMatrix};
use crate::ring::unit_norm1_exponent;

use super::reduce::{Decomposition, Scheme};
use super::sequence::OpSequence;

/// Product of `zeta_8` phases, `X` and `H` equal to `U`, for `U` unitary over
/// `R_8` with determinant 1.
pub fn decompose_r8(u: &RingMatrix) -> Result<OpSequence> {
    Ok(decompose_r8_traced(u)?.ops)
}

pub fn decompose_r8_traced(u: &RingMatrix) -> Result<Decomposition> {
    if u.degree().n() != 8 {
        return Err(Error::DegreeMismatch {
            left: u.degree().n(),
            right: 8,
        });
    }
    if !u.is_unitary() {
        return Err(Error::NotUnitary);
    }
    if !u.det()?.is_one() {
        return Err(Error::DeterminantNotOne);
    }
    Scheme::r8().decompose(u)
}

/// `(l, V)` with `det U = zeta_16^l` and `V = P^dagger U`, where `P` is the
/// phase `zeta_16^l` on the last index. `det V = 1`.
pub fn det_normalize_r16(u: &RingMatrix) -> Result<(u32, RingMatrix)> {
    if u.degree().n() != 16 {
        return Err(Error::DegreeMismatch {
            left: u.degree().n(),
            right: 16,
        });
    }
    if !u.is_unitary() {
        return Err(Error::NotUnitary);
    }
    let l = unit_norm1_exponent(&u.det()?)?;
    let mut v = u.clone();
    LevelOp::phase(16, -(l as i64), u.rows() - 1).apply_rows(&mut v)?;
    Ok((l, v))
}

/// `P = diag(1, ..., 1, zeta_16^l)`.
pub fn normalizing_phase(l: u32, dim: usize) -> LevelOp {
    LevelOp::phase(16, l as i64, dim - 1)
}

/// Appends a phase on the last index so that the determinant becomes 1.
/// Only phases over `zeta_n` are tried; `None` if none works.
pub fn fix_determinant(u: &RingMatrix) -> Result<Option<RingMatrix>> {
    let d = u.det()?;
    let degree = u.degree();
    let Some(l) = d.root_of_unity_exponent() else {
        return Ok(None);
    };
    let mut v = u.clone();
    LevelOp::phase(degree.n(), -(l as i64), u.rows() - 1).apply_rows(&mut v)?;
    Ok(Some(v))
}
