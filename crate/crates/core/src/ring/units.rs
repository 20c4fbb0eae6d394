//! Unit recognition in `Z[zeta_n]`: norm-1 units of `R_16` and associates.

use super::cyclo::CycloElem;
use super::degree::Degree;
use crate::error::{Error, Result};
use crate::scalar::ExactDiv;

/// The `l` in `0..16` with `u = zeta_16^l`, for `u` in `R_16` with `u^dagger u = 1`.
pub fn unit_norm1_exponent(u: &CycloElem) -> Result<u32> {
    if u.degree().n() != 16 {
        return Err(Error::DegreeMismatch {
            left: u.degree().n(),
            right: 16,
        });
    }
    if !u.norm_sq().is_one() {
        return Err(Error::Precondition(format!("{u} does not have norm 1")));
    }
    u.root_of_unity_exponent().ok_or_else(|| {
        Error::Precondition(format!("{u} has norm 1 but is not a power of zeta_16"))
    })
}

/// Whether `u / v` and `v / u` are both cyclotomic integers.
pub fn are_associates(u: &CycloElem, v: &CycloElem) -> bool {
    let integral = |q: Option<CycloElem>| q.is_some_and(|q| q.is_integral());
    integral(u.exact_div(v)) && integral(v.exact_div(u))
}

/// `1 - zeta_a^b` viewed in degree `a`.
pub fn one_minus_zeta_pow(a: u32, b: i64) -> Result<CycloElem> {
    let d = Degree::new(a)?;
    Ok(CycloElem::one(d) - CycloElem::zeta_pow(d, b))
}
