//! Residues modulo the prime above 2 and modulo 2, and the classes of
//! `u^dagger u` modulo 2 that drive the pairing step of synthesis.

use std::fmt;

use num_traits::Zero;

use super::cyclo::CycloElem;
use super::degree::Degree;
use super::dyadic::Dyadic;
use super::lde::LdeBase;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Modulus {
    /// The degree's standard [`LdeBase`].
    Base,
    Two,
}

/// `u^dagger u mod 2`, written as `a + b sqrt(d)` with `a, b` in `{0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadResidue {
    pub d: u32,
    pub a: u8,
    pub b: u8,
}

impl QuadResidue {
    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl fmt::Display for QuadResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => f.write_str("0"),
            (1, 0) => f.write_str("1"),
            (0, _) => write!(f, "√{}", self.d),
            _ => write!(f, "1+√{}", self.d),
        }
    }
}

/// The three possible classes of `u^dagger u mod 2` for `u` in `Z[zeta_12]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NormResidueClass {
    Zero,
    One,
    Sqrt3,
}

impl fmt::Display for NormResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormResidueClass::Zero => "0",
            NormResidueClass::One => "1",
            NormResidueClass::Sqrt3 => "√3",
        })
    }
}

/// Canonical representative of `u` modulo the base or modulo 2.
///
/// Mod 2 the representative has coefficients in `{0, 1}`. Mod the base it is
/// the first `{0, 1}`-coefficient element congruent to `u`, ordered by number
/// of nonzero coefficients and then by bit mask; at degree 12 this yields
/// `{0, 1, zeta, zeta^2}`.
pub fn residue(u: &CycloElem, modulus: Modulus) -> Result<CycloElem> {
    let r2 = u.mod2()?;
    match modulus {
        Modulus::Two => Ok(r2),
        Modulus::Base => {
            let base = LdeBase::standard(u.degree())?;
            residue_mod_base(&r2, &base)
        }
    }
}

pub fn residue_mod_base(u: &CycloElem, base: &LdeBase) -> Result<CycloElem> {
    let degree = u.degree();
    let phi = degree.totient();
    if phi > 8 {
        return Err(Error::Precondition(format!(
            "residues modulo the base are only tabulated up to degree 16, got {degree}"
        )));
    }
    let r2 = u.mod2()?;
    let mut masks: Vec<u64> = (0..1u64 << phi).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for m in masks {
        let cand = from_mask(degree, m);
        if base.divides(&(&r2 - &cand))? {
            return Ok(cand);
        }
    }
    Err(Error::Internal("no residue representative found".into()))
}

/// The `{0, 1}`-coefficient element with the given bit mask.
pub fn from_mask(degree: Degree, mask: u64) -> CycloElem {
    let coeffs = (0..degree.totient())
        .map(|i| Dyadic::from(((mask >> i) & 1) as i64))
        .collect();
    CycloElem::from_coeffs(degree, coeffs).expect("length matches totient")
}

/// `u^dagger u mod 2` for integral `u` of degree 8 or 12.
pub fn norm_residue(u: &CycloElem) -> Result<QuadResidue> {
    if !u.is_integral() {
        return Err(Error::NotIntegral);
    }
    let q = u.norm_sq().as_real_quad().ok_or_else(|| {
        Error::Precondition(format!(
            "norm residues are defined for degrees 8 and 12, got {}",
            u.degree()
        ))
    })?;
    let bit = |c: &Dyadic| c.mod2().ok_or(Error::NotIntegral);
    Ok(QuadResidue {
        d: q.d,
        a: bit(&q.a)?,
        b: bit(&q.b)?,
    })
}

/// Class of `u^dagger u mod 2` for integral `u` in `Z[zeta_12]`.
pub fn norm_residue_class(u: &CycloElem) -> Result<NormResidueClass> {
    if u.degree().n() != 12 {
        return Err(Error::DegreeMismatch {
            left: u.degree().n(),
            right: 12,
        });
    }
    match norm_residue(u)? {
        QuadResidue { a: 0, b: 0, .. } => Ok(NormResidueClass::Zero),
        QuadResidue { a: 1, b: 0, .. } => Ok(NormResidueClass::One),
        QuadResidue { a: 0, b: 1, .. } => Ok(NormResidueClass::Sqrt3),
        r => Err(Error::Internal(format!("impossible norm residue {r}"))),
    }
}

/// One row of an exhaustively computed residue table.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueRow {
    pub mod_base: CycloElem,
    pub mod_two: CycloElem,
    pub norm: QuadResidue,
}

/// All `2^phi` residues of `Z[zeta_n]/(2)` with their base residue and norm
/// class, grouped by base residue and ordered by weight within a group. Only degrees 8 and 12 carry a quadratic
/// norm class.
pub fn residue_table(degree: Degree) -> Result<Vec<ResidueRow>> {
    if !matches!(degree.n(), 8 | 12) {
        return Err(Error::Precondition(format!(
            "residue tables are defined for degrees 8 and 12, got {degree}"
        )));
    }
    let base = LdeBase::standard(degree)?;
    let mut reps: Vec<CycloElem> = Vec::new();
    let mut rows = Vec::new();
    for mask in 0..1u64 << degree.totient() {
        let u = from_mask(degree, mask);
        let mod_base = residue_mod_base(&u, &base)?;
        if !reps.contains(&mod_base) {
            reps.push(mod_base.clone());
        }
        rows.push(ResidueRow {
            mod_base,
            norm: norm_residue(&u)?,
            mod_two: u,
        });
    }
    let rank = |r: &ResidueRow| reps.iter().position(|x| *x == r.mod_base);
    let mut keyed: Vec<_> = rows
        .into_iter()
        .map(|r| {
            let mask = r.mod_two.mod2_mask().unwrap_or(0);
            ((rank(&r), mask.count_ones(), mask), r)
        })
        .collect();
    keyed.sort_by_key(|a| a.0);
    Ok(keyed.into_iter().map(|(_, r)| r).collect())
}

/// Outcome of checking the three residue properties on `Z[zeta_n]/(2)`:
/// the zero norm class is exactly the multiples of the base, there are two
/// nonzero norm classes, and equal-class residues differ by a power of zeta.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueLemmaCheck {
    pub zero_iff_divisible: bool,
    pub nonzero_classes: Vec<QuadResidue>,
    /// Equal-class pairs `(u, v)` with no `m` such that `u = zeta^m v mod 2`.
    pub pairing_failures: Vec<(CycloElem, CycloElem)>,
}

impl ResidueLemmaCheck {
    pub fn two_nonzero_classes(&self) -> bool {
        self.nonzero_classes.len() == 2
    }

    pub fn pairing_holds(&self) -> bool {
        self.pairing_failures.is_empty()
    }

    pub fn all_hold(&self) -> bool {
        self.zero_iff_divisible && self.two_nonzero_classes() && self.pairing_holds()
    }
}

/// Exhaustive check over all `2^phi` residues for degree 8 or 12.
pub fn check_residue_lemma(degree: Degree) -> Result<ResidueLemmaCheck> {
    let rows = residue_table(degree)?;
    let base = LdeBase::standard(degree)?;
    let mut zero_iff_divisible = true;
    let mut nonzero_classes = Vec::new();
    for r in &rows {
        zero_iff_divisible &= r.norm.is_zero() == base.divides(&r.mod_two)?;
        if !r.norm.is_zero() && !nonzero_classes.contains(&r.norm) {
            nonzero_classes.push(r.norm);
        }
    }
    nonzero_classes.sort();
    let n = degree.n() as i64;
    let mut pairing_failures = Vec::new();
    for a in &rows {
        for b in &rows {
            if a.norm.is_zero() || a.norm != b.norm {
                continue;
            }
            let related = (0..n).try_fold(false, |found, m| {
                let w = &CycloElem::zeta_pow(degree, m) * &b.mod_two;
                Ok::<_, Error>(found || (&a.mod_two - &w).is_zero_mod2())
            })?;
            if !related {
                pairing_failures.push((a.mod_two.clone(), b.mod_two.clone()));
            }
        }
    }
    Ok(ResidueLemmaCheck {
        zero_iff_divisible,
        nonzero_classes,
        pairing_failures,
    })
}

/// Human-readable `a_0 + a_1 z + ...` with `z` standing for `zeta_n`.
pub fn pretty(u: &CycloElem) -> String {
    let n = u.degree().n();
    let mut terms = Vec::new();
    for (i, c) in u.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => format!("ζ{n}"),
            _ => format!("ζ{n}^{i}"),
        };
        let coeff = c.to_string();
        terms.push(match (coeff.as_str(), mono.is_empty()) {
            (_, true) => coeff,
            ("1", false) => mono,
            ("-1", false) => format!("-{mono}"),
            _ => format!("{coeff}·{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
