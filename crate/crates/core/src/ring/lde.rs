use super::cyclo::CycloElem;
use super::degree::{Degree, Family};
use crate::error::{Error, Result};
use crate::scalar::ExactDiv;

/// The element whose powers measure denominators in `R_n`, together with the
/// exponent `order` for which `base^order = 2 * unit`.
#[derive(Clone, Debug, PartialEq)]
pub struct LdeBase {
    degree: Degree,
    element: CycloElem,
    order: u32,
}

impl LdeBase {
    /// `sqrt2` at degree 8, `1 - zeta` for the other powers of two (and
    /// `1 + i` at degree 4), `1 + i` for the `3 * 2^k` tower.
    pub fn standard(degree: Degree) -> Result<Self> {
        match (degree.family(), degree.n()) {
            (Family::Pow2, 8) => Self::sqrt2(degree),
            (Family::Pow2, 4) | (Family::ThreePow2, _) => Ok(Self::delta(degree)),
            (Family::Pow2, _) => Self::one_minus_zeta(degree),
        }
    }

    /// `delta = 1 + i`, with `2 = delta^2 * (-i)`.
    pub fn delta(degree: Degree) -> Self {
        LdeBase {
            degree,
            element: CycloElem::one_plus_i(degree),
            order: 2,
        }
    }

    pub fn sqrt2(degree: Degree) -> Result<Self> {
        Ok(LdeBase {
            degree,
            element: CycloElem::sqrt2(degree)?,
            order: 2,
        })
    }

    /// `chi = 1 - zeta_{2^k}`, with `2 = chi^(2^(k-1)) * unit`.
    pub fn one_minus_zeta(degree: Degree) -> Result<Self> {
        if degree.family() != Family::Pow2 {
            return Err(Error::Precondition(format!(
                "1 - zeta is not a prime above 2 in degree {degree}"
            )));
        }
        Ok(LdeBase {
            degree,
            element: CycloElem::one(degree) - CycloElem::zeta(degree),
            order: degree.totient() as u32,
        })
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn element(&self) -> &CycloElem {
        &self.element
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Checks `2 = base^order * unit` by exact division both ways.
    pub fn factors_two(&self) -> bool {
        let two = CycloElem::from_int(self.degree, 2);
        let p = self.element.pow(self.order);
        let unit = two.exact_div(&p);
        let inv = p.exact_div(&two);
        matches!((unit, inv), (Some(u), Some(v)) if u.is_integral() && v.is_integral())
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

    /// Least denominator exponent: the smallest `l` with `base^l * u` integral.
    pub fn lde(&self, u: &CycloElem) -> Result<u32> {
        self.check_degree(u)?;
        let mut v = u.clone();
        let mut l = 0;
        while !v.is_integral() {
            v = &v * &self.element;
            l += 1;
        }
        Ok(l)
    }

    /// Least denominator exponent of a collection (vector or matrix entries).
    pub fn lde_all<'a>(&self, entries: impl IntoIterator<Item = &'a CycloElem>) -> Result<u32> {
        entries
            .into_iter()
            .try_fold(0, |acc, u| Ok(acc.max(self.lde(u)?)))
    }

    /// Whether the integral element `z` is divisible by `base^power`.
    pub fn divides_pow(&self, z: &CycloElem, power: u32) -> Result<bool> {
        self.check_degree(z)?;
        if !z.is_integral() {
            return Err(Error::NotIntegral);
        }
        if z.is_zero() || power == 0 {
            return Ok(true);
        }
        if power > self.order {
            // base^order is an associate of 2
            if !z.is_zero_mod2() {
                return Ok(false);
            }
            let unit = CycloElem::from_int(self.degree, 2)
                .exact_div(&self.element.pow(self.order))
                .ok_or_else(|| Error::Internal("base does not factor 2".into()))?;
            return self.divides_pow(&(&z.mul_pow2(-1) * &unit), power - self.order);
        }
        // z = base^power * w  iff  z * base^(order - power) = 2 * unit * w
        Ok((z * &self.element.pow(self.order - power)).is_zero_mod2())
    }

    /// `z mod base` is zero.
    pub fn divides(&self, z: &CycloElem) -> Result<bool> {
        self.divides_pow(z, 1)
    }

    /// Scales `u` by `base^l`.
    pub fn scale_up(&self, u: &CycloElem, l: u32) -> CycloElem {
        u * &self.element.pow(l)
    }
}

/// Least denominator exponent against the degree's standard base.
pub fn lde(u: &CycloElem) -> Result<u32> {
    LdeBase::standard(u.degree())?.lde(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::dyadic::Dyadic;

    fn deg(n: u32) -> Degree {
        Degree::new(n).unwrap()
    }

    #[test]
    fn examples() {
        let d12 = deg(12);
        let delta = LdeBase::delta(d12);
        let inv_delta = CycloElem::one(d12).exact_div(delta.element()).unwrap();
        assert_eq!(delta.lde(&inv_delta).unwrap(), 1);
        let half = CycloElem::from_scalar(d12, Dyadic::new(1, 1));
        assert_eq!(delta.lde(&half).unwrap(), 2);

        let d16 = deg(16);
        let chi = LdeBase::standard(d16).unwrap();
        assert_eq!(chi.order(), 8);
        let half = CycloElem::from_scalar(d16, Dyadic::new(1, 1));
        assert_eq!(chi.lde(&half).unwrap(), 8);
        assert_eq!(chi.lde(&CycloElem::zeta(d16)).unwrap(), 0);
    }

    #[test]
    fn every_base_factors_two() {
        for n in [4, 8, 12, 16, 24, 32, 48, 64] {
            let b = LdeBase::standard(deg(n)).unwrap();
            assert!(b.factors_two(), "degree {n}");
        }
        assert!(LdeBase::one_minus_zeta(deg(8)).unwrap().factors_two());
        assert_eq!(LdeBase::one_minus_zeta(deg(8)).unwrap().order(), 4);
        assert!(LdeBase::one_minus_zeta(deg(12)).is_err());
    }

    #[test]
    fn divisibility_by_powers() {
        let d8 = deg(8);
        let lam = LdeBase::one_minus_zeta(d8).unwrap();
        let l = lam.element().clone();
        for p in 0..7 {
            // 1 + 2i has odd norm, so lambda does not divide it
            let odd = CycloElem::one(d8) + CycloElem::zeta_pow(d8, 2) * CycloElem::from_int(d8, 2);
            let z = &l.pow(p) * &odd;
            assert!(lam.divides_pow(&z, p).unwrap());
            assert!(!lam.divides_pow(&z, p + 1).unwrap(), "power {p}");
        }
    }
}
