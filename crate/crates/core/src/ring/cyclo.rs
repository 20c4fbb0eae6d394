use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;

use super::degree::{Degree, Family};
use super::dyadic::Dyadic;
use super::quad::RealQuad;
use crate::error::{Error, Result};
use crate::scalar::{Coeff, Conjugate, ExactDiv, Ring};

/// An element `c_0 + c_1 z + ... + c_{phi-1} z^{phi-1}` of `C[zeta_n]`, stored
/// densely over the power basis and kept reduced modulo the cyclotomic
/// polynomial.
///
/// With `C = Dyadic` this is the ring of dyadic cyclotomics; with an integer
/// coefficient type it is the ring of cyclotomic integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo<C> {
    degree: Degree,
    coeffs: Vec<C>,
}

impl<C: Coeff> Cyclo<C> {
    pub fn from_coeffs(degree: Degree, coeffs: Vec<C>) -> Result<Self> {
        if coeffs.len() != degree.totient() {
            return Err(Error::ShapeMismatch(format!(
                "degree {degree} needs {} coefficients, got {}",
                degree.totient(),
                coeffs.len()
            )));
        }
        Ok(Cyclo { degree, coeffs })
    }

    /// Builds from any number of low-order coefficients, reducing as needed.
    pub fn from_poly(degree: Degree, poly: Vec<C>) -> Self {
        reduce(degree, poly)
    }

    pub fn zero(degree: Degree) -> Self {
        Cyclo {
            degree,
            coeffs: vec![C::zero(); degree.totient()],
        }
    }

    pub fn one(degree: Degree) -> Self {
        Self::from_scalar(degree, C::one())
    }

    pub fn from_scalar(degree: Degree, c: C) -> Self {
        let mut z = Self::zero(degree);
        z.coeffs[0] = c;
        z
    }

    /// The generator `zeta_n`.
    pub fn zeta(degree: Degree) -> Self {
        Self::zeta_pow(degree, 1)
    }

    pub fn zeta_pow(degree: Degree, j: i64) -> Self {
        let mut z = Self::zero(degree);
        add_monomial(&mut z.coeffs, degree, j, &C::one());
        z
    }

    /// `zeta_order^j` for a root order dividing the degree.
    pub fn root_of_unity(degree: Degree, order: u32, j: i64) -> Result<Self> {
        if order == 0 || !degree.n().is_multiple_of(order) {
            return Err(Error::NotDivisible {
                from: order,
                to: degree.n(),
            });
        }
        Ok(Self::zeta_pow(degree, j * (degree.n() / order) as i64))
    }

    /// `i = zeta_n^(n/4)`.
    pub fn imag_unit(degree: Degree) -> Self {
        Self::zeta_pow(degree, (degree.n() / 4) as i64)
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn map<D: Coeff>(&self, f: impl FnMut(&C) -> D) -> Cyclo<D> {
        Cyclo {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree.n(),
                right: other.degree.n(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Cyclo {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Cyclo {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    /// Schoolbook product followed by reduction modulo the cyclotomic polynomial.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let phi = self.coeffs.len();
        let mut prod = vec![C::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = std::mem::replace(&mut prod[i + j], C::zero());
                prod[i + j] = t + a.clone() * b.clone();
            }
        }
        Ok(reduce(self.degree, prod))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.degree);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The Galois automorphism `zeta -> zeta^a`.
    pub fn galois(&self, a: u32) -> Self {
        let mut out = vec![C::zero(); self.coeffs.len()];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                add_monomial(&mut out, self.degree, a as i64 * j as i64, c);
            }
        }
        Cyclo {
            degree: self.degree,
            coeffs: out,
        }
    }

    /// `u^dagger u`.
    pub fn norm_sq(&self) -> Self {
        &self.conj() * self
    }

    /// The same number viewed in a larger ring `R_target`.
    pub fn embed(&self, target: Degree) -> Result<Self> {
        if !self.degree.divides(target) {
            return Err(Error::NotDivisible {
                from: self.degree.n(),
                to: target.n(),
            });
        }
        let step = (target.n() / self.degree.n()) as i64;
        let mut out = vec![C::zero(); target.totient()];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                add_monomial(&mut out, target, j as i64 * step, c);
            }
        }
        Ok(Cyclo {
            degree: target,
            coeffs: out,
        })
    }

    /// The unique `(a, b)` over the half degree with `self = a + b * zeta_n`.
    ///
    /// The cyclotomic polynomial of `2m` is that of `m` evaluated at `x^2`, so
    /// the split is just even versus odd coefficients.
    pub fn split_half(&self) -> Result<(Self, Self)> {
        let half = self
            .degree
            .half()
            .ok_or(Error::UnsupportedDegree(self.degree.n() / 2))?;
        let even = self.coeffs.iter().step_by(2).cloned().collect();
        let odd = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        Ok((
            Cyclo {
                degree: half,
                coeffs: even,
            },
            Cyclo {
                degree: half,
                coeffs: odd,
            },
        ))
    }

    /// Reads a real element as `a + b sqrt(d)` (`d = 2` for degree 8, `d = 3`
    /// for degree 12). `None` when the element is not of that form.
    pub fn as_real_quad(&self) -> Option<RealQuad<C>> {
        let c = &self.coeffs;
        match self.degree.n() {
            // sqrt2 = z - z^3
            8 => (c[2].is_zero() && c[1] == -c[3].clone())
                .then(|| RealQuad::new(2, c[0].clone(), c[1].clone())),
            // sqrt3 = 2z - z^3
            12 => (c[2].is_zero() && c[1] == c[3].clone() * (-(C::one() + C::one())))
                .then(|| RealQuad::new(3, c[0].clone(), -c[3].clone())),
            _ => None,
        }
    }
}

/// Adds `c * zeta^j` into a coefficient vector of the given degree.
fn add_monomial<C: Coeff>(out: &mut [C], degree: Degree, j: i64, c: &C) {
    for (idx, sign) in degree.monomial(j) {
        match sign {
            1 => {
                let t = std::mem::replace(&mut out[idx], C::zero());
                out[idx] = t + c.clone();
            }
            -1 => {
                let t = std::mem::replace(&mut out[idx], C::zero());
                out[idx] = t - c.clone();
            }
            _ => {}
        }
    }
}

fn reduce<C: Coeff>(degree: Degree, mut poly: Vec<C>) -> Cyclo<C> {
    let phi = degree.totient();
    for i in (phi..poly.len()).rev() {
        let c = std::mem::replace(&mut poly[i], C::zero());
        if c.is_zero() {
            continue;
        }
        // x^phi = -1, or x^phi = x^(phi/2) - 1 in the 3*2^k tower
        if degree.family() == Family::ThreePow2 {
            let t = std::mem::replace(&mut poly[i - phi / 2], C::zero());
            poly[i - phi / 2] = t + c.clone();
        }
        let t = std::mem::replace(&mut poly[i - phi], C::zero());
        poly[i - phi] = t - c;
    }
    poly.resize(phi, C::zero());
    Cyclo {
        degree,
        coeffs: poly,
    }
}

impl<C: Coeff> Conjugate for Cyclo<C> {
    /// `zeta^j -> zeta^(n-j)`.
    fn conj(&self) -> Self {
        self.galois(self.degree.n() - 1)
    }
}

impl<C: Coeff> Ring for Cyclo<C> {
    fn zero_like(&self) -> Self {
        Self::zero(self.degree)
    }
    fn one_like(&self) -> Self {
        Self::one(self.degree)
    }
    fn is_zero_like(&self) -> bool {
        self.is_zero()
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl<C: Coeff> $tr<&Cyclo<C>> for &Cyclo<C> {
            type Output = Cyclo<C>;
            /// Panics on mismatched degrees.
            fn $m(self, rhs: &Cyclo<C>) -> Cyclo<C> {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<C: Coeff> $tr for Cyclo<C> {
            type Output = Cyclo<C>;
            fn $m(self, rhs: Cyclo<C>) -> Cyclo<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coeff> $tr<&Cyclo<C>> for Cyclo<C> {
            type Output = Cyclo<C>;
            fn $m(self, rhs: &Cyclo<C>) -> Cyclo<C> {
                (&self).$m(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<C: Coeff> Neg for &Cyclo<C> {
    type Output = Cyclo<C>;
    fn neg(self) -> Cyclo<C> {
        self.map(|c| -c.clone())
    }
}

impl<C: Coeff> Neg for Cyclo<C> {
    type Output = Cyclo<C>;
    fn neg(self) -> Cyclo<C> {
        -&self
    }
}

pub type CycloElem = Cyclo<Dyadic>;

impl Cyclo<Dyadic> {
    pub fn from_ints(degree: Degree, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(degree, coeffs.iter().map(|&c| Dyadic::from(c)).collect())
    }

    pub fn from_int(degree: Degree, n: i64) -> Self {
        Self::from_scalar(degree, Dyadic::from(n))
    }

    /// `1/sqrt(2) = (zeta_8 - zeta_8^3) / 2`, available whenever `8 | n`.
    pub fn inv_sqrt2(degree: Degree) -> Result<Self> {
        let d8 = Degree::new(8)?;
        Cyclo::from_coeffs(
            d8,
            vec![
                Dyadic::zero(),
                Dyadic::new(1, 1),
                Dyadic::zero(),
                Dyadic::new(-1, 1),
            ],
        )?
        .embed(degree)
    }

    /// `sqrt(2) = zeta_8 - zeta_8^3`.
    pub fn sqrt2(degree: Degree) -> Result<Self> {
        Ok(Self::inv_sqrt2(degree)?.mul_pow2(1))
    }

    /// `delta = 1 + i`.
    pub fn one_plus_i(degree: Degree) -> Self {
        Self::one(degree) + Self::imag_unit(degree)
    }

    /// True iff every coefficient is an integer, i.e. the element lies in `Z[zeta_n]`.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Dyadic::is_integer)
    }

    /// Largest power of two in any coefficient denominator.
    pub fn max_exp(&self) -> u32 {
        self.coeffs.iter().map(Dyadic::exp).max().unwrap_or(0)
    }

    pub fn mul_pow2(&self, shift: i64) -> Self {
        self.map(|c| c.mul_pow2(shift))
    }

    /// Coefficient-wise parity representative; requires an integral element.
    pub fn mod2(&self) -> Result<Cyclo<Dyadic>> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.mod2().map(|b| Dyadic::from(b as i64)))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::NotIntegral)?;
        Ok(Cyclo {
            degree: self.degree,
            coeffs,
        })
    }

    /// Bit mask of the mod-2 representative.
    pub fn mod2_mask(&self) -> Result<u64> {
        Ok(self
            .mod2()?
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(0u64, |m, (i, _)| m | (1 << i)))
    }

    /// True iff every coefficient is an even integer.
    pub fn is_zero_mod2(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_even() == Some(true))
    }

    /// The rational norm `prod_sigma sigma(self)` and the product of the
    /// non-identity conjugates.
    pub fn norm_and_cofactor(&self) -> (Dyadic, Self) {
        let mut cof = Self::one(self.degree);
        for a in self.degree.galois_exponents().skip(1) {
            cof = &cof * &self.galois(a);
        }
        let norm = (self * &cof).coeffs[0].clone();
        (norm, cof)
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.degree.n() as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (j, c)| {
                let t = std::f64::consts::TAU * j as f64 / n;
                let v = c.to_f64();
                (re + v * t.cos(), im + v * t.sin())
            })
    }

    /// The exponent `l` with `self = zeta_n^l`, if any.
    pub fn root_of_unity_exponent(&self) -> Option<u32> {
        (0..self.degree.n()).find(|&l| *self == Self::zeta_pow(self.degree, l as i64))
    }
}

impl ExactDiv for Cyclo<Dyadic> {
    /// `w / v = w * cof(v) / N(v)`, accepted only when the quotient has dyadic
    /// coefficients.
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if self.degree != divisor.degree || divisor.is_zero() {
            return None;
        }
        let (norm, cof) = divisor.norm_and_cofactor();
        let num = self * &cof;
        let coeffs = num
            .coeffs
            .iter()
            .map(|c| c.exact_div(&norm))
            .collect::<Option<Vec<_>>>()?;
        Some(Cyclo {
            degree: self.degree,
            coeffs,
        })
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for Cyclo<C> {
    /// The element literal `deg=<n>; coeffs=<c0>,<c1>,...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "deg={}; coeffs=", self.degree)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Cyclo<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "deg={}; coeffs=", self.degree)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c:?}")?;
        }
        Ok(())
    }
}

impl FromStr for Cyclo<Dyadic> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (deg_part, coeff_part) = s
            .split_once(';')
            .ok_or_else(|| Error::parse(1, 1, "expected `deg=<n>; coeffs=...`"))?;
        let deg_str = deg_part
            .trim()
            .strip_prefix("deg=")
            .ok_or_else(|| Error::parse(1, 1, "expected `deg=`"))?;
        let n: u32 = deg_str
            .trim()
            .parse()
            .map_err(|_| Error::parse(1, 5, format!("invalid degree {deg_str:?}")))?;
        let degree = Degree::new(n)?;
        let col = deg_part.len() + 2;
        let list = coeff_part
            .trim()
            .strip_prefix("coeffs=")
            .ok_or_else(|| Error::parse(1, col, "expected `coeffs=`"))?;
        let coeffs = list
            .split(',')
            .map(|t| {
                t.parse::<Dyadic>()
                    .map_err(|_| Error::parse(1, col, format!("invalid coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Cyclo::from_coeffs(degree, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(n: u32) -> Degree {
        Degree::new(n).unwrap()
    }

    fn ints(n: u32, c: &[i64]) -> CycloElem {
        CycloElem::from_ints(deg(n), c).unwrap()
    }

    #[test]
    fn zeta12_relation() {
        let z2 = CycloElem::zeta_pow(deg(12), 2);
        assert_eq!(&z2 * &z2, ints(12, &[-1, 0, 1, 0]));
        let z8 = CycloElem::zeta_pow(deg(8), 2);
        assert_eq!(&z8 * &z8, CycloElem::from_int(deg(8), -1));
    }

    #[test]
    fn two_factors_through_delta() {
        let d = deg(12);
        let delta = ints(12, &[1, 0, 0, 1]);
        assert_eq!(delta, CycloElem::one_plus_i(d));
        let minus_i = -CycloElem::imag_unit(d);
        assert_eq!(&(&delta * &delta) * &minus_i, CycloElem::from_int(d, 2));
    }

    #[test]
    fn conjugation() {
        let d = deg(12);
        assert_eq!(CycloElem::zeta(d).conj(), ints(12, &[0, 1, 0, -1]));
        let half = CycloElem::from_scalar(d, Dyadic::new(1, 1));
        assert_eq!(half.conj(), half);
        assert_eq!(ints(12, &[1, 0, 0, 1]).conj(), ints(12, &[1, 0, 0, -1]));
    }

    #[test]
    fn norms_in_degree_12() {
        let u = ints(12, &[1, 1, 0, 0]);
        assert_eq!(u.norm_sq().as_real_quad(), Some(RealQuad::new(3, 2.into(), 1.into())));
        let delta = ints(12, &[1, 0, 0, 1]);
        assert_eq!(delta.norm_sq(), CycloElem::from_int(deg(12), 2));
        // (a,b,c,d) = (1,1,1,1): (1+1+1) + (1+1+1) + (1+1+1) sqrt3
        let all = ints(12, &[1, 1, 1, 1]);
        assert_eq!(all.norm_sq().as_real_quad(), Some(RealQuad::new(3, 6.into(), 3.into())));
    }

    #[test]
    fn embeddings() {
        assert_eq!(
            CycloElem::zeta(deg(8)).embed(deg(16)).unwrap(),
            CycloElem::zeta_pow(deg(16), 2)
        );
        assert_eq!(
            CycloElem::zeta(deg(12)).embed(deg(24)).unwrap(),
            CycloElem::zeta_pow(deg(24), 2)
        );
        let s = CycloElem::inv_sqrt2(deg(8)).unwrap();
        assert!(s
            .coeffs()
            .iter()
            .all(|c| c.is_zero() || c.abs_eq_half()));
        assert_eq!(&s * &s, CycloElem::from_scalar(deg(8), Dyadic::new(1, 1)));
        assert!(CycloElem::zeta(deg(12)).embed(deg(16)).is_err());
    }

    impl Dyadic {
        fn abs_eq_half(&self) -> bool {
            *self == Dyadic::new(1, 1) || *self == Dyadic::new(-1, 1)
        }
    }

    #[test]
    fn split_half_examples() {
        let d16 = deg(16);
        let (a, b) = CycloElem::zeta(d16).split_half().unwrap();
        assert!(a.is_zero() && b.is_one());
        let (a, b) = CycloElem::zeta_pow(d16, 2).split_half().unwrap();
        assert_eq!((a, b.is_zero()), (CycloElem::zeta(deg(8)), true));

        let d24 = deg(24);
        let u = CycloElem::from_int(d24, 3) + CycloElem::zeta_pow(d24, 5);
        let (a, b) = u.split_half().unwrap();
        assert_eq!(a, CycloElem::from_int(deg(12), 3));
        assert_eq!(b, CycloElem::zeta_pow(deg(12), 2));
        // recombination oracle
        let back = a.embed(d24).unwrap() + &b.embed(d24).unwrap() * &CycloElem::zeta(d24);
        assert_eq!(back, u);
        assert!(CycloElem::zeta(deg(12)).split_half().is_err());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = CycloElem::one(deg(8));
        let b = CycloElem::one(deg(16));
        assert!(matches!(a.try_mul(&b), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn exact_division() {
        let d = deg(12);
        let delta = CycloElem::one_plus_i(d);
        let two = CycloElem::from_int(d, 2);
        let q = two.exact_div(&delta).unwrap();
        assert_eq!(&q * &delta, two);
        assert!(q.is_integral());
        // 1/3 is not dyadic
        let three = CycloElem::from_int(d, 3);
        assert_eq!(CycloElem::one(d).exact_div(&three), None);
    }

    #[test]
    fn literal_round_trip() {
        let s = "deg=16; coeffs=1,0,-3/2^2,0,0,7,0,1/2^5";
        let u: CycloElem = s.parse().unwrap();
        assert_eq!(u.to_string(), s);
        assert!("deg=10; coeffs=1".parse::<CycloElem>().is_err());
        assert!("deg=8; coeffs=1,2".parse::<CycloElem>().is_err());
        assert!("coeffs=1,2".parse::<CycloElem>().is_err());
    }

    #[test]
    fn integer_coefficients_work_too() {
        let d = deg(16);
        let z = Cyclo::<i64>::zeta(d);
        assert_eq!(z.pow(8), Cyclo::<i64>::from_scalar(d, -1));
        assert_eq!(z.pow(16), Cyclo::<i64>::one(d));
    }
}
