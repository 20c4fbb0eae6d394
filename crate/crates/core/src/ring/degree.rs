use std::fmt;

use crate::error::{Error, Result};

/// The two cyclotomic towers the library works with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `n = 2^k`, `k >= 2`.
    Pow2,
    /// `n = 3 * 2^k`, `k >= 2`.
    ThreePow2,
}

/// A supported cyclotomic order `n`: `2^k` or `3 * 2^k` with `k >= 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree(u32);

impl Degree {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedDegree(n));
        }
        let k = n.trailing_zeros();
        match (n >> k, k) {
            (1 | 3, k) if k >= 2 => Ok(Degree(n)),
            _ => Err(Error::UnsupportedDegree(n)),
        }
    }

    pub fn pow2(k: u32) -> Result<Self> {
        1u32.checked_shl(k)
            .ok_or(Error::UnsupportedDegree(u32::MAX))
            .and_then(Self::new)
    }

    pub fn three_pow2(k: u32) -> Result<Self> {
        1u32.checked_shl(k)
            .and_then(|p| p.checked_mul(3))
            .ok_or(Error::UnsupportedDegree(u32::MAX))
            .and_then(Self::new)
    }

    pub fn n(self) -> u32 {
        self.0
    }

    pub fn family(self) -> Family {
        if self.0.is_power_of_two() {
            Family::Pow2
        } else {
            Family::ThreePow2
        }
    }

    /// The `k` in `2^k` or `3 * 2^k`.
    pub fn exponent(self) -> u32 {
        self.0.trailing_zeros()
    }

    /// Euler's totient, the length of the power basis.
    pub fn totient(self) -> usize {
        match self.family() {
            Family::Pow2 => (self.0 / 2) as usize,
            Family::ThreePow2 => (self.0 / 3) as usize,
        }
    }

    /// Coefficients of the cyclotomic polynomial, lowest degree first.
    pub fn modulus_poly(self) -> Vec<i64> {
        let phi = self.totient();
        let mut p = vec![0i64; phi + 1];
        p[0] = 1;
        p[phi] = 1;
        if self.family() == Family::ThreePow2 {
            p[phi / 2] = -1;
        }
        p
    }

    pub fn divides(self, other: Degree) -> bool {
        other.0.is_multiple_of(self.0)
    }

    /// The degree one step down the same tower, if it is supported.
    pub fn half(self) -> Option<Degree> {
        Degree::new(self.0 / 2).ok().filter(|_| self.0.is_multiple_of(2))
    }

    pub fn double(self) -> Degree {
        Degree(self.0 * 2)
    }

    /// `zeta^j` in the power basis, as up to two signed basis indices.
    ///
    /// Unused slots carry sign 0.
    pub fn monomial(self, j: i64) -> [(usize, i8); 2] {
        let n = self.0 as i64;
        let phi = self.totient() as i64;
        let mut r = j.rem_euclid(n);
        match self.family() {
            Family::Pow2 => {
                if r < phi {
                    [(r as usize, 1), (0, 0)]
                } else {
                    [((r - phi) as usize, -1), (0, 0)]
                }
            }
            Family::ThreePow2 => {
                // zeta^(n/2) = -1, zeta^phi = zeta^(phi/2) - 1
                let mut sign = 1i8;
                if r >= n / 2 {
                    r -= n / 2;
                    sign = -1;
                }
                if r < phi {
                    [(r as usize, sign), (0, 0)]
                } else {
                    [((r - phi / 2) as usize, sign), ((r - phi) as usize, -sign)]
                }
            }
        }
    }

    /// Exponents `a` in `1..n` coprime to `n`, i.e. the Galois group.
    pub fn galois_exponents(self) -> impl Iterator<Item = u32> {
        let n = self.0;
        (1..n).filter(move |&a| num_integer::gcd(a, n) == 1)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Degree({})", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whitelist() {
        for n in [4, 8, 12, 16, 24, 32, 48, 64, 96, 1024, 3072] {
            assert!(Degree::new(n).is_ok(), "{n}");
        }
        for n in [0, 1, 2, 3, 5, 6, 7, 10, 20, 36, 40] {
            assert_eq!(Degree::new(n), Err(Error::UnsupportedDegree(n)));
        }
    }

    #[test]
    fn totients_and_moduli() {
        let d12 = Degree::new(12).unwrap();
        assert_eq!(d12.totient(), 4);
        assert_eq!(d12.modulus_poly(), vec![1, 0, -1, 0, 1]);
        let d16 = Degree::new(16).unwrap();
        assert_eq!(d16.totient(), 8);
        assert_eq!(d16.modulus_poly(), vec![1, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(Degree::new(24).unwrap().modulus_poly(), {
            let mut p = vec![0; 9];
            p[0] = 1;
            p[4] = -1;
            p[8] = 1;
            p
        });
        assert_eq!(Degree::new(48).unwrap().totient(), 16);
        assert_eq!(d12.galois_exponents().collect::<Vec<_>>(), vec![1, 5, 7, 11]);
    }

    #[test]
    fn monomials_degree_12() {
        let d = Degree::new(12).unwrap();
        assert_eq!(d.monomial(4), [(2, 1), (0, -1)]);
        assert_eq!(d.monomial(11), [(3, -1), (1, 1)]);
        assert_eq!(d.monomial(6), [(0, -1), (0, 0)]);
        assert_eq!(d.monomial(-1), d.monomial(11));
    }

    #[test]
    fn halving() {
        assert_eq!(Degree::new(16).unwrap().half(), Some(Degree::new(8).unwrap()));
        assert_eq!(Degree::new(24).unwrap().half(), Some(Degree::new(12).unwrap()));
        assert_eq!(Degree::new(12).unwrap().half(), None);
        assert_eq!(Degree::new(4).unwrap().half(), None);
    }
}
