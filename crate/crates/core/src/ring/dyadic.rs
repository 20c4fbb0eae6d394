use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Conjugate, ExactDiv, Ring};

/// An exact dyadic fraction `num / 2^exp`.
///
/// Always canonical: either `num` is odd, or the value is zero with `exp = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: impl Into<BigInt>, exp: u32) -> Self {
        let mut d = Dyadic {
            num: num.into(),
            exp,
        };
        d.canonicalize();
        d
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::new(n, 0)
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    /// `self * 2^shift`, where `shift` may be negative.
    pub fn mul_pow2(&self, shift: i64) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        if shift >= 0 {
            let s = shift as u64;
            let e = self.exp as u64;
            if s >= e {
                Dyadic {
                    num: &self.num << (s - e),
                    exp: 0,
                }
            } else {
                Dyadic {
                    num: self.num.clone(),
                    exp: (e - s) as u32,
                }
            }
        } else {
            Dyadic::new(self.num.clone(), self.exp + (-shift) as u32)
        }
    }

    pub fn half(&self) -> Self {
        self.mul_pow2(-1)
    }

    /// Parity of an integer value; `None` for non-integers.
    pub fn is_even(&self) -> Option<bool> {
        self.is_integer().then(|| self.num.is_even())
    }

    /// Integer value reduced into `{0, 1}`; `None` for non-integers.
    pub fn mod2(&self) -> Option<u8> {
        self.is_even().map(|e| if e { 0 } else { 1 })
    }

    pub fn to_f64(&self) -> f64 {
        self.num.to_f64().unwrap_or(f64::NAN) * (-(self.exp as f64)).exp2()
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0);
        let s = tz.min(self.exp as u64) as u32;
        if s > 0 {
            self.num >>= s;
            self.exp -= s;
        }
    }
}

impl Zero for Dyadic {
    fn zero() -> Self {
        Dyadic {
            num: BigInt::zero(),
            exp: 0,
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Dyadic {
    fn one() -> Self {
        Dyadic {
            num: BigInt::one(),
            exp: 0,
        }
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_int(n)
    }
}

impl From<BigInt> for Dyadic {
    fn from(n: BigInt) -> Self {
        Dyadic::from_int(n)
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &'a Dyadic) -> Dyadic {
        if self.exp == rhs.exp {
            return Dyadic::new(&self.num + &rhs.num, self.exp);
        }
        let (hi, lo) = if self.exp > rhs.exp {
            (self, rhs)
        } else {
            (rhs, self)
        };
        // the lower-exponent term is shifted up, so the sum is already canonical
        let num = &hi.num + (&lo.num << (hi.exp - lo.exp));
        Dyadic { num, exp: hi.exp }
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &'a Dyadic) -> Dyadic {
        Dyadic::new(&self.num * &rhs.num, self.exp + rhs.exp)
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &'a Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -&self.num,
            exp: self.exp,
        }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(mut self) -> Dyadic {
        self.num = -self.num;
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: &'a Dyadic) -> Dyadic {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Dyadic> for Dyadic {
    fn add_assign(&mut self, rhs: &Dyadic) {
        *self = &*self + rhs;
    }
}

impl Ring for Dyadic {
    fn zero_like(&self) -> Self {
        Dyadic::zero()
    }
    fn one_like(&self) -> Self {
        Dyadic::one()
    }
}

impl Conjugate for Dyadic {
    fn conj(&self) -> Self {
        self.clone()
    }
}

impl ExactDiv for Dyadic {
    /// Succeeds iff the odd part of the divisor divides the numerator.
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let tz = divisor.num.trailing_zeros().unwrap_or(0) as i64;
        let odd = &divisor.num >> tz;
        let (q, r) = self.num.div_rem(&odd);
        if !r.is_zero() {
            return None;
        }
        Some(Dyadic::new(q, self.exp).mul_pow2(divisor.exp as i64 - tz))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let e = self.exp.max(other.exp);
        let a = &self.num << (e - self.exp);
        let b = &other.num << (e - other.exp);
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// Accepts `p` or `p/2^e`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| Error::parse(1, 1, format!("{msg}: {s:?}"));
        let (num, exp) = match s.split_once('/') {
            None => (s, 0),
            Some((n, d)) => {
                let e = d
                    .trim()
                    .strip_prefix("2^")
                    .ok_or_else(|| bad("denominator must be 2^e"))?;
                let e: u32 = e.parse().map_err(|_| bad("invalid exponent"))?;
                (n.trim(), e)
            }
        };
        if num.is_empty() || num.starts_with('+') && num.len() == 1 {
            return Err(bad("empty numerator"));
        }
        let num: BigInt = num.parse().map_err(|_| bad("invalid numerator"))?;
        Ok(Dyadic::new(num, exp))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let sum = d("1/2^1") + d("1/2^1");
        assert_eq!(sum.num(), &BigInt::from(1));
        assert_eq!(sum.exp(), 0);
        assert_eq!(d("3/2^2") * d("2"), d("3/2^1"));
        let z = d("0") + d("0");
        assert!(z.num().is_zero());
        assert_eq!(z.exp(), 0);
    }

    #[test]
    fn canonical_form() {
        let x = Dyadic::new(12, 3);
        assert_eq!((x.num().clone(), x.exp()), (BigInt::from(3), 1));
        assert_eq!(Dyadic::new(0, 7).exp(), 0);
        assert_eq!(Dyadic::new(8, 1), Dyadic::from_int(4));
        assert_eq!(d("6/2^2").to_string(), "3/2^1");
        let y = Dyadic::from_int(4).mul_pow2(-3);
        assert_eq!((y.num().clone(), y.exp()), (BigInt::from(1), 1));
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "-5", "1/2^1", "-7/2^10", "123456789012345678901234567890"] {
            assert_eq!(d(s).to_string(), s);
        }
        assert!("1/3".parse::<Dyadic>().is_err());
        assert!("x".parse::<Dyadic>().is_err());
        assert!("".parse::<Dyadic>().is_err());
    }

    #[test]
    fn exact_division() {
        assert_eq!(d("3").exact_div(&d("6")), Some(d("1/2^1")));
        assert_eq!(d("1").exact_div(&d("3")), None);
        assert_eq!(d("9/2^2").exact_div(&d("3/2^5")), Some(d("24")));
        assert_eq!(d("1").exact_div(&d("0")), None);
    }

    #[test]
    fn ordering_and_shift() {
        assert!(d("1/2^1") < d("1"));
        assert!(d("-1/2^3") < d("0"));
        assert_eq!(d("3").mul_pow2(-2), d("3/2^2"));
        assert_eq!(d("3/2^2").mul_pow2(3), d("6"));
    }
}
