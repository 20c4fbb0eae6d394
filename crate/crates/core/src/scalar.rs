//! Scalar abstractions shared by the exact and the floating-point code paths.
//!
//! Matrices and determinants are written against [`Ring`], so the same code
//! runs over `f64`, machine or big integers, dyadic fractions, cyclotomic
//! elements and even square matrices (as elements of a commutative matrix
//! subring).

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Coefficient type of a cyclotomic element.
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Debug + Zero + One + Neg<Output = T> + Sub<Output = T> + Mul<Output = T>
{
}

/// A commutative ring whose additive and multiplicative identities may depend
/// on the shape of a particular value (cyclotomic degree, matrix size).
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;

    fn is_zero_like(&self) -> bool {
        *self == self.zero_like()
    }
}

/// Complex conjugation; the identity on real scalars.
pub trait Conjugate {
    fn conj(&self) -> Self;
}

/// Division that succeeds only when the quotient lies in the ring.
pub trait ExactDiv: Sized {
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

macro_rules! impl_num_ring {
    ($($t:ty),*) => {$(
        impl Ring for $t {
            fn zero_like(&self) -> Self {
                <$t as Zero>::zero()
            }
            fn one_like(&self) -> Self {
                <$t as One>::one()
            }
        }

        impl Conjugate for $t {
            fn conj(&self) -> Self {
                self.clone()
            }
        }
    )*};
}

impl_num_ring!(i32, i64, i128, f32, f64, BigInt);

macro_rules! impl_int_exact_div {
    ($($t:ty),*) => {$(
        impl ExactDiv for $t {
            fn exact_div(&self, divisor: &Self) -> Option<Self> {
                if divisor.is_zero() {
                    return None;
                }
                let (q, r) = self.div_rem(divisor);
                r.is_zero().then_some(q)
            }
        }
    )*};
}

impl_int_exact_div!(i32, i64, i128, BigInt);
