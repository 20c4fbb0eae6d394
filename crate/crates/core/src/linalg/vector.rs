use std::ops::{Deref, DerefMut};

use crate::error::{Error, Result};
use crate::ring::{CycloElem, Degree, LdeBase};
use crate::scalar::{Conjugate, Ring};

use super::matrix::Matrix;

/// Column vector over a ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vector<T>(pub Vec<T>);

impl<T> Deref for Vector<T> {
    type Target = Vec<T>;
    fn deref(&self) -> &Vec<T> {
        &self.0
    }
}

impl<T> DerefMut for Vector<T> {
    fn deref_mut(&mut self) -> &mut Vec<T> {
        &mut self.0
    }
}

impl<T> From<Vec<T>> for Vector<T> {
    fn from(v: Vec<T>) -> Self {
        Vector(v)
    }
}

impl<T: Ring> Vector<T> {
    /// The standard basis vector `e_j` of length `dim`.
    pub fn basis(dim: usize, j: usize, proto: &T) -> Result<Self> {
        if j >= dim {
            return Err(Error::IndexOutOfRange { index: j, dim });
        }
        let (zero, one) = (proto.zero_like(), proto.one_like());
        Ok(Vector(
            (0..dim).map(|i| if i == j { one.clone() } else { zero.clone() }).collect(),
        ))
    }

    /// `self (x) other`, with `other` on the less significant index.
    pub fn kron(&self, other: &Self) -> Self {
        Vector(
            self.iter()
                .flat_map(|a| other.iter().map(move |b| a.clone() * b.clone()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Vector(self.iter().map(|a| c.clone() * a.clone()).collect())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::ShapeMismatch(format!(
                "vector lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(Vector(
            self.iter().zip(other.iter()).map(|(a, b)| a.clone() + b.clone()).collect(),
        ))
    }

    pub fn as_column(&self) -> Result<Matrix<T>> {
        Matrix::new(self.len(), 1, self.0.clone())
    }
}

impl<T: Ring + Conjugate> Vector<T> {
    /// `sum_i conj(v_i) v_i`.
    pub fn norm_sq(&self) -> Option<T> {
        let first = self.first()?;
        Some(
            self.iter()
                .fold(first.zero_like(), |acc, a| acc + a.conj() * a.clone()),
        )
    }

    pub fn is_unit(&self) -> bool {
        self.norm_sq().is_some_and(|n| n == n.one_like())
    }
}

pub type RingVector = Vector<CycloElem>;

impl Vector<CycloElem> {
    pub fn basis_deg(degree: Degree, dim: usize, j: usize) -> Result<Self> {
        Self::basis(dim, j, &CycloElem::zero(degree))
    }

    pub fn degree(&self) -> Option<Degree> {
        self.first().map(CycloElem::degree)
    }

    pub fn lde(&self, base: &LdeBase) -> Result<u32> {
        base.lde_all(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_and_kron() {
        let e1 = Vector::basis(2, 1, &0i64).unwrap();
        let e0 = Vector::basis(2, 0, &0i64).unwrap();
        assert_eq!(e1.kron(&e0), Vector(vec![0, 0, 1, 0]));
        assert!(Vector::basis(2, 2, &0i64).is_err());
    }

    #[test]
    fn unit_vectors() {
        let d = Degree::new(8).unwrap();
        let h = CycloElem::inv_sqrt2(d).unwrap();
        let v = Vector(vec![h.clone(), h]);
        assert!(v.is_unit());
        assert!(!Vector(vec![CycloElem::from_int(d, 2)]).is_unit());
    }
}
