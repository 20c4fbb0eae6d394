use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{CycloElem, Degree, LdeBase};
use crate::scalar::{Conjugate, ExactDiv, Ring};

/// Dense row-major matrix over a ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// `n x n` identity; `proto` supplies the zero and one of the right shape.
    pub fn identity(n: usize, proto: &T) -> Self {
        let (zero, one) = (proto.zero_like(), proto.one_like());
        Self::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn zeros(rows: usize, cols: usize, proto: &T) -> Self {
        let zero = proto.zero_like();
        Self::from_fn(rows, cols, |_, _| zero.clone())
    }

    /// `c * I_n`.
    pub fn scalar(n: usize, c: &T) -> Self {
        let zero = c.zero_like();
        Self::from_fn(n, n, |i, j| if i == j { c.clone() } else { zero.clone() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<T> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U: Ring>(&self, f: impl FnMut(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.zip(other, |a, b| a.clone() + b.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.zip(other, |a, b| a.clone() - b.clone()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = self.data[0].zero_like();
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = zero.clone();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero_like() {
                        continue;
                    }
                    let b = other.get(k, j);
                    if b.is_zero_like() {
                        continue;
                    }
                    acc = acc + a.clone() * b.clone();
                }
                data.push(acc);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (other.rows, other.cols);
        Self::from_fn(self.rows * r, self.cols * c, |i, j| {
            self.get(i / r, j / c).clone() * other.get(i % r, j % c).clone()
        })
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot apply {}x{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let zero = self.data[0].zero_like();
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero_like() && !b.is_zero_like())
                    .fold(zero.clone(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Determinant by expansion over column subsets, valid over any
    /// commutative ring. Cost is `O(2^n n)` ring operations.
    pub fn det_expansion(&self) -> Result<T> {
        self.require_square()?;
        let n = self.rows;
        if n > 20 {
            return Err(Error::Precondition(format!(
                "expansion determinant is limited to dimension 20, got {n}"
            )));
        }
        // dp[mask]: signed sum over injections of the first |mask| rows onto mask
        let zero = self.data[0].zero_like();
        let mut dp: Vec<Option<T>> = vec![None; 1 << n];
        dp[0] = Some(self.data[0].one_like());
        for mask in 0usize..(1 << n) {
            let Some(cur) = dp[mask].take() else {
                continue;
            };
            let r = mask.count_ones() as usize;
            if r == n {
                dp[mask] = Some(cur);
                continue;
            }
            for c in 0..n {
                if mask & (1 << c) != 0 {
                    continue;
                }
                let a = self.get(r, c);
                if a.is_zero_like() {
                    continue;
                }
                let mut term = cur.clone() * a.clone();
                if (mask >> c).count_ones() % 2 == 1 {
                    term = -term;
                }
                let slot = &mut dp[mask | (1 << c)];
                *slot = Some(match slot.take() {
                    Some(s) => s + term,
                    None => term,
                });
            }
        }
        Ok(dp[(1 << n) - 1].take().unwrap_or(zero))
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn zip(&self, other: &Self, mut f: impl FnMut(&T, &T) -> T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl<T: Ring + ExactDiv> Matrix<T> {
    /// Determinant. Small matrices use expansion; larger ones fraction-free
    /// elimination with exact division by the previous pivot.
    pub fn det(&self) -> Result<T> {
        self.require_square()?;
        let n = self.rows;
        if n <= 4 {
            return self.det_expansion();
        }
        let mut m = self.data.clone();
        let at = |i: usize, j: usize| i * n + j;
        let mut prev = m[0].one_like();
        let mut negate = false;
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&i| !m[at(i, k)].is_zero_like()) else {
                return Ok(m[0].zero_like());
            };
            if p != k {
                for j in 0..n {
                    m.swap(at(p, j), at(k, j));
                }
                negate = !negate;
            }
            let pivot = m[at(k, k)].clone();
            for i in k + 1..n {
                let lead = m[at(i, k)].clone();
                for j in k + 1..n {
                    let num = m[at(i, j)].clone() * pivot.clone() - lead.clone() * m[at(k, j)].clone();
                    m[at(i, j)] = num.exact_div(&prev).ok_or_else(|| {
                        Error::Internal("inexact division in fraction-free elimination".into())
                    })?;
                }
                m[at(i, k)] = m[0].zero_like();
            }
            prev = pivot;
        }
        let d = m[at(n - 1, n - 1)].clone();
        Ok(if negate { -d } else { d })
    }
}

impl<T: Ring + Conjugate> Matrix<T> {
    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    /// `M^dagger M = I`, checked exactly.
    pub fn is_unitary(&self) -> bool {
        self.is_square()
            && self
                .dagger()
                .try_mul(self)
                .is_ok_and(|p| p == Self::identity(self.rows, &self.data[0]))
    }
}

impl<T: Ring> Ring for Matrix<T> {
    fn zero_like(&self) -> Self {
        Self::zeros(self.rows, self.cols, &self.data[0])
    }
    fn one_like(&self) -> Self {
        Self::identity(self.rows, &self.data[0])
    }
    fn is_zero_like(&self) -> bool {
        self.data.iter().all(Ring::is_zero_like)
    }
}

impl<T: Ring + Conjugate> Conjugate for Matrix<T> {
    fn conj(&self) -> Self {
        self.dagger()
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl<T: Ring> $tr<&Matrix<T>> for &Matrix<T> {
            type Output = Matrix<T>;
            /// Panics on mismatched shapes.
            fn $m(self, rhs: &Matrix<T>) -> Matrix<T> {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<T: Ring> $tr for Matrix<T> {
            type Output = Matrix<T>;
            fn $m(self, rhs: Matrix<T>) -> Matrix<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<T: Ring> Neg for Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|a| -a.clone())
    }
}

pub type RingMatrix = Matrix<CycloElem>;

impl Matrix<CycloElem> {
    pub fn identity_deg(degree: Degree, n: usize) -> Self {
        Self::identity(n, &CycloElem::zero(degree))
    }

    pub fn zeros_deg(degree: Degree, rows: usize, cols: usize) -> Self {
        Self::zeros(rows, cols, &CycloElem::zero(degree))
    }

    /// Builds a matrix whose entries must all share `degree`.
    pub fn with_degree(degree: Degree, rows: usize, cols: usize, data: Vec<CycloElem>) -> Result<Self> {
        if let Some(bad) = data.iter().find(|u| u.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: bad.degree().n(),
                right: degree.n(),
            });
        }
        Self::new(rows, cols, data)
    }

    pub fn degree(&self) -> Degree {
        self.data[0].degree()
    }

    pub fn lde(&self, base: &LdeBase) -> Result<u32> {
        base.lde_all(&self.data)
    }

    pub fn embed_degree(&self, target: Degree) -> Result<Self> {
        self.try_map(|u| u.embed(target))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<i64> {
        Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn products_and_shapes() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let i = Matrix::identity(2, &0i64);
        assert_eq!(&i * &a, a);
        assert_eq!(&a * &a, m(vec![vec![7, 10], vec![15, 22]]));
        let b = m(vec![vec![1, 2, 3]]);
        assert!(a.try_mul(&b).is_err());
        assert_eq!(b.transpose().rows(), 3);
    }

    #[test]
    fn kron_layout() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let x = m(vec![vec![0, 1], vec![1, 0]]);
        let k = a.kron(&x);
        assert_eq!(k.row(0), &[0, 1, 0, 2]);
        assert_eq!(k.row(3), &[3, 0, 4, 0]);
    }

    #[test]
    fn determinants_agree() {
        let a = m(vec![
            vec![2, -1, 0, 3, 1],
            vec![1, 4, 2, 0, -2],
            vec![0, 0, 5, 1, 1],
            vec![3, 1, 0, -1, 2],
            vec![1, 1, 1, 1, 0],
        ]);
        assert_eq!(a.det().unwrap(), a.det_expansion().unwrap());
        let singular = m(vec![
            vec![1, 2, 3, 4, 5],
            vec![2, 4, 6, 8, 10],
            vec![0, 1, 0, 1, 0],
            vec![1, 0, 1, 0, 1],
            vec![3, 3, 3, 3, 3],
        ]);
        assert_eq!(singular.det().unwrap(), 0);
        // a zero leading pivot forces a row swap
        let swap = m(vec![
            vec![0, 1, 0, 0, 0],
            vec![1, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 1],
        ]);
        assert_eq!(swap.det().unwrap(), -1);
    }

    #[test]
    fn unitary_check() {
        let d = Degree::new(12).unwrap();
        let diag = RingMatrix::from_fn(2, 2, |i, j| {
            CycloElem::from_int(d, if i == j { (i + 1) as i64 } else { 0 })
        });
        assert!(!diag.is_unitary());
        assert!(RingMatrix::identity_deg(d, 3).is_unitary());
    }
}
