use std::fmt;

use super::cyclo::Cyclo;
use super::degree::Degree;
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// `a + b sqrt(d)` in `Z[sqrt2]` or `Z[sqrt3]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RealQuad<C> {
    pub d: u32,
    pub a: C,
    pub b: C,
}

impl<C: Coeff> RealQuad<C> {
    pub fn new(d: u32, a: C, b: C) -> Self {
        RealQuad { d, a, b }
    }

    /// The same number inside the cyclotomic ring that contains `sqrt(d)`:
    /// degree 8 for `d = 2`, degree 12 for `d = 3`.
    pub fn to_cyclo(&self) -> Result<Cyclo<C>> {
        let (a, b) = (self.a.clone(), self.b.clone());
        let z = C::zero();
        match self.d {
            2 => Cyclo::from_coeffs(Degree::new(8)?, vec![a, b.clone(), z, -b]),
            3 => Cyclo::from_coeffs(Degree::new(12)?, vec![a, b.clone() + b.clone(), z, -b]),
            d => Err(Error::Precondition(format!("sqrt({d}) is not supported"))),
        }
    }
}

impl<C: fmt::Display> fmt::Display for RealQuad<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt{}", self.a, self.b, self.d)
    }
}
