//! Exact synthesis of Clifford-cyclotomic circuits.
//!
//! Unitaries with entries in `R_n` (`n = 2^k` or `3 * 2^k`) are decomposed
//! into one- and two-level operators, wrapped with catalyst wires where the
//! degree has to be lowered, and checked by exact evaluation.

pub mod catalytic;
pub mod circuit;
pub mod error;
pub mod io;
pub mod linalg;
pub mod ring;
pub mod scalar;
pub mod synthesis;

pub use error::{Error, Result};
pub use linalg::{LevelOp, Matrix, RingMatrix, RingVector, Vector};
pub use ring::{CycloElem, Degree, Dyadic};

/// Cyclotomic integers with machine-word coefficients.
pub type ZCyclo = ring::Cyclo<i64>;
