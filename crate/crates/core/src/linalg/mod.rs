//! Dense matrices and vectors over commutative rings, determinants, and the
//! one- and two-level operators.

pub mod level;
pub mod matrix;
pub mod vector;

pub use level::{one_level, two_level, LevelOp, TwoLevelKind};
pub use matrix::{Matrix, RingMatrix};
pub use vector::{RingVector, Vector};
