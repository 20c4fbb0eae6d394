use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::{CycloElem, Degree};

use super::matrix::RingMatrix;

/// The 2x2 blocks a two-level operator can carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwoLevelKind {
    X,
    /// Hadamard, `(1/sqrt2) [[1, 1], [1, -1]]`; needs `8 | n`.
    H,
    /// `zeta_8 H = ((1 + i)/2) [[1, 1], [1, -1]]`, which lies in `R_12`.
    Hp,
}

impl TwoLevelKind {
    pub fn name(self) -> &'static str {
        match self {
            TwoLevelKind::X => "X",
            TwoLevelKind::H => "H",
            TwoLevelKind::Hp => "Hp",
        }
    }

    /// Row-major entries of the block at the given degree.
    pub fn block(self, degree: Degree) -> Result<[CycloElem; 4]> {
        let z = CycloElem::zero(degree);
        let o = CycloElem::one(degree);
        let hadamard = |s: CycloElem| [s.clone(), s.clone(), s.clone(), -s];
        Ok(match self {
            TwoLevelKind::X => [z.clone(), o.clone(), o, z],
            TwoLevelKind::H => hadamard(CycloElem::inv_sqrt2(degree)?),
            TwoLevelKind::Hp => hadamard(CycloElem::one_plus_i(degree).mul_pow2(-1)),
        })
    }

    pub fn det(self, degree: Degree) -> Result<CycloElem> {
        let [a, b, c, d] = self.block(degree)?;
        Ok(&a * &d - &b * &c)
    }
}

impl fmt::Display for TwoLevelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TwoLevelKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "X" => Ok(TwoLevelKind::X),
            "H" => Ok(TwoLevelKind::H),
            "Hp" => Ok(TwoLevelKind::Hp),
            _ => Err(format!("unknown two-level operator {s:?}")),
        }
    }
}

/// A one-level phase `zeta_order^power` at index `j`, or a two-level block
/// acting on indices `j < j2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LevelOp {
    OneLevel { order: u32, power: u32, j: usize },
    TwoLevel { kind: TwoLevelKind, j: usize, j2: usize },
}

impl LevelOp {
    pub fn phase(order: u32, power: i64, j: usize) -> Self {
        LevelOp::OneLevel {
            order,
            power: power.rem_euclid(order as i64) as u32,
            j,
        }
    }

    pub fn two(kind: TwoLevelKind, j: usize, j2: usize) -> Result<Self> {
        if j >= j2 {
            return Err(Error::Precondition(format!(
                "two-level indices must satisfy j < j', got {j}, {j2}"
            )));
        }
        Ok(LevelOp::TwoLevel { kind, j, j2 })
    }

    pub fn x(j: usize, j2: usize) -> Result<Self> {
        Self::two(TwoLevelKind::X, j, j2)
    }

    pub fn max_index(&self) -> usize {
        match *self {
            LevelOp::OneLevel { j, .. } => j,
            LevelOp::TwoLevel { j2, .. } => j2,
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, LevelOp::OneLevel { power: 0, .. })
    }

    /// Same operator with indices relabelled by `f`; `f` must be increasing.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> Self {
        match *self {
            LevelOp::OneLevel { order, power, j } => LevelOp::OneLevel {
                order,
                power,
                j: f(j),
            },
            LevelOp::TwoLevel { kind, j, j2 } => LevelOp::TwoLevel {
                kind,
                j: f(j),
                j2: f(j2),
            },
        }
    }

    /// Rewrites a phase over `zeta_target`, when `order | target`.
    pub fn with_phase_order(&self, target: u32) -> Option<Self> {
        match *self {
            LevelOp::OneLevel { order, power, j } => target.is_multiple_of(order).then(|| LevelOp::OneLevel {
                order: target,
                power: power * (target / order),
                j,
            }),
            op => Some(op),
        }
    }

    /// The inverse as a product of operators written left to right.
    ///
    /// `X` and `H` are involutions. `Hp^dagger = -i Hp`, which is `Hp`
    /// followed by the phase `-i` on both of its indices.
    pub fn inverse(&self) -> Vec<LevelOp> {
        match *self {
            LevelOp::OneLevel { order, power, j } => {
                vec![LevelOp::phase(order, -(power as i64), j)]
            }
            LevelOp::TwoLevel {
                kind: TwoLevelKind::Hp,
                j,
                j2,
            } => vec![*self, LevelOp::phase(4, 3, j), LevelOp::phase(4, 3, j2)],
            op => vec![op],
        }
    }

    fn check(&self, degree: Degree, dim: usize) -> Result<()> {
        if self.max_index() >= dim {
            return Err(Error::IndexOutOfRange {
                index: self.max_index(),
                dim,
            });
        }
        if let LevelOp::OneLevel { order, .. } = *self {
            if order == 0 || !degree.n().is_multiple_of(order) {
                return Err(Error::NotDivisible {
                    from: order,
                    to: degree.n(),
                });
            }
        }
        Ok(())
    }

    fn phase_value(order: u32, power: u32, degree: Degree) -> Result<CycloElem> {
        CycloElem::root_of_unity(degree, order, power as i64)
    }

    /// The full `dim x dim` matrix over `R_degree`.
    pub fn matrix(&self, degree: Degree, dim: usize) -> Result<RingMatrix> {
        self.check(degree, dim)?;
        let mut m = RingMatrix::identity_deg(degree, dim);
        match *self {
            LevelOp::OneLevel { order, power, j } => {
                m.set(j, j, Self::phase_value(order, power, degree)?);
            }
            LevelOp::TwoLevel { kind, j, j2 } => {
                let [a, b, c, d] = kind.block(degree)?;
                m.set(j, j, a);
                m.set(j, j2, b);
                m.set(j2, j, c);
                m.set(j2, j2, d);
            }
        }
        Ok(m)
    }

    pub fn det(&self, degree: Degree) -> Result<CycloElem> {
        match *self {
            LevelOp::OneLevel { order, power, .. } => Self::phase_value(order, power, degree),
            LevelOp::TwoLevel { kind, .. } => kind.det(degree),
        }
    }

    /// `v <- op * v`, touching only the affected entries.
    pub fn apply(&self, v: &mut [CycloElem]) -> Result<()> {
        let Some(degree) = v.first().map(CycloElem::degree) else {
            return Err(Error::ShapeMismatch("empty vector".into()));
        };
        self.check(degree, v.len())?;
        match *self {
            LevelOp::OneLevel { order, power, j } => {
                if power != 0 {
                    v[j] = &Self::phase_value(order, power, degree)? * &v[j];
                }
            }
            LevelOp::TwoLevel { kind, j, j2 } => {
                if kind == TwoLevelKind::X {
                    v.swap(j, j2);
                } else {
                    let [a, b, c, d] = kind.block(degree)?;
                    let (x, y) = (v[j].clone(), v[j2].clone());
                    v[j] = &a * &x + &b * &y;
                    v[j2] = &c * &x + &d * &y;
                }
            }
        }
        Ok(())
    }

    /// `m <- op * m` by row operations.
    pub fn apply_rows(&self, m: &mut RingMatrix) -> Result<()> {
        let degree = m.degree();
        self.check(degree, m.rows())?;
        let cols = m.cols();
        match *self {
            LevelOp::OneLevel { order, power, j } => {
                if power != 0 {
                    let c = Self::phase_value(order, power, degree)?;
                    for col in 0..cols {
                        let v = &c * m.get(j, col);
                        m.set(j, col, v);
                    }
                }
            }
            LevelOp::TwoLevel { kind, j, j2 } => {
                let [a, b, c, d] = kind.block(degree)?;
                for col in 0..cols {
                    let (x, y) = (m.get(j, col).clone(), m.get(j2, col).clone());
                    if kind == TwoLevelKind::X {
                        m.set(j, col, y);
                        m.set(j2, col, x);
                    } else {
                        m.set(j, col, &a * &x + &b * &y);
                        m.set(j2, col, &c * &x + &d * &y);
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for LevelOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelOp::OneLevel { order, power, j } => write!(f, "ONE {order} {j} {power}"),
            LevelOp::TwoLevel { kind, j, j2 } => write!(f, "TWO {kind} {j} {j2}"),
        }
    }
}

/// `one_level(c, j, dim)` for an arbitrary unit-modulus `c`.
pub fn one_level(c: &CycloElem, j: usize, dim: usize) -> Result<RingMatrix> {
    if !c.norm_sq().is_one() {
        return Err(Error::Precondition(format!("|{c}| is not 1")));
    }
    if j >= dim {
        return Err(Error::IndexOutOfRange { index: j, dim });
    }
    let mut m = RingMatrix::identity_deg(c.degree(), dim);
    m.set(j, j, c.clone());
    Ok(m)
}

pub fn two_level(kind: TwoLevelKind, j: usize, j2: usize, degree: Degree, dim: usize) -> Result<RingMatrix> {
    LevelOp::two(kind, j, j2)?.matrix(degree, dim)
}
