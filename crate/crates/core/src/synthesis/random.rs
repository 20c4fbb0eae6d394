use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{LevelOp, RingMatrix, TwoLevelKind};
use crate::ring::{Degree, Family};

/// The mixing two-level operator available at a degree: `H` when `8 | n`
/// in the `2^k` tower, `Hp` otherwise.
pub fn mixer_for(degree: Degree) -> TwoLevelKind {
    match degree.family() {
        Family::Pow2 if degree.n() >= 8 => TwoLevelKind::H,
        _ => TwoLevelKind::Hp,
    }
}

/// `length` random level operators valid at `degree`, in the order they act.
pub fn random_ops(degree: Degree, dim: usize, length: usize, seed: u64) -> Result<Vec<LevelOp>> {
    if dim < 2 {
        return Err(Error::Precondition(format!("dimension must be at least 2, got {dim}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = degree.n();
    let mixer = mixer_for(degree);
    (0..length)
        .map(|_| {
            let kind = rng.gen_range(0..3);
            if kind == 0 {
                let j = rng.gen_range(0..dim);
                return Ok(LevelOp::phase(n, rng.gen_range(1..n) as i64, j));
            }
            let a = rng.gen_range(0..dim);
            let mut b = rng.gen_range(0..dim - 1);
            if b >= a {
                b += 1;
            }
            let name = if kind == 1 { TwoLevelKind::X } else { mixer };
            LevelOp::two(name, a.min(b), a.max(b))
        })
        .collect()
}

/// Deterministic random unitary: the product of `length` random level
/// operators at `degree`.
pub fn random_unitary(degree: Degree, dim: usize, length: usize, seed: u64) -> Result<RingMatrix> {
    let mut m = RingMatrix::identity_deg(degree, dim);
    for op in random_ops(degree, dim, length, seed)? {
        op.apply_rows(&mut m)?;
    }
    Ok(m)
}
