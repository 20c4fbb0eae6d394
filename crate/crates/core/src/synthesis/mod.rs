//! Decomposition of exact unitaries into level operators, and the
//! catalytic pipelines that lower the degree first.

mod pipeline;
mod random;
mod r12;
mod r8;
mod reduce;
mod sequence;

pub use pipeline::{
    synth_3pow2, synth_pow2, synthesize, synthesize_3pow2, synthesize_pow2, Synthesis,
    SynthesisReport,
};
pub use random::{mixer_for, random_ops, random_unitary};
pub use r12::{
    base_case_r12, column_reduce_r12, decompose_r12, decompose_r12_traced, lde_step_r12,
    pair_reduce_r12,
};
pub use r8::{decompose_r8, decompose_r8_traced, det_normalize_r16, fix_determinant, normalizing_phase};
pub use reduce::{ColumnReduction, Decomposition};
pub use sequence::OpSequence;
