use std::collections::BTreeMap;
use std::fmt;

use crate::catalytic::{CatalyticEmbedding, EmbeddingDescriptor};
use crate::circuit::{Circuit, Instruction};
use crate::error::{Error, Result};
use crate::linalg::RingMatrix;
use crate::ring::{Degree, Family};

use super::r12::decompose_r12_traced;
use super::r8::{decompose_r8_traced, det_normalize_r16, normalizing_phase};

/// Plain-text summary of a synthesis run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SynthesisReport {
    pub degree: Degree,
    pub dim: usize,
    pub ancillas: usize,
    pub embeddings: Vec<EmbeddingDescriptor>,
    /// `l` with `det = zeta_16^l`, for the `2^k` pipeline.
    pub normalization: Option<u32>,
    pub counts: BTreeMap<String, usize>,
    pub lde_traces: Vec<Vec<u32>>,
    pub verified: bool,
}

impl fmt::Display for SynthesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree: {}", self.degree)?;
        writeln!(f, "dimension: {}", self.dim)?;
        writeln!(f, "ancillas: {}", self.ancillas)?;
        let emb: Vec<String> = self.embeddings.iter().map(ToString::to_string).collect();
        writeln!(f, "embeddings: {}", if emb.is_empty() { "none".into() } else { emb.join(" ") })?;
        if let Some(l) = self.normalization {
            writeln!(f, "det: zeta16^{l}")?;
        }
        let counts: Vec<String> = self.counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(f, "instructions: {}", counts.join(" "))?;
        let traces: Vec<String> = self
            .lde_traces
            .iter()
            .map(|t| {
                let t: Vec<String> = t.iter().map(ToString::to_string).collect();
                format!("[{}]", t.join(","))
            })
            .collect();
        writeln!(f, "lde trace: {}", traces.join(" "))?;
        write!(f, "verified: {}", if self.verified { "yes" } else { "no" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Synthesis {
    pub circuit: Circuit,
    pub report: SynthesisReport,
}

fn work_wires(u: &RingMatrix) -> Result<usize> {
    if !u.is_square() {
        return Err(Error::ShapeMismatch(format!("{}x{} matrix", u.rows(), u.cols())));
    }
    let dim = u.rows();
    if !dim.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(dim));
    }
    Ok(dim.trailing_zeros() as usize)
}

fn check_input(u: &RingMatrix, expected: Degree) -> Result<usize> {
    if u.degree() != expected {
        return Err(Error::DegreeMismatch {
            left: u.degree().n(),
            right: expected.n(),
        });
    }
    let m = work_wires(u)?;
    if !u.is_unitary() {
        return Err(Error::NotUnitary);
    }
    Ok(m)
}

/// Catalyst wire for each step of a lowering chain: the first step's
/// catalyst sits right after the work register.
fn prepare_chain(c: &mut Circuit, chain: &CatalyticEmbedding, m: usize) -> Result<()> {
    for (i, step) in chain.steps().iter().enumerate() {
        c.prepare_catalyst(step.source().n(), m + i)?;
        c.push(Instruction::Mark(*step))?;
    }
    Ok(())
}

fn release_chain(c: &mut Circuit, chain: &CatalyticEmbedding, m: usize) -> Result<()> {
    for (i, step) in chain.steps().iter().enumerate().rev() {
        c.release_catalyst(step.source().n(), m + i)?;
    }
    Ok(())
}

fn finish(circuit: Circuit, u: &RingMatrix, embeddings: Vec<EmbeddingDescriptor>, normalization: Option<u32>, lde_traces: Vec<Vec<u32>>) -> Synthesis {
    let report = SynthesisReport {
        degree: u.degree(),
        dim: u.rows(),
        ancillas: circuit.ancilla_count(),
        embeddings,
        normalization,
        counts: circuit.counts(),
        lde_traces,
        verified: false,
    };
    Synthesis { circuit, report }
}

/// Circuit for `U` over `R_{2^k}`, `k >= 4`, on `m + k - 3` wires.
///
/// The embeddings `phi_k, ..., phi_5` bring `U` down to `R_16`, one catalyst
/// wire each. There `U = P V` with `det V = 1` and `P` a phase on the last
/// index; `phi_4(V)` is decomposed over `R_8` and wrapped with a last
/// catalyst wire, which also serves as the ancilla on which `P` is
/// controlled.
pub fn synthesize_pow2(u: &RingMatrix, k: u32) -> Result<Synthesis> {
    if k < 4 {
        return Err(Error::UnsupportedDegree(1u32.checked_shl(k).unwrap_or(0)));
    }
    let degree = Degree::pow2(k)?;
    let m = check_input(u, degree)?;
    let d16 = Degree::new(16)?;
    let chain = CatalyticEmbedding::lowering(degree, d16)?;
    let u16 = chain.embed_matrix(u)?;
    let (l, v) = det_normalize_r16(&u16)?;
    let phi4 = EmbeddingDescriptor::phi(4)?;
    let image = phi4.embed_matrix(&v)?;
    if !image.det()?.is_one() {
        return Err(Error::Internal("det of phi_4(V) is not 1".into()));
    }
    let dec = decompose_r8_traced(&image)?;

    let width = m + (k as usize - 3);
    let mut c = Circuit::new(degree, m, k as usize - 3)?;
    prepare_chain(&mut c, &chain, m)?;
    c.prepare_catalyst(16, width - 1)?;
    c.push(Instruction::Mark(phi4))?;
    for op in dec.ops.applied() {
        c.push_level(*op)?;
    }
    c.release_catalyst(16, width - 1)?;
    if l != 0 {
        // P acts on the R_16 register with the last wire at e_0
        c.push_level(normalizing_phase(l, u16.rows()).remap(|i| 2 * i))?;
    }
    release_chain(&mut c, &chain, m)?;

    let mut embeddings = chain.steps().to_vec();
    embeddings.push(phi4);
    Ok(finish(c, u, embeddings, Some(l), dec.lde_traces))
}

/// Circuit for `U` over `R_{3 2^k}`, `k >= 3`, on `m + k - 1` wires: one
/// catalyst wire for each of `psi_k, ..., psi_3` and one ancilla for the
/// level operators of the `R_12` decomposition.
pub fn synthesize_3pow2(u: &RingMatrix, k: u32) -> Result<Synthesis> {
    if k < 3 {
        return Err(Error::UnsupportedDegree(3u32.checked_shl(k).unwrap_or(0)));
    }
    let degree = Degree::three_pow2(k)?;
    let m = check_input(u, degree)?;
    let chain = CatalyticEmbedding::lowering(degree, Degree::new(12)?)?;
    let u12 = chain.embed_matrix(u)?;
    let dec = decompose_r12_traced(&u12)?;

    let mut c = Circuit::new(degree, m, k as usize - 1)?;
    prepare_chain(&mut c, &chain, m)?;
    // the operator ancilla is the last wire, held at e_0
    for op in dec.ops.applied() {
        c.push_level(op.remap(|i| 2 * i))?;
    }
    release_chain(&mut c, &chain, m)?;
    Ok(finish(c, u, chain.steps().to_vec(), None, dec.lde_traces))
}

pub fn synth_pow2(u: &RingMatrix, k: u32) -> Result<Circuit> {
    Ok(synthesize_pow2(u, k)?.circuit)
}

pub fn synth_3pow2(u: &RingMatrix, k: u32) -> Result<Circuit> {
    Ok(synthesize_3pow2(u, k)?.circuit)
}

/// Picks the pipeline from the degree of `U` and re-verifies the circuit
/// by exact evaluation.
pub fn synthesize(u: &RingMatrix) -> Result<Synthesis> {
    let degree = u.degree();
    let k = degree.exponent();
    let mut s = match degree.family() {
        Family::Pow2 if k >= 4 => synthesize_pow2(u, k)?,
        Family::ThreePow2 if k >= 3 => synthesize_3pow2(u, k)?,
        _ => return Err(Error::UnsupportedDegree(degree.n())),
    };
    s.report.verified = s.circuit.verify(u)?.is_none();
    Ok(s)
}
