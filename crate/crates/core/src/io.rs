//! JSON matrix files: `{"degree": n, "dim": d, "entries": [literal, ...]}`
//! with entries in row-major order, each an element literal
//! `deg=<n>; coeffs=<c0>,<c1>,...`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::RingMatrix;
use crate::ring::{CycloElem, Degree};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    degree: u32,
    dim: usize,
    entries: Vec<String>,
}

pub fn matrix_to_json(m: &RingMatrix) -> Result<String> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(format!("{}x{} matrix", m.rows(), m.cols())));
    }
    let file = MatrixFile {
        degree: m.degree().n(),
        dim: m.rows(),
        entries: m.entries().iter().map(ToString::to_string).collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).map_err(|e| Error::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn matrix_from_json(text: &str) -> Result<RingMatrix> {
    let file: MatrixFile = serde_json::from_str(text)
        .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    let degree = Degree::new(file.degree)?;
    if file.dim == 0 || file.entries.len() != file.dim * file.dim {
        return Err(Error::ShapeMismatch(format!(
            "dim {} needs {} entries, got {}",
            file.dim,
            file.dim * file.dim,
            file.entries.len()
        )));
    }
    let entries = file
        .entries
        .iter()
        .enumerate()
        .map(|(i, s)| {
            s.parse::<CycloElem>().map_err(|e| match e {
                Error::Parse { message, .. } => {
                    let (line, column) = locate(text, s);
                    Error::parse(line, column, format!("entry {i}: {message}"))
                }
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    RingMatrix::with_degree(degree, file.dim, file.dim, entries)
}

/// 1-based line and column of the first occurrence of the literal `s`.
fn locate(text: &str, s: &str) -> (usize, usize) {
    let Some(pos) = text.find(&format!("\"{s}\"")) else {
        return (1, 1);
    };
    let before = &text[..pos];
    let line = before.matches('\n').count() + 1;
    let column = pos - before.rfind('\n').map_or(0, |i| i + 1) + 2;
    (line, column)
}
