//! `CIRCUIT degree=<n> work=<m> extra=<a>` followed by one instruction per
//! line: `ONE <order> <j> <power>`, `TWO <X|H|Hp> <j> <j'>`,
//! `GATE <H|T<n>|Tdg<n>> <wire>` or `MARK <pow2|3pow2> <k>`.

use std::fmt;
use std::str::FromStr;

use super::{Circuit, Gate, Instruction};
use crate::catalytic::EmbeddingDescriptor;
use crate::error::{Error, Result};
use crate::linalg::{LevelOp, TwoLevelKind};
use crate::ring::{Degree, Family};

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instruction::Level(op) => write!(f, "{op}"),
            Instruction::Gate { gate, wire } => write!(f, "GATE {gate} {wire}"),
            Instruction::Mark(d) => {
                let fam = match d.family() {
                    Family::Pow2 => "pow2",
                    Family::ThreePow2 => "3pow2",
                };
                write!(f, "MARK {fam} {}", d.k())
            }
        }
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "CIRCUIT degree={} work={} extra={}",
            self.degree, self.work, self.extra
        )?;
        for ins in &self.instructions {
            writeln!(f, "{ins}")?;
        }
        Ok(())
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

struct LineParser<'a> {
    line: usize,
    toks: Vec<(usize, &'a str)>,
    end: usize,
}

impl<'a> LineParser<'a> {
    fn err(&self, col: usize, msg: impl Into<String>) -> Error {
        Error::parse(self.line, col, msg)
    }

    fn tok(&self, i: usize, what: &str) -> Result<(usize, &'a str)> {
        self.toks
            .get(i)
            .copied()
            .ok_or_else(|| self.err(self.end, format!("expected {what}")))
    }

    fn num<T: FromStr>(&self, i: usize, what: &str) -> Result<T> {
        let (col, t) = self.tok(i, what)?;
        t.parse()
            .map_err(|_| self.err(col, format!("expected {what}, found {t:?}")))
    }

    fn arity(&self, n: usize) -> Result<()> {
        match self.toks.get(n) {
            Some(&(col, t)) => Err(self.err(col, format!("unexpected token {t:?}"))),
            None => Ok(()),
        }
    }

    fn keyed<T: FromStr>(&self, i: usize, key: &str) -> Result<T> {
        let (col, t) = self.tok(i, &format!("{key}=<n>"))?;
        t.strip_prefix(key)
            .and_then(|r| r.strip_prefix('='))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| self.err(col, format!("expected {key}=<n>, found {t:?}")))
    }
}

fn parse_gate(s: &str) -> Option<Gate> {
    if s == "H" {
        return Some(Gate::H);
    }
    if let Some(n) = s.strip_prefix("Tdg") {
        return n.parse().ok().map(Gate::Tdg);
    }
    s.strip_prefix('T')?.parse().ok().map(Gate::T)
}

impl FromStr for Circuit {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut circuit: Option<Circuit> = None;
        for (idx, raw) in text.lines().enumerate() {
            let p = LineParser {
                line: idx + 1,
                toks: tokens(raw),
                end: raw.len() + 1,
            };
            let Some(&(col, head)) = p.toks.first() else {
                continue;
            };
            if head.starts_with('#') {
                continue;
            }
            let Some(c) = circuit.as_mut() else {
                if head != "CIRCUIT" {
                    return Err(p.err(col, "expected `CIRCUIT` header"));
                }
                let n: u32 = p.keyed(1, "degree")?;
                let degree = Degree::new(n).map_err(|e| p.err(p.toks[1].0, e.to_string()))?;
                let work: usize = p.keyed(2, "work")?;
                let extra: usize = p.keyed(3, "extra")?;
                p.arity(4)?;
                circuit = Some(Circuit::new(degree, work, extra).map_err(|e| p.err(col, e.to_string()))?);
                continue;
            };
            let ins = match head {
                "ONE" => {
                    let order: u32 = p.num(1, "phase order")?;
                    let j: usize = p.num(2, "index")?;
                    let power: u32 = p.num(3, "power")?;
                    p.arity(4)?;
                    if order == 0 || power >= order {
                        return Err(p.err(p.toks[3].0, "power must be below the order"));
                    }
                    Instruction::Level(LevelOp::OneLevel { order, power, j })
                }
                "TWO" => {
                    let (kcol, name) = p.tok(1, "operator name")?;
                    let kind: TwoLevelKind = name.parse().map_err(|e: String| p.err(kcol, e))?;
                    let j: usize = p.num(2, "index")?;
                    let j2: usize = p.num(3, "index")?;
                    p.arity(4)?;
                    Instruction::Level(
                        LevelOp::two(kind, j, j2).map_err(|e| p.err(p.toks[2].0, e.to_string()))?,
                    )
                }
                "GATE" => {
                    let (gcol, name) = p.tok(1, "gate name")?;
                    let gate = parse_gate(name)
                        .ok_or_else(|| p.err(gcol, format!("unknown gate {name:?}")))?;
                    let wire: usize = p.num(2, "wire")?;
                    p.arity(3)?;
                    Instruction::Gate { gate, wire }
                }
                "MARK" => {
                    let (fcol, fam) = p.tok(1, "embedding family")?;
                    let k: u32 = p.num(2, "k")?;
                    p.arity(3)?;
                    let desc = match fam {
                        "pow2" => EmbeddingDescriptor::phi(k),
                        "3pow2" => EmbeddingDescriptor::psi(k),
                        _ => return Err(p.err(fcol, format!("unknown embedding family {fam:?}"))),
                    }
                    .map_err(|e| p.err(p.toks[2].0, e.to_string()))?;
                    Instruction::Mark(desc)
                }
                _ => return Err(p.err(col, format!("unknown instruction {head:?}"))),
            };
            c.push(ins).map_err(|e| p.err(col, e.to_string()))?;
        }
        circuit.ok_or_else(|| Error::parse(1, 1, "missing `CIRCUIT` header"))
    }
}
