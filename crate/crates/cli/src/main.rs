use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cyclosynth::circuit::Circuit;
use cyclosynth::io::{matrix_from_json, matrix_to_json};
use cyclosynth::ring::residue::{check_residue_lemma, pretty, residue_table};
use cyclosynth::ring::{LdeBase, QuadResidue};
use cyclosynth::synthesis::{random_unitary, synthesize};
use cyclosynth::{Degree, Error, RingMatrix};

const USAGE: u8 = 1;
const PARSE: u8 = 2;
const PRECONDITION: u8 = 3;
const VERIFICATION: u8 = 4;

#[derive(Parser)]
#[command(name = "cyclosynth", version, about = "Exact synthesis of Clifford-cyclotomic circuits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a circuit for a unitary matrix file.
    Synthesize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a circuit against a matrix with every extra wire at e_0.
    Verify {
        #[arg(long, visible_alias = "in")]
        matrix: PathBuf,
        #[arg(long)]
        circuit: PathBuf,
    },
    /// Print the residue table of Z[zeta_n]/(2) and check its properties.
    Tables {
        #[arg(long)]
        degree: u32,
    },
    /// Write a random unitary, the product of `length` level operators.
    Random {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

type Outcome = Result<(), Failure>;

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn classify(e: Error) -> Failure {
    let code = match e {
        Error::Parse { .. } => PARSE,
        Error::Internal(_) => VERIFICATION,
        _ => PRECONDITION,
    };
    fail(code, e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(USAGE, format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| fail(USAGE, format!("cannot write {}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<RingMatrix, Failure> {
    matrix_from_json(&read(path)?).map_err(|e| match e {
        Error::UnsupportedDegree(_) => classify(e),
        e => fail(PARSE, format!("{}: {e}", path.display())),
    })
}

fn load_circuit(path: &Path) -> Result<Circuit, Failure> {
    read(path)?
        .parse()
        .map_err(|e: Error| fail(PARSE, format!("{}: {e}", path.display())))
}

fn cmd_synthesize(input: &Path, out: &Path) -> Outcome {
    let u = load_matrix(input)?;
    let s = synthesize(&u).map_err(classify)?;
    if !s.report.verified {
        return Err(fail(VERIFICATION, "synthesized circuit failed verification"));
    }
    write(out, &s.circuit.to_string())?;
    println!("{}", s.report);
    Ok(())
}

fn cmd_verify(matrix: &Path, circuit: &Path) -> Outcome {
    let u = load_matrix(matrix)?;
    let c = load_circuit(circuit)?;
    match c.verify(&u).map_err(classify)? {
        None => {
            println!("ok: circuit implements the matrix on {} basis inputs", u.rows());
            Ok(())
        }
        Some(i) => Err(fail(VERIFICATION, format!("mismatch on basis input {i}"))),
    }
}

fn norm_label(q: QuadResidue) -> String {
    q.to_string()
}

fn cmd_tables(n: u32) -> Outcome {
    if !matches!(n, 8 | 12) {
        return Err(fail(USAGE, format!("tables are available for degrees 8 and 12, not {n}")));
    }
    let degree = Degree::new(n).map_err(classify)?;
    let rows = residue_table(degree).map_err(classify)?;
    let base = if n == 12 { "1+i" } else { "√2" };
    println!("u mod {base} | u mod 2 | u†u mod 2");
    for r in &rows {
        println!("{} | {} | {}", pretty(&r.mod_base), pretty(&r.mod_two), norm_label(r.norm));
    }
    let check = check_residue_lemma(degree).map_err(classify)?;
    let status = |ok: bool| if ok { "holds" } else { "FAILS" };
    println!();
    println!("zero class is the multiples of {base}: {}", status(check.zero_iff_divisible));
    let classes: Vec<String> = check.nonzero_classes.iter().map(|q| q.to_string()).collect();
    println!(
        "two nonzero classes ({}): {}",
        classes.join(", "),
        status(check.two_nonzero_classes())
    );
    println!("equal classes differ by a power of zeta mod 2: {}", status(check.pairing_holds()));
    for (u, v) in check.pairing_failures.iter().take(4) {
        println!("  counterexample: {} vs {}", pretty(u), pretty(v));
    }
    if n == 8 {
        let lam = LdeBase::one_minus_zeta(degree).map_err(classify)?;
        let units: Vec<_> = rows.iter().filter(|r| !lam.divides(&r.mod_two).unwrap_or(true)).collect();
        let all = units.iter().all(|a| {
            units.iter().all(|b| {
                (0..8).any(|m| {
                    let w = &cyclosynth::CycloElem::zeta_pow(degree, m) * &b.mod_two;
                    lam.divides_pow(&(&a.mod_two - &w), 3).unwrap_or(false)
                })
            })
        });
        println!(
            "entries off 1-ζ8 differ by a power of zeta mod (1-ζ8)^3 (used for reduction): {}",
            status(all)
        );
    }
    if check.all_hold() {
        Ok(())
    } else {
        Err(fail(VERIFICATION, format!("residue properties fail for degree {n}")))
    }
}

fn cmd_random(n: u32, dim: usize, length: usize, seed: u64, out: &Path) -> Outcome {
    let degree = Degree::new(n).map_err(|e| fail(USAGE, e.to_string()))?;
    if dim < 2 || !dim.is_power_of_two() {
        return Err(fail(USAGE, format!("dimension {dim} is not a power of 2 (at least 2)")));
    }
    let u = random_unitary(degree, dim, length, seed).map_err(|e| fail(USAGE, e.to_string()))?;
    write(out, &matrix_to_json(&u).map_err(classify)?)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Synthesize { input, out } => cmd_synthesize(&input, &out),
        Command::Verify { matrix, circuit } => cmd_verify(&matrix, &circuit),
        Command::Tables { degree } => cmd_tables(degree),
        Command::Random {
            degree,
            dim,
            length,
            seed,
            out,
        } => cmd_random(degree, dim, length, seed, &out),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
