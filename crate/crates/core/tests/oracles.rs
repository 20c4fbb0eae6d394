use cyclosynth::circuit::Circuit;
use cyclosynth::io::{matrix_from_json, matrix_to_json};
use cyclosynth::linalg::{two_level, LevelOp, RingMatrix, TwoLevelKind};
use cyclosynth::ring::unit_norm1_exponent;
use cyclosynth::synthesis::{decompose_r12, random_unitary, synthesize};
use cyclosynth::{CycloElem, Degree, Error};

fn deg(n: u32) -> Degree {
    Degree::new(n).unwrap()
}

/// Sum over all permutations with their signs.
fn leibniz(m: &RingMatrix) -> CycloElem {
    fn perms(n: usize) -> Vec<(Vec<usize>, bool)> {
        if n == 0 {
            return vec![(vec![], true)];
        }
        let mut out = Vec::new();
        for (p, even) in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                // inserting at pos moves n-1 past (n-1-pos) elements
                out.push((q, even == (n - 1 - pos).is_multiple_of(2)));
            }
        }
        out
    }
    let d = m.degree();
    perms(m.rows()).into_iter().fold(CycloElem::zero(d), |acc, (p, even)| {
        let term = p.iter().enumerate().fold(CycloElem::one(d), |t, (i, &j)| &t * m.get(i, j));
        if even {
            &acc + &term
        } else {
            &acc - &term
        }
    })
}

#[test]
fn determinant_matches_leibniz() {
    for (n, dim, seed) in [(8, 3, 1), (12, 4, 2), (16, 5, 3), (24, 4, 4), (12, 6, 5)] {
        let u = random_unitary(deg(n), dim, 25, seed).unwrap();
        let skew = &u + &RingMatrix::identity_deg(deg(n), dim);
        assert_eq!(u.det().unwrap(), leibniz(&u), "degree {n} dim {dim}");
        assert_eq!(skew.det().unwrap(), leibniz(&skew), "degree {n} dim {dim}");
    }
}

#[test]
fn two_level_determinants() {
    let d = deg(24);
    let x = two_level(TwoLevelKind::X, 0, 2, d, 3).unwrap();
    assert_eq!(x.det().unwrap(), CycloElem::from_int(d, -1));
    let h = two_level(TwoLevelKind::H, 1, 2, deg(16), 3).unwrap();
    assert_eq!(h.det().unwrap(), CycloElem::from_int(deg(16), -1));
    // H' = zeta_8 H has determinant zeta_8^2 (-1) = zeta_4^3
    let hp = two_level(TwoLevelKind::Hp, 0, 1, deg(12), 2).unwrap();
    assert_eq!(hp.det().unwrap(), CycloElem::zeta_pow(deg(12), 9));
    assert_eq!(unit_norm1_exponent(&h.det().unwrap()).unwrap(), 8);
}

const IDENTITY_12: &str = r#"{
  "degree": 12,
  "dim": 2,
  "entries": [
    "deg=12; coeffs=1,0,0,0",
    "deg=12; coeffs=0,0,0,0",
    "deg=12; coeffs=0,0,0,0",
    "deg=12; coeffs=1,0,0,0"
  ]
}
"#;

#[test]
fn matrix_file_corpus() {
    let id = matrix_from_json(IDENTITY_12).unwrap();
    assert_eq!(id, RingMatrix::identity_deg(deg(12), 2));
    assert_eq!(matrix_to_json(&id).unwrap(), IDENTITY_12);

    let half = r#"{"degree":8,"dim":1,"entries":["deg=8; coeffs=1/2^1,0,-3/2^2,0"]}"#;
    let m = matrix_from_json(half).unwrap();
    assert_eq!(m.get(0, 0).to_string(), "deg=8; coeffs=1/2^1,0,-3/2^2,0");

    let unknown = r#"{"degree":8,"dim":1,"entries":["deg=8; coeffs=1,0,0,0"],"extra":1}"#;
    assert!(matches!(matrix_from_json(unknown), Err(Error::Parse { line: 1, .. })));
    let short = r#"{"degree":8,"dim":2,"entries":["deg=8; coeffs=1,0,0,0"]}"#;
    assert!(matches!(matrix_from_json(short), Err(Error::ShapeMismatch(_))));
    let wrong = r#"{"degree":8,"dim":1,"entries":["deg=16; coeffs=1,0,0,0,0,0,0,0"]}"#;
    assert!(matches!(matrix_from_json(wrong), Err(Error::DegreeMismatch { .. })));
    let bad = "{\"degree\":8,\"dim\":1,\n\"entries\":[\"deg=8; coeffs=1,0,q,0\"]}";
    assert!(matches!(matrix_from_json(bad), Err(Error::Parse { line: 2, .. })));
    let unsupported = r#"{"degree":10,"dim":1,"entries":["deg=10; coeffs=1"]}"#;
    assert_eq!(matrix_from_json(unsupported), Err(Error::UnsupportedDegree(10)));
}

#[test]
fn circuit_text_corpus() {
    let text = "\
# a hand-written circuit
CIRCUIT degree=24 work=1 extra=1

GATE H 1
GATE T24 1
MARK 3pow2 3
ONE 4 2 3
TWO Hp 0 2
GATE Tdg24 1
GATE H 1
";
    let c: Circuit = text.parse().unwrap();
    assert_eq!(c.width(), 2);
    assert_eq!(c.instructions().len(), 7);
    assert_eq!(c.to_string(), text.lines().filter(|l| !l.is_empty() && !l.starts_with('#')).map(|l| format!("{l}\n")).collect::<String>());

    let cases = [
        ("CIRCUIT degree=24 work=1\n", 1, 25),
        ("CIRCUIT degree=24 work=1 extra=1\nONE 4 9 1\n", 2, 1),
        ("CIRCUIT degree=24 work=1 extra=1\nTWO Q 0 1\n", 2, 5),
        ("CIRCUIT degree=24 work=1 extra=1\nTWO X 1 0\n", 2, 7),
        ("CIRCUIT degree=24 work=1 extra=1\n\n  GATE Z 0\n", 3, 8),
        ("CIRCUIT degree=24 work=1 extra=1\nMARK odd 3\n", 2, 6),
    ];
    for (src, line, column) in cases {
        match src.parse::<Circuit>() {
            Err(Error::Parse { line: l, column: c, .. }) => assert_eq!((l, c), (line, column), "{src:?}"),
            other => panic!("{src:?} gave {other:?}"),
        }
    }
}

#[test]
fn r12_worked_examples() {
    let d = deg(12);
    let hp = two_level(TwoLevelKind::Hp, 0, 1, d, 2).unwrap();
    let mut u = hp.clone();
    LevelOp::phase(12, 5, 1).apply_rows(&mut u).unwrap();
    LevelOp::x(0, 1).unwrap().apply_rows(&mut u).unwrap();
    let seq = decompose_r12(&u).unwrap();
    assert_eq!(seq.product().unwrap(), u);
    assert!(seq.uses_only(12, &[TwoLevelKind::X, TwoLevelKind::Hp]));
}

#[test]
fn pipeline_at_degree_64() {
    let u = random_unitary(deg(64), 2, 10, 64).unwrap();
    let s = synthesize(&u).unwrap();
    assert!(s.report.verified);
    assert_eq!(s.circuit.ancilla_count(), 3);
}
