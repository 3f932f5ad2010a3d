//! End-to-end acceptance checks, one test per criterion.
//!
//! Every test prints a single `criterion N ... PASS|FAIL` line with the
//! tolerance used (all checks here are exact) and then asserts. Expected
//! values come from transcribed reference tables or from oracles written
//! independently of the library.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::Path;
use std::process::Command;

use covertower::abgroup::{cokernel, ext, hom, smith_normal_form, tensor, tor};
use covertower::cohomology::{
    betti_bspin, bso_homology, bspin_homology, cohomology, h2_bso_indefinite, product_cohomology,
};
use covertower::homotopy::pi;
use covertower::lift::{evaluate_lift, evaluate_twisted, parse_profile};
use covertower::tower::{build_tower, green_schwarz_spec};
use covertower::{
    ClassValue, CohomologyProfile, FgAbGroup, GroupDescriptor, HomotopyAnswer, IntegerMatrix, LiftVerdict,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn report(criterion: u32, title: &str, tolerance: &str, checked: usize, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    let mut text = format!(
        "criterion {criterion} ({title}): {status} [{} of {checked} checks failed, tolerance: {tolerance}]\n",
        failures.len()
    );
    for f in failures.iter().take(20) {
        text += &format!("    {f}\n");
    }
    // Written to the raw handle so the line shows up for passing tests too.
    std::io::stderr().write_all(text.as_bytes()).unwrap();
    assert!(failures.is_empty(), "criterion {criterion} failed: {failures:?}");
}

fn g(s: &str) -> FgAbGroup {
    s.parse().unwrap()
}

fn d(s: &str) -> GroupDescriptor {
    s.parse().unwrap()
}

fn known(answer: HomotopyAnswer) -> Option<FgAbGroup> {
    answer.known().cloned()
}

// Reference table of πᵢ(O(n)), rows i = 0..7, columns n = 1..9. Blank cells
// lie in the stable range and take the row's boxed value (second column).
const O_GOLDEN: [(&str, [&str; 9]); 8] = [
    ("Z/2", ["Z/2", "Z/2", "Z/2", "Z/2", "Z/2", "Z/2", "Z/2", "Z/2", "Z/2"]),
    ("Z/2", ["0", "Z", "Z/2", "", "", "", "", "", ""]),
    ("0", ["0", "0", "0", "0", "", "", "", "", ""]),
    ("Z", ["0", "0", "Z", "Z x Z", "Z", "", "", "", ""]),
    ("0", ["0", "0", "Z/2", "Z/2 x Z/2", "Z/2", "0", "", "", ""]),
    ("0", ["0", "0", "Z/2", "Z/2 x Z/2", "Z/2", "Z", "0", "", ""]),
    ("0", ["0", "0", "Z/12", "Z/12 x Z/12", "0", "0", "0", "0", ""]),
    ("Z", ["0", "0", "Z/2", "Z/2 x Z/2", "Z", "Z", "Z", "Z x Z", "Z"]),
];

// πᵢ(U(n)), rows i = 1..7, columns n = 1..6.
const U_GOLDEN: [[&str; 6]; 7] = [
    ["Z", "Z", "Z", "Z", "Z", "Z"],
    ["0", "0", "0", "0", "0", "0"],
    ["0", "Z", "Z", "Z", "Z", "Z"],
    ["0", "Z/2", "0", "0", "0", "0"],
    ["0", "Z/2", "Z", "Z", "Z", "Z"],
    ["0", "Z/12", "Z/6", "0", "0", "0"],
    ["0", "Z/2", "0", "Z", "Z", "Z"],
];

#[test]
fn criterion_1_homotopy_golden_table() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (i, (boxed, row)) in O_GOLDEN.iter().enumerate() {
        for (col, cell) in row.iter().enumerate() {
            let n = col + 1;
            let expected = g(if cell.is_empty() { boxed } else { cell });
            let got = known(pi(&d(&format!("O({n})")), i as u32).unwrap());
            checked += 1;
            if got.as_ref() != Some(&expected) {
                failures.push(format!("pi_{i}(O({n})): expected {expected}, got {got:?}"));
            }
        }
    }
    for (r, row) in U_GOLDEN.iter().enumerate() {
        let i = r + 1;
        for (col, cell) in row.iter().enumerate() {
            let n = col + 1;
            let got = known(pi(&d(&format!("U({n})")), i as u32).unwrap());
            checked += 1;
            if got.as_ref() != Some(&g(cell)) {
                failures.push(format!("pi_{i}(U({n})): expected {cell}, got {got:?}"));
            }
        }
    }
    for (i, expected) in [(6, "0"), (7, "Z")] {
        let got = known(pi(&d("SO(7)"), i).unwrap());
        checked += 1;
        if got != Some(g(expected)) {
            failures.push(format!("pi_{i}(SO(7)): expected {expected}, got {got:?}"));
        }
    }
    report(
        1,
        "homotopy golden table",
        "exact equality of canonical forms",
        checked,
        &failures,
    );
}

/// The six cases of `π₁(Spin(p,q))` for `p ≥ q`, as listed.
fn spin_pi1_cases(p: u32, q: u32) -> &'static str {
    match (p, q) {
        (1, 1) | (1, 0) => "0",
        (p, 0 | 1) if p > 2 => "0",
        (2, 0) | (2, 1) => "Z",
        (2, 2) => "Z x Z",
        (p, 2) if p > 2 => "Z",
        (p, q) if p > 2 && q > 2 => "Z/2",
        _ => unreachable!("({p},{q}) is not covered by the case list"),
    }
}

#[test]
fn criterion_2_spin_pi1_case_matrix() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for p in 1..=6u32 {
        for q in 0..=p {
            let expected = g(spin_pi1_cases(p, q));
            let forward = known(pi(&d(&format!("Spin({p},{q})")), 1).unwrap());
            let backward = known(pi(&d(&format!("Spin({q},{p})")), 1).unwrap());
            checked += 2;
            if forward.as_ref() != Some(&expected) {
                failures.push(format!("Spin({p},{q}): expected {expected}, got {forward:?}"));
            }
            if backward != forward {
                failures.push(format!("Spin({q},{p}) differs from Spin({p},{q}): {backward:?}"));
            }
        }
    }
    report(2, "pi_1(Spin(p,q)) case matrix", "exact", checked, &failures);
}

/// Multiplication by `m` on `ℤ/n`, enumerated: (kernel size, cokernel size).
fn multiplication_by(m: u64, n: u64) -> (u64, u64) {
    let kernel = (0..n).filter(|x| (m * x).is_multiple_of(n)).count() as u64;
    let image: BTreeSet<u64> = (0..n).map(|x| (m * x) % n).collect();
    (kernel, n / image.len() as u64)
}

#[test]
fn criterion_3_functor_oracle() {
    // From 0 → ℤ →m ℤ → ℤ/m → 0 applied to A = ℤ/n:
    //   ℤ/m ⊗ A = coker(m),  Tor(ℤ/m, A) = ker(m),
    //   Hom(ℤ/m, A) = ker(m), Ext(ℤ/m, A) = coker(m).
    // Subquotients of a cyclic group are cyclic, so the order fixes the group.
    let cyclic = |k: u64| FgAbGroup::cyclic(k);
    let mut failures = Vec::new();
    let mut checked = 0;
    for m in 1..=12u64 {
        for n in 1..=12u64 {
            let (a, b) = (cyclic(m), cyclic(n));
            let (ker, coker) = multiplication_by(m, n);
            for (name, got, want) in [
                ("tensor", tensor(&a, &b), cyclic(coker)),
                ("tor", tor(&a, &b), cyclic(ker)),
                ("hom", hom(&a, &b), cyclic(ker)),
                ("ext", ext(&a, &b), cyclic(coker)),
            ] {
                checked += 1;
                if got != want {
                    failures.push(format!("{name}(Z/{m}, Z/{n}): expected {want}, got {got}"));
                }
            }
        }
    }
    report(3, "abelian-group functor oracle", "exact", checked, &failures);
}

type Dense = Vec<Vec<BigInt>>;

fn dense(m: &IntegerMatrix) -> Dense {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn product(a: &Dense, b: &Dense, inner: usize) -> Dense {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Cofactor expansion along the first row.
fn det(m: &Dense) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Dense = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

#[test]
fn criterion_4_snf_properties() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut failures = Vec::new();
    let mut checked = 0;
    for trial in 0..1000 {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        let m = IntegerMatrix::from_rows(&rows).unwrap();
        let snf = smith_normal_form(&m);
        let (u, v, dd) = (dense(&snf.left), dense(&snf.right), dense(&snf.diagonal));
        checked += 1;
        let mut problems = Vec::new();
        if product(&product(&u, &dense(&m), r), &v, c) != dd {
            problems.push("U*M*V != D");
        }
        if !det(&u).abs().is_one() || !det(&v).abs().is_one() {
            problems.push("U or V not unimodular");
        }
        let off_diagonal = (0..r).any(|i| (0..c).any(|j| i != j && !dd[i][j].is_zero()));
        let diag: Vec<BigInt> = (0..r.min(c)).map(|i| dd[i][i].clone()).collect();
        let chain_ok = diag.iter().all(|x| !x.is_negative())
            && diag.windows(2).all(|w| {
                if w[0].is_zero() {
                    w[1].is_zero()
                } else {
                    w[1].is_multiple_of(&w[0])
                }
            });
        if off_diagonal || !chain_ok {
            problems.push("D not a divisibility-chain diagonal");
        }
        if r == c {
            let determinant = det(&dense(&m));
            if !determinant.is_zero() && cokernel(&m).order() != Some(determinant.abs()) {
                problems.push("cokernel order != |det|");
            }
        }
        if !problems.is_empty() {
            failures.push(format!("trial {trial} {rows:?}: {}", problems.join(", ")));
        }
    }
    report(4, "Smith normal form properties", "exact", checked, &failures);
}

#[test]
fn criterion_5_kunneth_uct_pipeline() {
    let z = FgAbGroup::integers();
    let mut failures = Vec::new();
    let mut checked = 0;
    for p in 2..=8 {
        for q in 2..=8 {
            let h4 = product_cohomology(&bspin_homology(p).unwrap(), &bspin_homology(q).unwrap(), 4, &z)
                .unwrap()
                .total();
            checked += 1;
            if h4 != g("Z x Z") {
                failures.push(format!("H^4(BSpin({p}) x BSpin({q})): expected Z x Z, got {h4}"));
            }
        }
    }
    for q in 2..=8 {
        let parts = product_cohomology(&bspin_homology(1).unwrap(), &bspin_homology(q).unwrap(), 4, &z).unwrap();
        checked += 1;
        if parts.hom != z {
            failures.push(format!(
                "Hom part of H^4(BSpin(1) x BSpin({q})): expected Z, got {}",
                parts.hom
            ));
        }
    }
    for p in 2..=8u32 {
        for q in 2..=8u32 {
            let got = h2_bso_indefinite(p, q).unwrap();
            let split = cohomology(&bso_homology(p).unwrap(), 2, &z)
                .unwrap()
                .total()
                .direct_sum(&cohomology(&bso_homology(q).unwrap(), 2, &z).unwrap().total());
            // One ℤ for each rank-2 factor, nothing otherwise.
            let expected = FgAbGroup::free([p, q].iter().filter(|&&n| n == 2).count());
            checked += 1;
            if got != expected || got != split {
                failures.push(format!(
                    "H^2(BSO({p},{q})): expected {expected}, got {got} (split {split})"
                ));
            }
        }
    }
    report(5, "Kunneth/UCT pipeline", "exact", checked, &failures);
}

/// Weights of `Q_n(t)` written out from the product formula.
fn weights(n: u32) -> Vec<u32> {
    let m = n / 2;
    if n.is_multiple_of(2) {
        let mut w: Vec<u32> = (1..m).map(|j| 4 * j).collect();
        w.push(n);
        w
    } else {
        (1..=m).map(|j| 4 * j).collect()
    }
}

/// Number of ways to write `k` as a nonnegative combination of `weights`.
fn count_partitions(weights: &[u32], k: u32) -> u64 {
    match weights.split_first() {
        None => u64::from(k == 0),
        Some((&w, rest)) => (0..=k / w).map(|a| count_partitions(rest, k - a * w)).sum(),
    }
}

#[test]
fn criterion_6_betti_series() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 3..=12 {
        let q = betti_bspin(n, 4).unwrap();
        checked += 1;
        if q != 1u32.into() {
            failures.push(format!("q_{{{n},4}}: expected 1, got {q}"));
        }
    }
    for n in 3..=9 {
        for k in 0..=24u32 {
            let want = count_partitions(&weights(n), k);
            let got = betti_bspin(n, k as usize).unwrap();
            checked += 1;
            if got != want.into() {
                failures.push(format!("q_{{{n},{k}}}: oracle {want}, got {got}"));
            }
        }
    }
    report(6, "Betti series", "exact", checked, &failures);
}

/// (stage index, killed degree, class labels, coefficient)
type StageSpec = (usize, u32, &'static [&'static str], &'static str);

fn tower_cases() -> Vec<(&'static str, Vec<StageSpec>)> {
    vec![
        (
            "O(1,5)",
            vec![
                (0, 0, &["w1", "w1"], "Z/2 x Z/2"),
                (1, 1, &["w2"], "Z/2"),
                (2, 3, &["half_p1"], "Z"),
            ],
        ),
        (
            "O(1,1)",
            vec![(0, 0, &["w1", "w1"], "Z/2 x Z/2"), (1, 1, &[], "0"), (2, 3, &[], "0")],
        ),
        (
            "O(2,2)",
            vec![
                (0, 0, &["w1", "w1"], "Z/2 x Z/2"),
                (1, 1, &["sqrt_p1", "sqrt_p1"], "Z x Z"),
                (2, 3, &[], "0"),
            ],
        ),
        (
            "O(2,3)",
            vec![(1, 1, &["sqrt_p1", "w2"], "Z x Z/2"), (2, 3, &["half_p1"], "Z")],
        ),
        (
            "O(2,7)",
            vec![(1, 1, &["sqrt_p1", "w2"], "Z x Z/2"), (2, 3, &["half_p1"], "Z")],
        ),
        (
            "O(3,3)",
            vec![
                (0, 0, &["w1", "w1"], "Z/2 x Z/2"),
                (1, 1, &["w2", "w2"], "Z/2 x Z/2"),
                (2, 3, &["half_p1", "half_p1"], "Z x Z"),
            ],
        ),
        (
            "O(4,5)",
            vec![
                (1, 1, &["w2", "w2"], "Z/2 x Z/2"),
                (2, 3, &["half_p1#1", "half_p1#2", "half_p1"], "Z x Z x Z"),
            ],
        ),
        (
            "O(4,8)",
            vec![(2, 3, &["half_p1#1", "half_p1#2", "half_p1"], "Z x Z x Z")],
        ),
        (
            "O(4,4)",
            vec![(
                2,
                3,
                &["half_p1#1", "half_p1#2", "half_p1#1", "half_p1#2"],
                "Z x Z x Z x Z",
            )],
        ),
        (
            "O(5,5)",
            vec![
                (1, 1, &["w2", "w2"], "Z/2 x Z/2"),
                (2, 3, &["half_p1", "half_p1"], "Z x Z"),
            ],
        ),
        ("O(6,9)", vec![(2, 3, &["half_p1", "half_p1"], "Z x Z")]),
        ("U(1,4)", vec![(0, 1, &["c1", "c1"], "Z x Z"), (1, 3, &["c2"], "Z")]),
        ("U(3,3)", vec![(1, 3, &["c2", "c2"], "Z x Z")]),
        ("Sp(1,1)", vec![(0, 3, &["p1H", "p1H"], "Z x Z")]),
    ]
}

#[test]
fn criterion_7_tower_case_matrix() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (desc, stages) in tower_cases() {
        let tower = build_tower(&d(desc)).unwrap();
        for (index, killed, labels, coeff) in stages {
            let stage = &tower.stages()[index];
            let got_labels: Vec<String> = stage.obstructions.iter().map(|c| c.label()).collect();
            checked += 1;
            let degrees_ok = stage.obstructions.iter().all(|c| c.degree() == killed + 1);
            if stage.killed_pi != killed || got_labels != labels || stage.coefficient != g(coeff) || !degrees_ok {
                failures.push(format!(
                    "{desc} stage {index}: expected kill pi_{killed} {labels:?} in {coeff}, got pi_{} {got_labels:?} in {}",
                    stage.killed_pi, stage.coefficient
                ));
            }
        }
    }
    report(7, "tower case matrix", "exact", checked, &failures);
}

fn gs_profile(half_p1: &str, c2: &str) -> CohomologyProfile {
    parse_profile(&format!(
        "space X\nclass half_p1.1 degree 4 coeff Z value {half_p1}\nclass c2.2 degree 4 coeff Z value {c2}\n"
    ))
    .unwrap()
}

#[test]
fn criterion_8_lift_verdicts() {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut expect = |what: &str, got: LiftVerdict, want: LiftVerdict| {
        checked += 1;
        if got != want {
            failures.push(format!("{what}: expected {want}, got {got}"));
        }
    };
    let tower = build_tower(&d("O(3,3)")).unwrap();
    let top = tower.stage_index("String").unwrap();
    let zeros = CohomologyProfile::uniform("X", &tower, |_| ClassValue::Zero);
    expect(
        "all-zero O(3,3)",
        evaluate_lift(&zeros, &tower, top).unwrap(),
        LiftVerdict::Lifts,
    );

    let w2 = CohomologyProfile::uniform("X", &tower, |c| {
        if c.id() == "w2.1" {
            ClassValue::Nonzero
        } else {
            ClassValue::Zero
        }
    });
    expect(
        "nonzero w2.1",
        evaluate_lift(&w2, &tower, top).unwrap(),
        LiftVerdict::Obstructed {
            stage: 1,
            blockers: vec!["w2.1".into()],
            difference: None,
        },
    );

    let partial = parse_profile(
        "space X\n\
         class w1.1 degree 1 coeff Z/2 value zero\n\
         class w1.2 degree 1 coeff Z/2 value zero\n\
         class w2.2 degree 2 coeff Z/2 value zero\n",
    )
    .unwrap();
    expect(
        "missing w2.1",
        evaluate_lift(&partial, &tower, top).unwrap(),
        LiftVerdict::Undetermined {
            stage: 1,
            ids: vec!["w2.1".into()],
        },
    );

    let gs = green_schwarz_spec();
    for a in -6..=6i64 {
        for b in -6..=6i64 {
            let verdict = evaluate_twisted(&gs_profile(&format!("({a})"), &format!("({b})")), &gs).unwrap();
            let want = if a == b {
                LiftVerdict::Lifts
            } else {
                let difference = covertower::GroupElement::from_i64(FgAbGroup::integers(), &[a - b]).unwrap();
                LiftVerdict::Obstructed {
                    stage: 0,
                    blockers: vec!["half_p1.1".into(), "c2.2".into()],
                    difference: Some(difference),
                }
            };
            expect(&format!("Green-Schwarz ({a}) vs ({b})"), verdict, want);
        }
    }
    let undetermined = evaluate_twisted(&gs_profile("zero", "nonzero"), &gs).unwrap();
    checked += 1;
    if !matches!(undetermined, LiftVerdict::Undetermined { .. }) {
        failures.push(format!(
            "Green-Schwarz zero vs nonzero: expected undetermined, got {undetermined}"
        ));
    }
    report(8, "lift engine verdicts", "exact", checked, &failures);
}

struct Run {
    code: i32,
    stdout: Vec<u8>,
    stderr: Vec<u8>,
}

fn run_binary(args: &[String]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_covertower"))
        .args(args)
        .env_clear()
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: out.stdout,
        stderr: out.stderr,
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn criterion_9_cli_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let zero = write(
        dir.path(),
        "zero.prof",
        "space M\n\
         class w1.1 degree 1 coeff Z/2 value zero\n\
         class w1.2 degree 1 coeff Z/2 value zero\n\
         class w2.1 degree 2 coeff Z/2 value zero\n\
         class w2.2 degree 2 coeff Z/2 value zero\n\
         class half_p1.1 degree 4 coeff Z value zero\n\
         class half_p1.2 degree 4 coeff Z value zero\n",
    );
    let blocked = write(
        dir.path(),
        "blocked.prof",
        "space M\n\
         class w1.1 degree 1 coeff Z/2 value zero\n\
         class w1.2 degree 1 coeff Z/2 value zero\n\
         class w2.1 degree 2 coeff Z/2 value nonzero\n\
         class w2.2 degree 2 coeff Z/2 value (0)\n",
    );
    let gs_equal = write(
        dir.path(),
        "gs.prof",
        "space M\nclass half_p1.1 degree 4 coeff Z value (3)\nclass c2.2 degree 4 coeff Z value (3)\n",
    );
    let gs_diff = write(
        dir.path(),
        "gs5.prof",
        "space M\nclass half_p1.1 degree 4 coeff Z value (3)\nclass c2.2 degree 4 coeff Z value (5)\n",
    );
    let broken = write(
        dir.path(),
        "broken.prof",
        "space M\nclass w1.1 degree 1 coeff Z value (3,)\n",
    );

    let corpus: Vec<(Vec<String>, i32)> = vec![
        (vec!["pi", "O(3,4)", "3"], 0),
        (vec!["pi", "Spin(2,2)", "1"], 0),
        (vec!["pi", "U(5)", "6"], 0),
        (vec!["pi", "O(3)", "9"], 2),
        (vec!["pi", "Sp(2)", "5"], 2),
        (vec!["tower", "O(4,5)"], 0),
        (vec!["tower", "U(1,4)"], 0),
        (vec!["--unicode", "tower", "Sp(1,1)"], 0),
        (vec!["homology", "BSO(7)", "2"], 0),
        (vec!["homology", "BSpin(1)", "3"], 0),
        (vec!["homology", "BSO(7)", "3"], 2),
        (vec!["betti", "BSpin(5)", "4"], 0),
        (vec!["betti", "BSpin(12)", "40"], 0),
        (vec!["betti", "BSpin(2)", "4"], 2),
        (vec!["h4", "BSpin(4)"], 0),
        (vec!["ring", "BSOQ(4)"], 0),
        (vec!["ring", "BU(3)"], 0),
        (vec!["abgroup", "tensor", "Z/4", "Z/6"], 0),
        (vec!["abgroup", "hom", "Z", "Z/12"], 0),
        (vec!["abgroup", "ext", "Z/4", "Z"], 0),
        (vec!["abgroup", "tor", "Z/4 x Z", "Z/6"], 0),
        (vec!["abgroup", "sum", "Z/2", "Z/3"], 0),
        (vec!["abgroup", "snf", "2 4; 6 8"], 0),
        (vec!["lift", "--profile", &zero, "--target", "String", "O(3,3)"], 0),
        (vec!["lift", "--profile", &blocked, "--target", "String", "O(3,3)"], 3),
        (vec!["lift", "--profile", &blocked, "--target", "SO", "O(3,3)"], 0),
        (vec!["lift", "--profile", &zero, "--target", "String", "O(4,4)"], 2),
        (vec!["twisted", "--profile", &gs_equal, "--kind", "GS", "O(3,3)"], 0),
        (vec!["twisted", "--profile", &gs_diff, "--kind", "GS", "O(3,3)"], 3),
        (vec!["twisted", "--profile", &zero, "--kind", "Spin", "O(2,5)"], 1),
        (vec!["lift", "--profile", &broken, "--target", "Spin", "O(3,3)"], 1),
        (vec!["pi", "Q(3)", "1"], 1),
        (vec!["frobnicate"], 1),
        (vec!["abgroup", "tensor", "Z/0", "Z"], 1),
    ]
    .into_iter()
    .map(|(args, code)| (args.into_iter().map(String::from).collect(), code))
    .collect();

    let mut failures = Vec::new();
    let mut codes = BTreeSet::new();
    let mut verbs = BTreeSet::new();
    for (args, want) in &corpus {
        let first = run_binary(args);
        let second = run_binary(args);
        codes.insert(first.code);
        verbs.insert(args.iter().find(|a| !a.starts_with("--")).cloned().unwrap_or_default());
        if first.stdout != second.stdout || first.stderr != second.stderr || first.code != second.code {
            failures.push(format!("{args:?}: output differs between runs"));
        }
        if first.code != *want {
            failures.push(format!(
                "{args:?}: exit {} (expected {want}); stdout {:?} stderr {:?}",
                first.code,
                String::from_utf8_lossy(&first.stdout),
                String::from_utf8_lossy(&first.stderr)
            ));
        }
        if first.code == 2 && !first.stdout.starts_with(b"UNKNOWN:") {
            failures.push(format!("{args:?}: exit 2 without UNKNOWN: prefix"));
        }
        if first.code == 1 && first.stderr.iter().filter(|&&b| b == b'\n').count() != 1 {
            failures.push(format!("{args:?}: error output is not exactly one line"));
        }
    }
    let all_verbs: BTreeSet<String> = [
        "pi", "tower", "homology", "betti", "h4", "lift", "twisted", "abgroup", "ring",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    if !all_verbs.is_subset(&verbs) {
        failures.push(format!(
            "verbs not covered: {:?}",
            all_verbs.difference(&verbs).collect::<Vec<_>>()
        ));
    }
    if codes != BTreeSet::from([0, 1, 2, 3]) {
        failures.push(format!("exit codes covered: {codes:?}"));
    }
    report(
        9,
        "CLI determinism",
        "byte-identical stdout and stderr",
        corpus.len(),
        &failures,
    );
}
