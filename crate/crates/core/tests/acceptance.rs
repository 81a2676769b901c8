//! Acceptance suite: one line per criterion, nonzero exit if any fails.

mod common;

use std::time::Instant;

use common::{first_associativity_violation, first_jacobi_violation, first_unit_violation, fixture, s};
use ybx_core::displays::{self, QUADRATIC_DN_SUSPECT_ROW};
use ybx_core::io::{load_algebra, load_superalgebra};
use ybx_core::verify::{
    verify_colored_family, verify_display, verify_inverse_pair, verify_split_center_random, verify_wxz,
    DisplayReading, Sampling, VerifyMode,
};
use ybx_core::{
    braid_defect, canonical_solution, classify_dn, colored_inverse, colored_operator, dn_inverse, dn_operator,
    qybe_defect, sampling, super_phi, super_phi_inverse, twist, wxz_system, Algebra, AlgebraError, DnCase,
    LieSuperalgebra, Operator2, ParamScalar, SplitSpace, SuperError,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn quadratic() -> Algebra {
    load_algebra(&fixture("quadratic.json")).expect("quadratic fixture")
}

fn sigma() -> Algebra {
    load_algebra(&fixture("sigma.json")).expect("sigma fixture")
}

fn even_center_sum(l: &LieSuperalgebra, labels: &[&str]) -> Vec<ParamScalar> {
    let mut z = vec![ParamScalar::zero(); l.dim()];
    for lab in labels {
        let i = l.labels().iter().position(|x| x == lab).expect("label exists");
        z[i] = ParamScalar::one();
    }
    z
}

fn dn_symbolic_cases() -> [(DnCase, [ParamScalar; 3]); 3] {
    [
        (DnCase::I, [s("a"), s("b"), s("a")]),
        (DnCase::II, [s("a"), s("b"), s("b")]),
        (DnCase::III, [s("0"), s("0"), s("c")]),
    ]
}

fn criterion_1() -> Outcome {
    let a = quadratic();
    for (case, [al, be, ga]) in dn_symbolic_cases() {
        let d = braid_defect(&dn_operator(&a, &al, &be, &ga));
        ensure!(d.is_zero(), "case {case}: braid defect nonzero: {:?}", d.matrix().first_nonzero());
    }
    Ok("cases i, ii, iii vanish in symbolic m, n and case parameters".into())
}

fn criterion_2() -> Outcome {
    let a = Algebra::quadratic_quotient(s("1"), s("1"));
    let mut in_case = 0;
    for al in 0..4 {
        for be in 0..4 {
            for ga in 0..4 {
                // Case membership written out directly, independent of the classifier.
                let expected = (al == ga && al != 0 && be != 0) || (be == ga && be != 0 && al != 0) || (al == 0 && be == 0 && ga != 0);
                let [x, y, z] = [al, be, ga].map(ParamScalar::from_int);
                let classified = classify_dn(&x, &y, &z).map_err(|e| e.to_string())?;
                ensure!((classified != DnCase::None) == expected, "classifier disagrees at ({al},{be},{ga})");
                let r = dn_operator(&a, &x, &y, &z);
                let zero = braid_defect(&r).is_zero();
                let invertible = r.inverse().inverse().is_some();
                let closed = dn_inverse(&a, &x, &y, &z).ok().and_then(|ri| {
                    verify_inverse_pair(&r, &ri).passed().then_some(())
                });
                if expected {
                    in_case += 1;
                    ensure!(zero && invertible && closed.is_some(), "in-case ({al},{be},{ga}) failed");
                } else {
                    ensure!(!(zero && invertible), "out-of-case ({al},{be},{ga}) is a YB operator");
                    ensure!(closed.is_none(), "out-of-case ({al},{be},{ga}) has a closed-form inverse");
                }
            }
        }
    }
    Ok(format!("{in_case} of 64 tuples are in a case; exactly those pass"))
}

fn criterion_3() -> Outcome {
    let a = quadratic();
    let mut count = 0;
    for (case, [al, be, ga]) in dn_symbolic_cases() {
        let inv = dn_inverse(&a, &al, &be, &ga).map_err(|e| e.to_string())?;
        let rep = verify_inverse_pair(&dn_operator(&a, &al, &be, &ga), &inv);
        ensure!(rep.passed(), "case {case}: {rep}");
        count += 1;
    }
    for alg in [sigma(), quadratic(), load_algebra(&fixture("upper-triangular.json")).unwrap()] {
        let (p, q, u, v) = (s("p"), s("q"), s("u"), s("v"));
        let inv = colored_inverse(&alg, &p, &q, &u, &v).map_err(|e| e.to_string())?;
        let rep = verify_inverse_pair(&colored_operator(&alg, &p, &q, &u, &v), &inv);
        ensure!(rep.passed(), "colored family: {rep}");
        count += 1;
    }
    for (file, z) in [("gl11.json", vec!["E11", "E22"]), ("abelian-super.json", vec!["e"]), ("heisenberg-super.json", vec!["c"])] {
        let l = load_superalgebra(&fixture(file)).unwrap();
        let z = even_center_sum(&l, &z);
        let al = s("alpha");
        let phi = super_phi(&l, &z, &al).map_err(|e| e.to_string())?;
        let inv = super_phi_inverse(&l, &z, &al).map_err(|e| e.to_string())?;
        let rep = verify_inverse_pair(&phi, &inv);
        ensure!(rep.passed(), "{file}: {rep}");
        count += 1;
    }
    Ok(format!("{count} symbolic round-trips equal the identity"))
}

fn criterion_4() -> Outcome {
    let r = colored_operator(&sigma(), &s("p"), &s("q"), &s("u"), &s("v"));
    let printed = displays::colored_sigma_display();
    ensure!(r.matrix() == &printed, "generated\n{}\nprinted\n{}", r.matrix(), printed);
    Ok("all 16 entries match under the column convention".into())
}

fn criterion_5() -> Outcome {
    let a = quadratic();
    let (al, be) = (s("alpha"), s("beta"));
    let r = dn_operator(&a, &al, &be, &al);
    let action = displays::quadratic_dn_action();
    for (k, want) in action.iter().enumerate() {
        let got = r.image(k / 2, k % 2);
        ensure!(got == want.to_vec(), "image of basis tensor {k} differs from the action list");
    }
    let rep = verify_display(
        &r,
        &displays::quadratic_dn_display(),
        DisplayReading::RowIsImage,
        &[QUADRATIC_DN_SUSPECT_ROW],
        a.labels(),
    );
    ensure!(rep.passed(), "{rep}");
    ensure!(rep.notes.len() == 1 && rep.notes[0].contains("x⊗1"), "typo not flagged: {:?}", rep.notes);
    Ok(format!("action list matches; {}", rep.notes[0]))
}

fn criterion_6() -> Outcome {
    for eta in [0u8, 1] {
        let r = canonical_solution(&s("q"), &ParamScalar::from_int(eta as i64));
        ensure!(r.matrix() == &displays::canonical_display(eta), "eta = {eta}: constructor differs from display");
        ensure!(qybe_defect(&r).is_zero(), "eta = {eta}: QYBE defect nonzero");
    }
    Ok("QYBE holds for eta = 0 and eta = 1 with symbolic q".into())
}

fn criterion_7() -> Outcome {
    let rep = verify_colored_family(&sigma(), &s("p"), &s("q"), VerifyMode::Symbolic);
    ensure!(rep.passed(), "{rep}");
    let dim3 = load_algebra(&fixture("upper-triangular.json")).unwrap();
    let sampling = Sampling { samples: 50, seed: 2024 };
    let rep = verify_colored_family(&dim3, &s("p"), &s("q"), VerifyMode::Sampled(sampling));
    ensure!(rep.passed(), "{rep}");
    let stats = rep.samples.as_ref().expect("sampled stats");
    ensure!(stats.evaluated == 50, "only {} samples evaluated", stats.evaluated);
    Ok(format!("symbolic on sigma algebra; 50 sampled triples on dim 3 ({} skipped)", stats.skipped))
}

fn criterion_8() -> Outcome {
    let rep = verify_wxz(&wxz_system(&quadratic(), &s("lambda"), &s("mu")));
    ensure!(rep.passed(), "{rep}");
    ensure!(rep.checks.len() == 4, "expected four conditions");
    Ok("[W,W,W], [Z,Z,Z], [W,X,X], [X,X,Z] vanish".into())
}

fn criterion_9() -> Outcome {
    for c in 0..3 {
        let space = SplitSpace::new(3, c).unwrap();
        let (rep, summary) = verify_split_center_random(&space, 100, 20, 41 + c as u64);
        ensure!(rep.passed(), "{rep}");
        ensure!(summary.inadmissible_rejected == 20, "{summary:?}");
    }
    Ok("100 admissible pass and 20 inadmissible rejected, for each c in dim 3".into())
}

fn criterion_10() -> Outcome {
    let al = s("alpha");
    let gl = load_superalgebra(&fixture("gl11.json")).unwrap();
    let ab = load_superalgebra(&fixture("abelian-super.json")).unwrap();
    for (name, l, z) in [("gl(1|1)", &gl, even_center_sum(&gl, &["E11", "E22"])), ("abelian", &ab, even_center_sum(&ab, &["e"]))] {
        let phi = super_phi(l, &z, &al).map_err(|e| e.to_string())?;
        ensure!(braid_defect(&phi).is_zero(), "{name}: braid defect nonzero");
        let inv = super_phi_inverse(l, &z, &al).map_err(|e| e.to_string())?;
        let rep = verify_inverse_pair(&phi, &inv);
        ensure!(rep.passed(), "{name}: {rep}");
    }
    Ok("braid defect 0 and inverse round-trip for gl(1|1) and the abelian fixture".into())
}

fn equivalence_holds(r: &Operator2) -> Result<bool, String> {
    let t = twist(r.dim());
    let b = braid_defect(r).is_zero();
    let q1 = qybe_defect(&r.compose(&t).unwrap()).is_zero();
    let q2 = qybe_defect(&t.compose(r).unwrap()).is_zero();
    ensure!(b == q1 && q1 == q2, "braid {b}, R∘τ {q1}, τ∘R {q2}");
    Ok(b)
}

fn criterion_11() -> Outcome {
    let mut rng = sampling::rng(11);
    for k in 0..20 {
        let r = sampling::random_operator(2, &mut rng);
        equivalence_holds(&r).map_err(|e| format!("random #{k}: {e}"))?;
    }
    let quad = quadratic();
    let gl = LieSuperalgebra::gl11();
    let mut solutions = vec![twist(2), Operator2::identity(2), twist(3)];
    for (_, [al, be, ga]) in dn_symbolic_cases() {
        solutions.push(dn_operator(&quad, &al, &be, &ga));
    }
    for eta in [0, 1] {
        // The canonical form solves the QYBE; composing with τ gives a braid solution.
        solutions.push(canonical_solution(&s("q"), &ParamScalar::from_int(eta)).compose(&twist(2)).unwrap());
    }
    let z = even_center_sum(&gl, &["E11", "E22"]);
    solutions.push(super_phi(&gl, &z, &s("alpha")).unwrap());
    let n = solutions.len();
    for (k, r) in solutions.iter().enumerate() {
        let b = equivalence_holds(r).map_err(|e| format!("solution #{k}: {e}"))?;
        ensure!(b, "solution #{k} is not a braid solution");
    }
    Ok(format!("20 random operators and {n} constructed solutions"))
}

fn criterion_12() -> Outcome {
    // Associativity: upper-triangular with e2·e2 corrupted to e1.
    let ut = Algebra::upper_triangular();
    let mut table = ut.structure_table();
    table[2][2][1] = ParamScalar::one();
    let oracle = first_associativity_violation(&table).ok_or("oracle found no violation")?;
    match Algebra::new(3, table, ut.unit().to_vec(), None) {
        Err(AlgebraError::Associativity { i, j, k, coord, .. }) => {
            ensure!((i, j, k, coord) == oracle, "witness {:?} vs oracle {oracle:?}", (i, j, k, coord));
        }
        other => return Err(format!("associativity corruption accepted or misreported: {other:?}")),
    }
    // Unit: x·1 corrupted to 2x.
    let q = Algebra::quadratic_quotient(s("m"), s("n"));
    let mut table = q.structure_table();
    table[1][0][1] = s("2");
    let oracle = first_unit_violation(&table, q.unit()).ok_or("oracle found no unit violation")?;
    match Algebra::new(2, table, q.unit().to_vec(), None) {
        Err(AlgebraError::Unit { index, .. }) => ensure!(index == oracle, "unit witness {index} vs oracle {oracle}"),
        other => return Err(format!("unit corruption accepted or misreported: {other:?}")),
    }
    // Super-Jacobi: gl(1|1) with [E12, E21] = [E21, E12] = E11.
    let gl = LieSuperalgebra::gl11();
    let mut table = gl.bracket_table();
    for (i, j) in [(2, 3), (3, 2)] {
        table[i][j] = vec![s("1"), s("0"), s("0"), s("0")];
    }
    let oracle = first_jacobi_violation(gl.degrees(), &table).ok_or("oracle found no Jacobi violation")?;
    match LieSuperalgebra::new(4, gl.degrees().to_vec(), table, None) {
        Err(SuperError::Jacobi { i, j, k, coord, .. }) => {
            ensure!((i, j, k, coord) == oracle, "witness {:?} vs oracle {oracle:?}", (i, j, k, coord));
        }
        other => return Err(format!("Jacobi corruption accepted or misreported: {other:?}")),
    }
    Ok("associativity, unit and super-Jacobi witnesses match the brute-force oracle".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("dn family solves the braid equation symbolically (cases i-iii)", criterion_1),
        ("dn converse on the {0,1,2,3}^3 grid at m = n = 1", criterion_2),
        ("closed-form inverses round-trip symbolically", criterion_3),
        ("colored display on k[X]/(X^2 - sigma) golden match", criterion_4),
        ("dn display vs action list, suspected typo flagged", criterion_5),
        ("canonical 4x4 solution satisfies the QYBE", criterion_6),
        ("colored QYBE symbolic (dim 2) and sampled (dim 3)", criterion_7),
        ("WXZ system conditions vanish symbolically", criterion_8),
        ("split-center property suite at dim V = 3", criterion_9),
        ("super twist-bracket operator is a YB operator", criterion_10),
        ("braid <=> QYBE after composing with the twist", criterion_11),
        ("validators reject corrupted tables with correct witnesses", criterion_12),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS ({secs:.2}s) {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL ({secs:.2}s) {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
