use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    root.join(name).display().to_string()
}

fn ybx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ybx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn constant_case_one_passes() {
    let q = fixture("quadratic.json");
    let o = ybx(&["check", "constant", "--algebra", &q, "--alpha", "a", "--beta", "b", "--gamma", "a"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("overall: PASS"));
}

#[test]
fn constant_outside_cases_fails_with_witness() {
    let o = ybx(&["check", "constant", "--alpha", "1", "--beta", "2", "--gamma", "5"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("witness:"));
}

#[test]
fn colored_export_matches_printed_matrix() {
    let s = fixture("sigma.json");
    let o = ybx(&["export", "matrix", "--family", "colored", "--algebra", &s, "--symbolic"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<Vec<String>> = text
        .lines()
        .filter(|l| l.starts_with('['))
        .map(|l| {
            l.trim_matches(|c| c == '[' || c == ']')
                .split("  ")
                .map(str::trim)
                .filter(|e| !e.is_empty())
                .map(|e| e.replace(' ', ""))
                .collect()
        })
        .collect();
    // Written out by hand from qu−pv, σ(q+p)(u−v), p(u−v), (q−p)v, (q−p)u, q(u−v), qv−pu.
    let expected = [
        ["-p*v+q*u", "0", "0", "p*sigma*u-p*sigma*v+q*sigma*u-q*sigma*v"],
        ["0", "p*u-p*v", "-p*v+q*v", "0"],
        ["0", "-p*u+q*u", "q*u-q*v", "0"],
        ["0", "0", "0", "-p*u+q*v"],
    ];
    assert_eq!(rows, expected);
}

#[test]
fn export_json_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let p = path.to_str().unwrap();
    let o = ybx(&[
        "export", "matrix", "--family", "dn", "--alpha", "2", "--beta", "3", "--gamma", "2", "--m", "1", "--n",
        "1", "--format", "json", "--out", p,
    ]);
    assert_eq!(code(&o), 0);
    let o = ybx(&["check", "constant", "--operator", p]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn wxz_lists_four_conditions() {
    let q = fixture("quadratic.json");
    let o = ybx(&["check", "wxz", "--algebra", &q]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    for c in ["[W,W,W]", "[Z,Z,Z]", "[W,X,X]", "[X,X,Z]"] {
        assert!(text.contains(c), "missing {c}");
    }
}

#[test]
fn same_seed_same_bytes() {
    let q = fixture("quadratic.json");
    let args = ["check", "colored", "--algebra", &q, "--samples", "4", "--seed", "11", "--format", "json"];
    let a = ybx(&args);
    let b = ybx(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], "ybx.report/1");
    assert_eq!(v["reports"][0]["samples"]["seed"], 11);
}

#[test]
fn split_center_same_seed_same_bytes() {
    let args = ["check", "split-center", "--samples", "8", "--seed", "5", "--format", "json"];
    let a = ybx(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, ybx(&args).stdout);
}

#[test]
fn super_checks_pass() {
    for f in ["gl11.json", "heisenberg-super.json"] {
        let o = ybx(&["check", "super", "--superalgebra", &fixture(f)]);
        assert_eq!(code(&o), 0, "{f}: {}", stdout(&o));
    }
}

#[test]
fn super_z_index_out_of_range_is_input_error() {
    let o = ybx(&["check", "super", "--superalgebra", &fixture("gl11.json"), "--z-index", "7"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(code(&ybx(&["check", "constant", "--algebra", "/nonexistent.json"])), 2);
    assert_eq!(code(&ybx(&["check", "constant", "--alpha", "1/"])), 2);
    assert_eq!(code(&ybx(&["check", "constant", "--algebra", &fixture("sigma.json"), "--m", "3"])), 2);
    assert_eq!(code(&ybx(&["check", "bogus"])), 2);
}

#[test]
fn random_operator_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("op.json");
    std::fs::write(
        &path,
        r#"{"matrix": [["1","2","0","0"],["0","1","0","0"],["3","0","1","0"],["0","0","1","1"]]}"#,
    )
    .unwrap();
    let o = ybx(&["check", "constant", "--operator", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
}

#[test]
fn validate_reports_corruption() {
    let text = std::fs::read_to_string(fixture("upper-triangular.json")).unwrap();
    let mut doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(code(&ybx(&["validate", "algebra", &fixture("upper-triangular.json")])), 0);
    doc["structure"][2][2][1] = Value::from("1");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let o = ybx(&["validate", "algebra", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "fail");
    assert!(v["reports"][0]["witness"].is_object());
}

#[test]
fn validate_superalgebra_fixtures() {
    for f in ["gl11.json", "abelian-super.json", "heisenberg-super.json"] {
        assert_eq!(code(&ybx(&["validate", "superalgebra", &fixture(f)])), 0, "{f}");
    }
}

#[test]
fn invert_families() {
    let o = ybx(&["invert", "--family", "colored", "--algebra", &fixture("sigma.json"), "--p", "1", "--q", "1"]);
    assert_eq!(code(&o), 0);
    let o = ybx(&["invert", "--family", "dn", "--alpha", "1", "--beta", "2", "--gamma", "3"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("determinant: 0"));
    let o = ybx(&["invert", "--family", "super", "--superalgebra", &fixture("gl11.json"), "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "ybx.inverse/1");
    assert_eq!(v["determinant"], "1");
}
