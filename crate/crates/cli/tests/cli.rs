use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn welded(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_welded"))
        .args(args)
        .output()
        .expect("run welded")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn structured(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "structured"]);
    let out = welded(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(stdout(&out).trim()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn dimensions() {
    let out = welded(&["dim", "--n", "3", "--cap", "4"]);
    assert_eq!(stdout(&out).trim(), "infinitesimal_artin(3): 1 3 7 15 31");
    let v = structured(&["dim", "--preset", "oriented", "--n", "2", "--cap", "5"]);
    assert_eq!(v["command"], "dim");
    assert_eq!(v["values"]["dims"], serde_json::json!([1, 2, 4, 8, 16, 32]));
    assert_eq!(v["degrees"].as_array().unwrap().len(), 6);
}

#[test]
fn hilbert_table_has_both_rows() {
    let v = structured(&["hilbert-table", "--n", "3", "--cap", "3"]);
    let rows = v["values"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["dims"], serde_json::json!([1, 3, 7, 15]));
    assert_eq!(rows[0]["with_permutations"], serde_json::json!([6, 18, 42, 90]));
    assert_eq!(rows[1]["dims"], serde_json::json!([1, 6, 27, 108]));
}

#[test]
fn normal_form_kills_relations() {
    let out = welded(&[
        "normal-form",
        "--n",
        "3",
        "--cap",
        "2",
        "--series",
        "t12.t13 + t12.t23 - t13.t12 - t23.t12",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn welded_evaluation() {
    let v = structured(&["eval", "--word", "sig1", "--n", "2", "--cap", "2"]);
    assert_eq!(v["values"]["components"]["21"], "1 + 1*v12 + 1/2*v12.v12");
    let out = welded(&["eval", "--word", "sig1 sig1^-1", "--n", "3", "--cap", "3"]);
    assert_eq!(stdout(&out).trim(), "(1) ⊗ 123");
}

#[test]
fn associator_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let phi = dir.path().join("phi.txt");
    let v = structured(&["extend-associator", "--to-degree", "4", "--out", path(&phi)]);
    assert_eq!(v["values"]["kernel_dims"]["2"], 0);
    assert_eq!(v["values"]["kernel_dims"]["3"], 1);
    let file = std::fs::read_to_string(&phi).unwrap();
    assert!(file.starts_with("# cap 4\n"));
    assert!(file.contains("1/24*A.B"));

    let out = welded(&["check-associator", "--in", path(&phi), "--axioms", "AE,AS,H1,H3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().filter(|l| l.ends_with("pass (cap 4)")).count(), 4);

    let out = welded(&["check-yb", "--in", path(&phi), "--cap", "3"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).starts_with("YB: pass (cap 3)"));

    let v = structured(&[
        "eval",
        "--family",
        "rho3",
        "--assoc",
        path(&phi),
        "--word",
        "sig2",
        "--cap",
        "1",
    ]);
    assert_eq!(v["values"]["image"], "(1 + 1/2*t23) ⊗ 132");

    let longer = dir.path().join("phi5.txt");
    let v = structured(&[
        "extend-associator",
        "--from",
        path(&phi),
        "--to-degree",
        "5",
        "--out",
        path(&longer),
    ]);
    assert_eq!(v["values"]["kernel_dims"]["5"], 2);
}

#[test]
fn failing_checks_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "# cap 2\n1 + 1/12*A.B - 1/12*B.A\n").unwrap();
    let out = welded(&["check-associator", "--in", path(&bad), "--axioms", "H3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).starts_with("H3: FAIL at degree 2"));
    let out = welded(&["check-yb", "--in", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_str(
        stdout(&welded(&[
            "check-associator",
            "--in",
            path(&bad),
            "--axioms",
            "H3",
            "--format",
            "structured",
        ]))
        .trim(),
    )
    .unwrap();
    assert_eq!(v["values"]["H3"]["failing_degree"], 2);
    assert_eq!(v["values"]["H3"]["residual"], "1/8*t12.t13 - 1/8*t13.t12");
}

#[test]
fn usage_errors_exit_with_one() {
    let out = welded(&["eval", "--family", "drinfeld", "--word", "sig1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--assoc"));
    let out = welded(&["eval", "--word", "a14", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = welded(&["delta-kernel", "--n", "4", "--degree", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn distinguishing_words() {
    let v = structured(&["distinguish", "--w1", "a12", "--w2", "a21"]);
    assert_eq!(v["values"]["first_difference"], 1);
    assert_eq!(v["values"]["oracle_equal"], false);
    let v = structured(&[
        "distinguish",
        "--w1",
        "sig1 sig2 sig1",
        "--w2",
        "sig2 sig1 sig2",
        "--cap",
        "4",
    ]);
    assert_eq!(v["values"]["first_difference"], Value::Null);
    assert_eq!(v["values"]["oracle_equal"], true);
}

#[test]
fn finite_type_orders() {
    let v = structured(&["vassiliev-degree", "--element", "1*[sig1] - 1*[s1]", "--cap", "2"]);
    assert_eq!(v["values"]["order"], 1);
    assert_eq!(v["values"]["image"], "(1*v12 + 1/2*v12.v12) ⊗ 213");
    let v = structured(&["vassiliev-degree", "--element", "[s1]"]);
    assert_eq!(v["values"]["order"], 0);
    let v = structured(&[
        "vassiliev-degree",
        "--element",
        "[a12 a12 a12] - 3*[a12 a12] + 3*[a12] - []",
        "--cap",
        "4",
    ]);
    assert_eq!(v["values"]["order"], 3);
}

#[test]
fn doubling_kernels() {
    let v = structured(&["delta-kernel", "--n", "3", "--cap", "3"]);
    for k in ["1", "2", "3"] {
        assert_eq!(v["values"][k]["kernel_dim"], 0);
    }
    assert_eq!(v["values"]["3"]["source_dim"], 15);
}

#[test]
fn splitting_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let out = welded(&["check-splitting", "--samples", "10", "--cache-dir", path(dir.path())]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("pass"));
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
    let again = welded(&["check-splitting", "--samples", "10", "--cache-dir", path(dir.path())]);
    assert_eq!(stdout(&out), stdout(&again));
}
