//! End-to-end tests of the binary: interchange roundtrips, report shapes,
//! exit codes, and diagnostics.

use std::process::{Command, Output};

use tempfile::tempdir;

fn pilab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pilab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn build_emits_a_parseable_document_and_roundtrips() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("s2.json");
    let out = pilab(&["build", "s2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"dim\": 6"));
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["basis"], serde_json::json!(["a", "b", "c", "d", "x", "y"]));
    assert_eq!(doc["parity"], serde_json::json!([0, 1, 1, 0, 0, 1]));

    // rewriting the parsed document reproduces it byte for byte
    let doc = pilab_cli::format::AlgebraFile::from_json_str(&text).unwrap();
    let algebra = doc.into_algebra().unwrap();
    let rewritten = pilab_cli::format::AlgebraFile::from_algebra(&algebra).to_json_string();
    assert_eq!(rewritten, text);

    // the written file feeds every algebra-consuming subcommand
    let out = pilab(&["codim", path.to_str().unwrap(), "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,k,value,method\n2,-,2,exact\n");
}

#[test]
fn codim_reports_in_both_formats() {
    let out = pilab(&["codim", "s2", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,k,value,method\n3,-,8,exact\n");

    let out = pilab(&["codim", "s2", "--n", "3", "--json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["rows"][0]["value"], "8");
    assert_eq!(parsed["rows"][0]["method"], "exact");
}

#[test]
fn graded_codim_lists_all_splits_and_the_total() {
    let out = pilab(&["graded-codim", "s2", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,k,value,method");
    assert_eq!(lines.len(), 5); // splits k = 0, 1, 2 plus the total row
    assert!(lines[4].starts_with("2,total,4,"));

    let single = pilab(&["graded-codim", "s2", "--n", "2", "--k", "1"]);
    assert_eq!(stdout(&single), "n,k,value,method\n2,1,1,exact\n");
}

#[test]
fn modular_method_is_reported_with_its_primes() {
    let out = pilab(&["codim", "s2", "--n", "3", "--method", "modular"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("modular[2147483647;2147483629;998244353]"));
}

#[test]
fn cocharacter_report_shape() {
    let out = pilab(&["cocharacter", "s2", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text,
        "n,lambda,multiplicity,dimension\n3,3,1,1\n3,2+1,3,2\n3,1+1+1,1,1\n"
    );
    // graded split
    let out = pilab(&["cocharacter", "s2", "--n", "2", "--k", "1"]);
    assert_eq!(
        stdout(&out),
        "n,lambda,multiplicity,dimension\n2,1:1,1,1\n"
    );
}

#[test]
fn cocharacter_budget_is_enforced() {
    let out = pilab(&["cocharacter", "s2", "--n", "6"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("--slow"));
}

#[test]
fn colength_row_includes_the_bound() {
    let out = pilab(&["colength", "s2", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n,colength,bound\n2,2,"));
}

#[test]
fn hook_and_rectangle_bound() {
    let out = pilab(&["hook", "--lambda", "3,2,1"]);
    assert_eq!(stdout(&out), "lambda,dimension\n3+2+1,16\n");
    let out = pilab(&["hook", "--m", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("4+4+4+4"));
    assert!(stdout(&out).trim_end().ends_with("true"));
    let out = pilab(&["hook"]);
    assert!(!out.status.success());
}

#[test]
fn fm_eval_and_padding() {
    let out = pilab(&["fm", "--m", "1", "--eval"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("value: 384*y"));
    let out = pilab(&["fm", "--m", "2", "--eval", "--pad", "3"]);
    assert!(stdout(&out).contains("-1179648*y")); // 384^2 * (-2)^3
    let out = pilab(&["fm", "--m", "1", "--expand"]);
    assert!(stdout(&out).contains("expanded terms: 576"));
}

#[test]
fn symmetrizer_check_needs_slow() {
    let out = pilab(&["symmetrizer-check", "--m", "1"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("--slow"));
    let out = pilab(&["symmetrizer-check", "--m", "1", "--slow"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("witness tableau #0"));
    assert!(text.contains("codimension >= 14"));
}

#[test]
fn exp_estimate_table() {
    let out = pilab(&["exp-estimate", "s2", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(
        text,
        "n,value,root\n1,1,1.000000\n2,2,1.414213\n3,8,2.000000\n"
    );
    let graded = pilab(&["exp-estimate", "s2", "--n", "2", "--graded"]);
    assert_eq!(
        stdout(&graded),
        "n,value,root\n1,2,2.000000\n2,4,2.000000\n"
    );
}

#[test]
fn verify_rejects_a_broken_algebra_file() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(
        &path,
        r#"{"dim": 2, "basis": ["u", "v"], "table": [[1, 1, 3, "1"]]}"#,
    )
    .unwrap();
    let out = pilab(&["verify", path.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("out of range"));

    std::fs::write(
        &path,
        r#"{"dim": 2, "basis": ["u", "v"], "table": [[1, 1, 2, "1/0"]]}"#,
    )
    .unwrap();
    let out = pilab(&["verify", path.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("malformed rational"));

    std::fs::write(
        &path,
        r#"{"dim": 2, "basis": ["u", "v"], "parity": [0, 1], "table": [[1, 2, 1, "1"]]}"#,
    )
    .unwrap();
    let out = pilab(&["verify", path.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("grading violated"));
}

#[test]
fn verify_fails_on_a_non_superalgebra_table() {
    // an associative-style graded table that is not anticommutative
    let dir = tempdir().unwrap();
    let path = dir.path().join("assoc.json");
    std::fs::write(
        &path,
        r#"{"dim": 2, "basis": ["e", "f"], "parity": [0, 0], "table": [[1, 1, 1, "1"], [1, 2, 2, "1"]]}"#,
    )
    .unwrap();
    let out = pilab(&["verify", path.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(stdout(&out).contains("FAIL superalgebra-axioms"));
}

#[test]
fn abelian_file_control_through_the_cli() {
    let dir = tempdir().unwrap();
    let path = dir.path().join("abelian.json");
    std::fs::write(
        &path,
        r#"{"dim": 3, "basis": ["u", "v", "w"], "table": []}"#,
    )
    .unwrap();
    for n in ["2", "3"] {
        let out = pilab(&["codim", path.to_str().unwrap(), "--n", n]);
        assert!(out.status.success());
        assert!(stdout(&out).lines().nth(1).unwrap().contains(&format!("{n},-,0,")));
    }
}

#[test]
fn builtin_family_arguments() {
    let out = pilab(&["build", "s-t", "--t", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"dim\": 12"));
    let out = pilab(&["build", "s-t"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("needs --t"));
    let out = pilab(&["build", "p-tilde", "--t", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"dim\": 17"));
    let out = pilab(&["verify", "s-t", "--t", "4"]);
    assert!(out.status.success());
}

#[test]
fn budget_flags_are_surfaced() {
    let out = pilab(&["codim", "s2", "--n", "4", "--max-rows", "100"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("row budget exceeded"));
}
