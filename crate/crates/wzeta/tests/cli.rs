use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn wzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wzeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = wzeta(&all);
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: {}{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    });
    (v, code)
}

fn code(args: &[&str]) -> i32 {
    wzeta(args).status.code().unwrap()
}

#[test]
fn analyze_examples() {
    let (v, c) = json(&["analyze", "--poly", "x1^2 + x2^3"]);
    assert_eq!(c, 0);
    assert_eq!(v["sorted_weights"], serde_json::json!([3, 2]));
    assert_eq!(v["singular"], true);
    assert_eq!(v["nondegenerate"], true);
    assert_eq!(v["m_w"], 6);
    let (v, c) = json(&["analyze", "--poly", "x1 + x2^5"]);
    assert_eq!(c, 0);
    assert_eq!(v["singular"], false);
    let (v, c) = json(&["analyze", "--poly", "x1^2*x2"]);
    assert_eq!(c, 2);
    assert_eq!(v["convenient"], false);
    assert_eq!(code(&["analyze", "--poly", "x1^2 + 2*x1*x2 + x2^2"]), 3);
}

#[test]
fn parse_errors_report_the_column() {
    let out = wzeta(&["analyze", "--poly", "x1^2 + y"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("column 8"));
}

#[test]
fn zeta_examples() {
    let (v, c) = json(&["zeta", "--poly", "x1^2 + x2^3", "--order", "6"]);
    assert_eq!(c, 0);
    let coeffs = v["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 6);
    assert_eq!(coeffs[0]["lshift"], 0);
    assert_eq!(coeffs[0]["class"], "(-1)*1");
    assert_eq!(coeffs[4]["lshift"], 3);
    assert_eq!(coeffs[4]["pure"], true);
    assert_eq!(coeffs[4]["class"], "(-L^-3)*1");
    assert_eq!(coeffs[5]["pure"], false);
    assert_eq!(coeffs[5]["token"], "diag[(2,+1),(3,+1)]@fiber_plus");
    assert!(v["rational_form"]["display"]
        .as_str()
        .unwrap()
        .ends_with("/(1 - L^-5 T^6)"));
    assert_eq!(v["identity"]["holds"], true);

    let (v, c) = json(&["zeta", "--poly", "x1"]);
    assert_eq!(c, 0);
    assert_eq!(v["coefficients"], serde_json::json!([]));
    assert!(v["note"].as_str().unwrap().contains("non-singular"));

    let (v, c) = json(&["zeta", "--poly", "x1^2 + x2^3", "--order", "4", "--corrupt"]);
    assert_eq!(c, 4);
    assert_eq!(v["identity"]["first_failure"], 1);
    assert_eq!(code(&["zeta", "--poly", "x1^2 + x2^3", "--order", "0"]), 2);
}

#[test]
fn recover_examples() {
    let (v, c) = json(&["recover", "--poly", "x1^2 + x2^3"]);
    assert_eq!(c, 0);
    assert_eq!(v["weights"], serde_json::json!([3, 2]));
    assert_eq!(v["s"], "5/6");
    let step1 = &v["steps"][0];
    assert_eq!(step1["n"], "30");
    assert_eq!(step1["lhs"], "2");
    let (v, _) = json(&["recover", "--poly", "x1^2 + x2^4 + x3^6"]);
    assert_eq!(v["weights"], serde_json::json!([6, 3, 2]));
    let (v, _) = json(&["recover", "--poly", "x1^3 + x2^3 + x3^4"]);
    assert_eq!(v["mult"], serde_json::json!({"3": 2, "4": 1}));
    assert_eq!(v["weights"], serde_json::json!([4, 4, 3]));
    assert_eq!(code(&["recover", "--poly", "x1 + x2^2"]), 2);
    assert_eq!(
        code(&["recover", "--poly", "x1^2 + x2^5", "--budget", "2"]),
        4
    );
}

#[test]
fn compare_examples() {
    let (v, c) = json(&["compare", "--poly", "x1^2 + x2^3", "--poly", "x1^2 + x2^5"]);
    assert_eq!(c, 0);
    assert_eq!(v["verdict"], "separated");
    assert_eq!(v["left"]["weights"], serde_json::json!([3, 2]));
    assert_eq!(v["right"]["weights"], serde_json::json!([5, 2]));
    let (v, _) = json(&["compare", "--poly", "x1^2 + x2^3", "--poly", "-x1^2 - x2^3"]);
    assert_eq!(v["verdict"], "weights_equal");
    assert!(v["caveat"].as_str().unwrap().contains("not concluded"));
    let (v, _) = json(&[
        "compare",
        "--poly",
        "x1^2 + x2^4 + x3^6",
        "--poly",
        "x1^3 + x2^3 + x3^4",
    ]);
    assert_eq!(v["verdict"], "separated");
    assert_eq!(v["witness"]["kind"], "mult");
    let (v, _) = json(&["compare", "--poly", "x1 + x2^2", "--poly", "x1^3 + x2"]);
    assert_eq!(v["verdict"], "inconclusive");
    assert_eq!(code(&["compare", "--poly", "x1^2 + x2^3"]), 2);
}

#[test]
fn json_files_and_determinism() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("cli_cusp.json");
    std::fs::write(
        &path,
        r#"{"vars": 2, "terms": [{"exp": [2, 0], "coef": "1/1"}, {"exp": [0, 3], "coef": "1"}]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let a = wzeta(&["--format", "json", "zeta", "-i", p, "--order", "12"]);
    let b = wzeta(&[
        "--format",
        "json",
        "zeta",
        "--poly",
        "x1^2 + x2^3",
        "--order",
        "12",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r1 = wzeta(&["--format", "json", "recover", "-i", p]);
    let r2 = wzeta(&["--format", "json", "recover", "-i", p]);
    assert_eq!(r1.stdout, r2.stdout);
    assert_eq!(
        code(&["analyze", "-i", dir.join("missing.json").to_str().unwrap()]),
        2
    );
}

#[test]
fn selftest_and_negative_control() {
    assert_eq!(code(&["selftest", "--quick"]), 0);
    let out = wzeta(&["selftest", "--quick", "--corrupt"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL modified identity"));
}
