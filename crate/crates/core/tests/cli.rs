use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quadralab")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json, String::from_utf8(out.stderr).unwrap())
}

#[test]
fn hilbert_json_envelope() {
    let (code, v, _) = run(&["hilbert", "--alpha", "2", "--beta", "3", "--gamma", "5", "--degree", "6", "--mod-p", "65537"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "hilbert");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["backend"], "modular p=65537");
    assert_eq!(v["result"]["dims"], serde_json::json!([1, 4, 10, 16, 19, 20, 20]));
    assert_eq!(v["result"]["upper_bound_only"], true);
}

#[test]
fn output_is_deterministic() {
    let args = ["chl", "params", "--abcd", "1,2,-4,2"];
    let a = Command::new(env!("CARGO_BIN_EXE_quadralab")).args(args).output().unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_quadralab")).args(args).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn chl_params_at_a_sample_point() {
    let (code, v, _) = run(&["chl", "params", "--abcd", "1,2,-4,2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["alpha"], "1/7");
    assert_eq!(v["result"]["beta"], "-9");
    assert_eq!(v["result"]["gamma"], "-4");
}

#[test]
fn verify_gamma_passes_and_table_format_works() {
    let (code, v, _) = run(&["verify-gamma", "--alpha", "4", "--beta", "9", "--gamma", "25", "--abc", "2,3,5"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    let out = Command::new(env!("CARGO_BIN_EXE_quadralab"))
        .args(["--format", "table", "points", "--abc", "2,3,5"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("command") && l.ends_with("points")));
}

#[test]
fn failed_checks_exit_with_one() {
    let (code, v, err) = run(&["autos", "--abcd", "1,2,3,5"]);
    assert_eq!(code, 1);
    assert_eq!(v["pass"], false);
    assert!(err.contains("q3^4 = rho3"));
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        &["hilbert", "--alpha", "x", "--beta", "3", "--gamma", "5", "--degree", "2"][..],
        &["hilbert", "--alpha", "2", "--beta", "3", "--gamma", "5", "--degree", "2", "--mod-p", "7"],
        &["hilbert", "--alpha", "2", "--beta", "3", "--gamma", "5", "--degree", "9"],
        &["points", "--abc", "1,2"],
        &["center", "--alpha", "2"],
        &["no-such-command"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn force_lifts_the_degree_cap() {
    let (code, v, _) = run(&["--force", "hilbert", "--alpha", "2", "--beta", "3", "--gamma", "5", "--degree", "8", "--mod-p", "65537"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dims"][8], 20);
}

#[test]
fn negative_values_parse() {
    let (code, v, _) = run(&["center", "--alpha", "-2", "--beta", "3", "--gamma", "-1/5"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["params"]["alpha"], "-2");
}
