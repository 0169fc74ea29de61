use std::process::{Command, Output};

use fundseries::cli::Report;

fn fundseries(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fundseries")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn describe_builtin() {
    let o = fundseries(&["describe", "--pair", "principal-a1-in-a2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("{[-4], [-2], [0], [2], [4]}"));
}

#[test]
fn missing_file_fails() {
    let o = fundseries(&["describe", "--pair", "/no/such/pair.toml"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("/no/such/pair.toml"));
}

#[test]
fn config_line_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.toml");
    std::fs::write(&path, "version = 1\nname = \"broken\"\n[g]\ntype = \"A2\"\n[t]\nembed = [[2], [2]\n").unwrap();
    let o = fundseries(&["describe", "--pair", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("broken.toml") && err.contains("line"), "{err}");
}

#[test]
fn corrupted_pair_fails_validation() {
    let o = fundseries(&["verify", "--pair", &fixture("corrupted.toml"), "--mu", "0"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL pair-validation: non-containment"), "{out}");
}

#[test]
fn wrong_kappa_is_omega_mismatch() {
    let o = fundseries(&["table", "--pair", "principal-a1-in-a2", "--mu", "0", "--kappa", "3/2,3/2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("omega mismatch"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(fundseries(&["table", "--pair", "cartan-in-a1"]).status.code(), Some(2));
    assert_eq!(fundseries(&["table", "--pair", "cartan-in-a1", "--mu", "1,2"]).status.code(), Some(2));
    assert_eq!(fundseries(&["table", "--pair", "cartan-in-a1", "--mu", "0", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(
        fundseries(&["parabolic", "--pair", "cartan-in-a1", "--mu", "0", "--tiebreak", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(fundseries(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn empty_table_warning() {
    let o = fundseries(&["table", "--pair", "principal-a1-in-a2", "--mu", "2", "--cutoff", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("warning: cutoff 0 is below"));
}

#[test]
fn table_principal_text() {
    let o = fundseries(&["table", "--pair", "principal-a1-in-a2", "--mu", "0", "--cutoff", "12.5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("    [8]            25/2    3        3            3      ok"), "{out}");
    assert!(out.ends_with("verdict PASS\n"));
}

#[test]
fn negative_mu_values() {
    let o = fundseries(&["table", "--pair", "cartan-in-a1", "--mu", "-3/2", "--cutoff", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn verify_all_builtins() {
    for pair in ["cartan-in-a1", "principal-a1-in-a2", "diagonal-a1-in-a1xa1"] {
        for mu in ["0", "1", "2"] {
            let o = fundseries(&["verify", "--pair", pair, "--mu", mu]);
            assert_eq!(o.status.code(), Some(0), "{pair} {mu}\n{}", stdout(&o));
            assert!(!stdout(&o).contains("FAIL"));
        }
    }
}

#[test]
fn json_round_trips() {
    let o = fundseries(&["verify", "--pair", "principal-a1-in-a2", "--mu", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let report: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    // rationals are [numerator, denominator] integer pairs
    assert_eq!(value["table"]["rows"][0]["vogan_norm_sq"], serde_json::json!([9, 8]));
    assert_eq!(value["e"]["omega"], serde_json::json!([[-5, 1]]));
    assert!(!text.contains('.'));
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["table", "--pair", "diagonal-a1-in-a1xa1", "--mu", "4", "--format", "json"];
    assert_eq!(fundseries(&args).stdout, fundseries(&args).stdout);
}

#[test]
fn parabolic_command() {
    let o = fundseries(&["parabolic", "--pair", &fixture("cartan-a2.toml"), "--mu", "0,0", "--tiebreak", "1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("tiebreak 1,0") && out.contains("PASS containment"), "{out}");
}
