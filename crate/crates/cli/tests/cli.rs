use std::process::{Command, Output};

use serde_json::Value;

fn ltlfrag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ltlfrag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn next_is_not_stutter_invariant() {
    let out = ltlfrag(&[
        "check",
        "--alphabet",
        "a,b",
        "--fragment",
        "U",
        "--formula",
        "X b",
        "--all-reasons",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["expressible"], false);
    assert_eq!(v["reasons"][0]["kind"], "T3");
    assert_eq!(v["reasons"][1]["kind"], "not-stutter-invariant");
    assert_eq!(v["witness"]["relation"], "stutter-equivalent");
}

#[test]
fn release_is_in_f() {
    let out = ltlfrag(&[
        "check",
        "--alphabet",
        "a,b",
        "--fragment",
        "F",
        "--formula",
        "a R b",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn unsupported_fragment_is_an_error() {
    let out = ltlfrag(&[
        "check",
        "--alphabet",
        "a,b",
        "--fragment",
        "SF,U",
        "--formula",
        "a",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported fragment"));
}

#[test]
fn all_fragments_by_default() {
    let out = ltlfrag(&["check", "--alphabet", "a,b", "--formula", "F a"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let row: Vec<bool> = ["X", "F", "SF", "XF", "U", "FULL"]
        .iter()
        .map(|f| v[f]["expressible"].as_bool().unwrap())
        .collect();
    assert_eq!(row, [false, true, true, true, true, true]);
}

#[test]
fn batch_file_keeps_input_order() {
    let dir = std::env::temp_dir().join(format!("ltlfrag-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("formulas.txt");
    std::fs::write(&path, "alphabet: a,b\n# comment\n\na\nX b\n").unwrap();
    let out = ltlfrag(&["check", "--fragment", "X", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v[0]["formula"], "a");
    assert_eq!(v[1]["formula"], "X b");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = ["check", "--alphabet", "a,b,c", "--formula", "a U b"];
    assert_eq!(ltlfrag(&args).stdout, ltlfrag(&args).stdout);
}

#[test]
fn show_release_tableau() {
    let out = ltlfrag(&["show", "--alphabet", "a,b", "--formula", "a R b"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["states"].as_array().unwrap().len(), 3);
    let dot = ltlfrag(&[
        "show",
        "--alphabet",
        "a,b",
        "--formula",
        "a R b",
        "--emit",
        "dot",
    ]);
    assert!(String::from_utf8_lossy(&dot.stdout).starts_with("digraph"));
    let fixture = ltlfrag(&["show", "--fixture"]);
    assert_eq!(json(&fixture)["initial"], serde_json::json!([0, 1]));
}

#[test]
fn witness_command() {
    let out = ltlfrag(&[
        "witness",
        "--alphabet",
        "a,b",
        "--fragment",
        "X",
        "--formula",
        "a R b",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["witness"]["relation"], "prefix-k-equal");
    let out = ltlfrag(&[
        "witness",
        "--alphabet",
        "a,b",
        "--fragment",
        "X",
        "--formula",
        "X b",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["witness"].is_null());
}

#[test]
fn efgame_report() {
    let out = ltlfrag(&[
        "efgame",
        "--alphabet",
        "a,b",
        "--w1",
        "ab(b)",
        "--w2",
        "aab(b)",
        "--moves",
        "X",
        "--rounds",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["spoiler_wins"], true);
    assert_eq!(v["rounds_needed"], 1);
}

#[test]
fn selftest_exit_codes() {
    assert_eq!(
        ltlfrag(&["selftest", "--depth", "0"]).status.code(),
        Some(0)
    );
    assert_eq!(
        ltlfrag(&["selftest", "--depth", "5", "--seed", "3"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        ltlfrag(&["selftest", "--depth", "0", "--inject-fault"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn missing_alphabet_is_an_error() {
    let out = ltlfrag(&["check", "--formula", "a"]);
    assert_eq!(out.status.code(), Some(2));
}
