use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tau-atlas"))
        .args(args)
        .env("RUST_LOG", "warn")
        .env_remove("TAU_ATLAS_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn tilt_dot_n3() {
    let dot = stdout(&["tilt", "--n", "3", "--format", "dot"]);
    assert!(dot.starts_with("digraph tilt {"));
    assert_eq!(dot.matches("[label=\"w=[").count(), 6);
    assert_eq!(dot.matches(" -> ").count(), 6);
    assert!(dot.contains("w=[3,2,1]\\n3 | 3.2.3 | 3.2.13.2.3"));
}

#[test]
fn tilt_counts() {
    assert_eq!(json(&["tilt", "--n", "1"])["count"], 1);
    let v = json(&["tilt", "--n", "4", "--p", "3"]);
    assert_eq!(v["count"], 24);
    assert_eq!(v["tilting"].as_array().unwrap().len(), 24);
    assert_eq!(v["hasse"]["edge_count"], 36);
}

#[test]
fn stt_counts() {
    assert_eq!(json(&["stt", "--n", "2"])["count"], 6);
    let v = json(&["stt", "--n", "3"]);
    assert_eq!(v["count"], 24);
    assert_eq!(v["hasse"]["edge_count"], 36);
    let first = &v["pairs"][0];
    assert_eq!(first["word"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(first["support_complement"], serde_json::json!([]));
    assert_eq!(first["key"].as_str().unwrap().len(), 16);
}

#[test]
fn ideal_by_word_and_permutation() {
    let a = json(&["ideal", "--n", "3", "--word", "1,2,1"]);
    assert_eq!(a["loewy"], serde_json::json!(["3", "3.2.3", "3.2.13.2.3"]));
    let b = json(&["ideal", "--n", "3", "--word", "[3,2,1]", "--as", "perm"]);
    assert_eq!(a["loewy"], b["loewy"]);
    assert_eq!(a["ideal_dim"], b["ideal_dim"]);
}

#[test]
fn stt_of_words() {
    let top = json(&["stt-of", "--n", "2", "--word", ""]);
    assert_eq!(top["description"], "1.2 | 2.1.2");
    let bottom = json(&["stt-of", "--n", "2", "--word", "1,2,1"]);
    assert_eq!(bottom["description"], "0 ; P[1] at 1,2");
    assert_eq!(bottom["record"]["support_complement"], serde_json::json!([1, 2]));
    let same = json(&["stt-of", "--n", "2", "--word", "[3,2,1]", "--as", "perm"]);
    assert_eq!(bottom["record"]["key"], same["record"]["key"]);
}

#[test]
fn hasse_and_gamma() {
    let weak = stdout(&["hasse", "--of", "weak", "--n", "3", "--format", "dot"]);
    assert_eq!(weak.matches(" -> ").count(), 6);
    let g = json(&["gamma", "--n", "3"]);
    assert_eq!(g["count"], 24);
    assert_eq!(g["gamma_dim"], 10);
    assert!(g["pairs"][0]["source_key"].is_string());
    let dot = stdout(&["hasse", "--of", "gamma", "--n", "2", "--format", "dot"]);
    assert_eq!(dot.matches(" -> ").count(), 6);
}

#[test]
fn verify_passes() {
    for args in [&["verify", "--n", "1"][..], &["verify", "--n", "2"], &["verify", "--n", "3", "--p", "3", "--p2p3"]] {
        let v = json(args);
        assert_eq!(v["passed"], true, "{args:?}");
        assert_eq!(v["failed"], 0);
    }
}

#[test]
fn output_is_deterministic() {
    let a = run(&["stt", "--n", "3", "--threads", "1"]).stdout;
    let b = run(&["stt", "--n", "3", "--threads", "4"]).stdout;
    assert_eq!(a, b);
    let c = Command::new(env!("CARGO_BIN_EXE_tau-atlas"))
        .args(["stt", "--n", "3"])
        .env("TAU_ATLAS_THREADS", "3")
        .output()
        .unwrap()
        .stdout;
    assert_eq!(a, c);
    let dir = std::env::temp_dir().join(format!("tau-atlas-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("stt.json");
    let out = run(&["stt", "--n", "3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bad_input_exits_with_2() {
    for args in [
        &["ideal", "--n", "2", "--word", "5"][..],
        &["tilt", "--n", "2", "--p", "4"],
        &["ideal", "--n", "2", "--word", "1", "--format", "dot"],
        &["stt-of", "--n", "2", "--word", "[2,1]", "--as", "perm"],
        &["tilt", "--n", "0"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
