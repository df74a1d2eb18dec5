use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn oklr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oklr")).args(args).output().expect("run oklr")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = oklr(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn theta_good_words_of_the_doubled_root() {
    let v = json(&["words", "enum", "--weight", "1:2,-1:2", "--kind", "theta-good"]);
    let mut words: Vec<&str> = v["words"].as_array().unwrap().iter().map(|w| w.as_str().unwrap()).collect();
    words.sort();
    assert_eq!(words, ["1,-1", "1,1"]);
}

#[test]
fn shuffle_square_of_a_letter() {
    let v = json(&["shuffle", "mul", "1", "1"]);
    assert_eq!(v["terms"], serde_json::json!({"1,1": {"0": 1, "-2": 1}}));
    let table = String::from_utf8(oklr(&["shuffle", "mul", "1", "1"]).stdout).unwrap();
    assert!(table.lines().any(|l| l.starts_with("1,1") && l.ends_with("q^-2+1")), "{table}");
}

#[test]
fn words_may_start_with_a_negative_letter() {
    let v = json(&["shuffle", "mul", "-1", "1"]);
    assert_eq!(v["terms"], serde_json::json!({"-1,1": {"0": 1}, "1,-1": {"1": 1}}));
    let v = json(&["shuffle", "star", "-1", "-3", "--lambda", "1:1"]);
    assert_eq!(v["framing"], "1:1");
}

#[test]
fn one_simple_in_rank_one() {
    let v = json(&["char", "dims", "--weight", "1:1,-1:1"]);
    assert_eq!(v["simples"], 1);
    assert_eq!(v["tkpf"], 1);
}

#[test]
fn vacuum_action_depends_on_framing() {
    let v = json(&["shuffle", "star", "", "1"]);
    assert_eq!(v["terms"], serde_json::json!({"1": {"0": 1}, "-1": {"0": 1}}));
    let v = json(&["shuffle", "star", "", "1", "--lambda", "1:1"]);
    assert_eq!(v["terms"], serde_json::json!({"1": {"0": 1}, "-1": {"1": 1}}));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let out = oklr(&["words", "enum", "--weight", "1:2,-x", "--kind", "good"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position 4"), "{err}");

    let out = oklr(&["shuffle", "mul", "1,2", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("position 2"));

    assert_eq!(oklr(&["basis", "--weight", "1:1", "--kind", "pbw"]).status.code(), Some(2));
    assert_eq!(oklr(&["verify", "nothing"]).status.code(), Some(2));
    assert_eq!(oklr(&["verify", "pbw", "--n", "3"]).status.code(), Some(2));
    assert_eq!(oklr(&["verify", "klr", "--lambda", "0:1"]).status.code(), Some(2));
}

#[test]
fn failing_verification_exits_with_one() {
    let out = oklr(&["--format", "json", "verify", "pbw", "--degenerate-q", "--beta", "1:1,-1:1"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let fails: Vec<&Value> = v["entries"].as_array().unwrap().iter().filter(|e| e["status"] == "fail").collect();
    assert!(!fails.is_empty());
    assert!(fails.iter().all(|e| e["case"] == "t0^2"));
}

#[test]
fn passing_suites_exit_with_zero() {
    for args in [
        vec!["verify", "klr", "--lambda", "1:1"],
        vec!["verify", "grading", "--lambda", "1:1,3:2"],
        vec!["verify", "pbw", "--beta", "1:2,-1:2"],
        vec!["verify", "axioms", "--n", "3"],
        vec!["verify", "ek", "--n", "2", "--lambda", "1:1"],
        vec!["verify", "klr", "--plain", "--n", "2"],
    ] {
        let out = oklr(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["--format", "json", "basis", "--weight", "1:2,-1:2", "--kind", "canonical"],
        vec!["--format", "json", "char", "decomp", "--weight", "3:1,1:1,-1:1,-3:1"],
        vec!["--format", "csv", "char", "simple", "--weight", "1:2,-1:2"],
        vec!["--format", "json", "--jobs", "1", "verify", "klr"],
        vec!["--format", "json", "--jobs", "4", "verify", "klr"],
        vec!["--format", "json", "--seed", "7", "verify", "pbw"],
    ] {
        let a = oklr(&args);
        let b = oklr(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let one = oklr(&["--format", "json", "--jobs", "1", "verify", "grading"]);
    let four = oklr(&["--format", "json", "--jobs", "4", "verify", "grading"]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn cache_reload_matches_recompute() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    for weight in ["1:1,-1:1", "1:2,-1:2", "3:1,1:1,-1:1,-3:1"] {
        for (cmd, what) in [("basis", "pbw"), ("basis", "dual-canonical"), ("char", "simple"), ("char", "dims")] {
            let args: Vec<&str> = if cmd == "basis" {
                vec!["--format", "json", "basis", "--weight", weight, "--kind", what]
            } else {
                vec!["--format", "json", "char", what, "--weight", weight]
            };
            let fresh = oklr(&args).stdout;
            let mut with_cache = vec!["--cache-dir", cache];
            with_cache.extend_from_slice(&args);
            let first = oklr(&with_cache).stdout;
            let second = oklr(&with_cache).stdout;
            assert_eq!(fresh, first, "{args:?}");
            assert_eq!(fresh, second, "{args:?}");
        }
    }
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 12);
    for f in &files {
        let name = f.file_stem().unwrap().to_str().unwrap();
        assert_eq!(name.len(), 64);
        assert!(name.chars().all(|c| c.is_ascii_hexdigit()));
    }
}

#[test]
fn corrupted_cache_entry_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["--cache-dir", cache, "--format", "json", "char", "simple", "--weight", "1:2,-1:2"];
    let good = oklr(&args).stdout;
    let file = fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let text = fs::read_to_string(&file).unwrap();
    let mut entry: Value = serde_json::from_str(&text).unwrap();
    entry["payload"]["weight"] = Value::String("tampered".into());
    fs::write(&file, entry.to_string()).unwrap();
    let out = oklr(&args);
    assert!(out.status.success());
    assert_eq!(out.stdout, good);
    assert!(String::from_utf8(out.stderr).unwrap().contains("checksum mismatch"));
}
