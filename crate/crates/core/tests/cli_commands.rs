use std::path::Path;
use std::process::{Command, Output};

fn levisom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_levisom")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn dist_prints_exact_rationals() {
    let o = levisom(&["dist", "0", "1", "--theta", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1/2");
    let o = levisom(&["dist", "kitten", "sitting"]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = levisom(&["dist", "<eps>", "011", "--gamma", "3/2", "--oracle"]);
    assert_eq!(stdout(&o).trim(), "9/2");
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(levisom(&["dist", "0"]).status.code(), Some(2));
    assert_eq!(levisom(&["dist", "0#", "1"]).status.code(), Some(2));
    assert_eq!(levisom(&["dist", "0", "1", "--theta", "0.5"]).status.code(), Some(2));
    assert_eq!(levisom(&["matrix", "--lang", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(levisom(&["verify", "theorem3", "--graph", "k4", "--depth", "2"]).status.code(), Some(2));
    assert_eq!(levisom(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(levisom(&["--help"]).status.code(), Some(0));
}

#[test]
fn matrix_json_and_tsv() {
    let dir = tempfile::tempdir().unwrap();
    let lang = dir.path().join("prop4.txt");
    let o = levisom(&["construct", "prop4", "--n", "3", "--out", path_str(&lang)]);
    assert_eq!(o.status.code(), Some(0));

    let o = levisom(&["matrix", "--lang", path_str(&lang), "--theta", "2", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let words: Vec<&str> = json["words"].as_array().unwrap().iter().map(|w| w.as_str().unwrap()).collect();
    let (i, j) = (words.iter().position(|w| *w == "000").unwrap(), words.iter().position(|w| *w == "11").unwrap());
    assert_eq!(json["entries"][i][j], "5");

    let o = levisom(&["matrix", "--lang", path_str(&lang)]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 1 + 7);
    assert!(rows[0].starts_with('\t'));
    assert_eq!(rows[1].split('\t').count(), 1 + 7);
}

#[test]
fn construct_then_isom_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let lang = dir.path().join("k4.txt");
    assert_eq!(levisom(&["construct", "theorem2", "--graph", "K4", "--out", path_str(&lang)]).status.code(), Some(0));
    let o = levisom(&["isom", "--lang", path_str(&lang)]);
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["order"], "24");
    assert_eq!(json["degree"], 4);
    assert_eq!(json["orbit_sizes"], serde_json::json!([4]));
    let o = levisom(&["isom", "--lang", path_str(&lang), "--brute"]);
    let brute: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(brute["order"], "24");
    assert_eq!(levisom(&["growth", "--lang", path_str(&lang), "--n", "96"]).stdout, b"4\n");
}

#[test]
fn brute_force_beyond_degree_limit_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let lang = dir.path().join("markers.txt");
    levisom(&["construct", "theorem6", "--depth", "3", "--out", path_str(&lang)]);
    let o = levisom(&["isom", "--lang", path_str(&lang), "--brute"]);
    assert_eq!(o.status.code(), Some(3));
    let o = levisom(&["isom", "--lang", path_str(&lang)]);
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["order"], "34560");
}

#[test]
fn graphs_export_and_file_arguments() {
    let o = levisom(&["graphs"]);
    let listing = stdout(&o);
    for name in ["k4", "k33", "petersen", "frucht"] {
        assert!(listing.contains(name));
    }
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("petersen.dimacs");
    std::fs::write(&file, levisom(&["graphs", "--export", "petersen"]).stdout).unwrap();
    let lang = dir.path().join("p.txt");
    let o = levisom(&["construct", "theorem2", "--graph", path_str(&file), "--out", path_str(&lang)]);
    assert_eq!(o.status.code(), Some(0));
    let o = levisom(&["isom", "--lang", path_str(&lang)]);
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["order"], "120");
    assert_eq!(levisom(&["graphs", "--export", "cube"]).status.code(), Some(2));
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = levisom(&["verify", "metric", "--samples", "50", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["claim", "parameters", "pass", "checks", "violations", "witnesses", "statistics", "elapsed_ms"] {
        assert!(json.get(key).is_some(), "{key}");
    }
    assert_eq!(json["parameters"]["samples"], "50");

    let o = levisom(&["verify", "lemma5", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["pass"], false);
    assert!(!json["witnesses"].as_array().unwrap().is_empty());

    let o = levisom(&["verify", "theorem6", "--theta", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("theta = 2"));

    assert_eq!(levisom(&["verify", "theorem4", "--k", "3"]).status.code(), Some(0));
    assert_eq!(levisom(&["verify", "theorem4", "--k", "5"]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let run = || {
        let o = levisom(&["verify", "bounds", "--samples", "200", "--json"]);
        let mut json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        json.as_object_mut().unwrap().remove("elapsed_ms");
        json
    };
    assert_eq!(run(), run());
}
