use std::path::PathBuf;
use std::process::Command;

use clomul_cli::{run_args, Output};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_args(args.iter().copied())
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

/// Runs `args` with `--out` into a fresh file and returns its path.
fn write(name: &str, args: &[&str]) -> String {
    let path = tmp(name);
    let path_s = path.to_str().unwrap().to_string();
    let mut full: Vec<&str> = args.to_vec();
    full.extend(["--out", &path_s]);
    let out = run(&full);
    assert_eq!(out.code, 0, "{args:?}: {}", out.text);
    assert!(out.text.is_empty());
    path_s
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert_ne!(out.code, 2, "{}", out.text);
    (out.code, serde_json::from_str(&out.text).unwrap())
}

fn schema() -> jsonschema::JSONSchema {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&v).unwrap()
}

fn items(report: &Value) -> Vec<&Value> {
    report["targets"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|t| t["reports"].as_array().unwrap())
        .flat_map(|r| r["items"].as_array().unwrap())
        .collect()
}

#[test]
fn heyting2_checks_clean() {
    let out = run(&["check", "--suite", "all", "instance:heyting2"]);
    assert_eq!(out.code, 0, "{}", out.text);
    assert!(out.text.ends_with("0 fail, 0 skipped: PASS\n"));
    assert!(out.text.contains("CC3"));
}

#[test]
fn z2_inversion_round_trips() {
    let out = run(&["roundtrip", "instance:z2", "functor:inversion"]);
    assert_eq!(out.code, 0, "{}", out.text);
    assert!(out.text.contains("lift(U F) = F"));
    assert!(out.text.contains("U(lift Φ) = Φ"));
}

#[test]
fn broken_j_file_fails_at_cc1() {
    let path = write("broken-j.json", &["instance", "dump", "broken-j"]);
    let (code, v) = json(&["check", &format!("file:{path}")]);
    assert_eq!(code, 1);
    let cc1 = items(&v).into_iter().find(|i| i["check"] == "CC1").unwrap();
    assert_eq!(cc1["status"], "fail");
    assert!(cc1["loci"][0].as_str().unwrap().contains("X="));
    // a bare path works as well
    assert_eq!(run(&["check", &path]).code, 1);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["check", "instance:broken-compose"]).code, 1);
    assert_eq!(run(&["check", "file:/nonexistent/x.json"]).code, 2);
    assert_eq!(run(&["check", "instance:nope"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["check", "--budget", "hom=x"]).code, 2);
    assert_eq!(run(&["check", "--arity-cap", "0", "instance:z2"]).code, 2);
    assert_eq!(run(&["roundtrip", "instance:z2"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
    let bad = tmp("bad.json");
    std::fs::write(&bad, "{\"kind\": \"category\"").unwrap();
    assert_eq!(run(&["check", bad.to_str().unwrap()]).code, 2);
}

#[test]
fn binary_exit_status_and_streams() {
    let bin = env!("CARGO_BIN_EXE_clomul");
    let ok = Command::new(bin).args(["check", "instance:terminal"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("PASS"));
    let fail = Command::new(bin).args(["check", "instance:broken-l"]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let err = Command::new(bin).args(["check", "/nonexistent"]).output().unwrap();
    assert_eq!(err.status.code(), Some(2));
    assert!(err.stdout.is_empty());
    assert!(String::from_utf8_lossy(&err.stderr).starts_with("error:"));
}

#[test]
fn json_reports_match_the_schema() {
    let schema = schema();
    for args in [
        vec!["check"],
        vec!["check", "--suite", "axioms", "instance:z2", "instance:finset"],
        vec!["check", "--suite", "theorems", "instance:broken-j"],
        vec!["roundtrip", "instance:z3", "functor:twisted1"],
    ] {
        let (_, v) = json(&args);
        if let Err(errors) = schema.validate(&v) {
            let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
            panic!("{args:?}: {msgs:?}");
        };
    }
    // the schema rejects a failure without a locus
    let (_, mut v) = json(&["check", "instance:broken-compose"]);
    let item = v["targets"][0]["reports"][0]["items"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|i| i["status"] == "fail")
        .unwrap();
    item["loci"] = Value::Array(Vec::new());
    assert!(!schema.is_valid(&v));
}

#[test]
fn out_matches_stdout() {
    let path = write("heyting2-report.txt", &["check", "instance:heyting2"]);
    let direct = run(&["check", "instance:heyting2"]);
    assert_eq!(std::fs::read_to_string(path).unwrap(), direct.text);
}

#[test]
fn constructions_produce_checkable_files() {
    let u = write("und-z2.json", &["construct", "underlying", "instance:z2"]);
    let w = write("w-heyting2.json", &["construct", "ek", "instance:heyting2"]);
    let mc = write("mc-heyting2.json", &["represent", "instance:heyting2"]);
    let mc2 = write("mc-terminal.json", &["construct", "representing", "instance:terminal"]);
    for path in [&u, &w, &mc, &mc2] {
        let out = run(&["check", path]);
        assert_eq!(out.code, 0, "{path}: {}", out.text);
    }
    let (_, v) = json(&["check", &u]);
    assert!(items(&v).iter().any(|i| i["check"] == "CC4"));
    // finset is only lazily finite
    assert_eq!(run(&["construct", "ek", "instance:finset"]).code, 2);
    assert_eq!(run(&["construct", "underlying", "instance:heyting2"]).code, 2);
}

#[test]
fn file_round_trips_agree_with_instances() {
    let m = write("z3.json", &["instance", "dump", "z3"]);
    for f in ["inversion", "twisted2"] {
        let fp = write(&format!("z3-{f}.json"), &["instance", "dump", "z3", "--functor", f]);
        let (code, v) = json(&["roundtrip", &m, &fp]);
        assert_eq!(code, 0);
        let (_, native) = json(&["roundtrip", "instance:z3", &format!("functor:{f}")]);
        assert_eq!(v["summary"], native["summary"], "{f}");
        // with an explicit target
        assert_eq!(run(&["roundtrip", &m, &m, &fp]).code, 0);
    }
}

#[test]
fn listing_covers_the_registry() {
    let out = run(&["instance", "list", "--format", "json"]);
    assert_eq!(out.code, 0);
    let rows: Vec<Value> = serde_json::from_str(&out.text).unwrap();
    let fixtures: Vec<&Value> = rows.iter().filter(|r| r["expect"] == "fail").collect();
    assert!(fixtures.len() >= 4);
    assert!(fixtures.iter().all(|r| r["advertised"].is_string()));
    let text = run(&["instance", "list"]).text;
    for r in &rows {
        assert!(text.contains(r["name"].as_str().unwrap()));
    }
}

#[test]
fn dump_is_canonical() {
    let a = run(&["instance", "dump", "chain3"]);
    let path = write("chain3.json", &["instance", "dump", "chain3"]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), a.text);
    let doc = clomul::interchange::parse(&a.text).unwrap();
    assert_eq!(clomul::interchange::print(&doc).unwrap(), a.text);
}

#[test]
fn budgets_are_enforced() {
    let out = run(&["check", "--budget", "hom=1", "instance:finset"]);
    assert_eq!(out.code, 2, "{}", out.text);
    assert!(out.text.contains("budget"));
    assert_eq!(run(&["check", "--budget", "4096", "instance:heyting2"]).code, 0);
}

#[test]
fn shipped_fixture_matches_the_registry() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/fixtures/broken-j.json");
    assert_eq!(std::fs::read_to_string(path).unwrap(), run(&["instance", "dump", "broken-j"]).text);
    let out = run(&["check", &format!("file:{path}")]);
    assert_eq!(out.code, 1);
    assert!(out.text.contains("FAIL CC1 [CC1]"), "{}", out.text);
}
