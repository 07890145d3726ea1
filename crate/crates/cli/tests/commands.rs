use std::path::PathBuf;
use std::process::{Command, Output};

use mlat_cli::{catalog_docs, load_path, Kind};
use serde_json::Value;

fn catalog(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog").join(format!("{name}.json"))
}

fn mlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mlat")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = mlat(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(name: &str) -> String {
    catalog(name).display().to_string()
}

#[test]
fn shipped_fixtures_match_the_catalog() {
    for (name, doc) in catalog_docs() {
        let text = std::fs::read_to_string(catalog(&name)).unwrap();
        assert_eq!(text, doc.to_text(), "{name}: rerun the export_catalog example");
    }
}

#[test]
fn s3_fixture_loads_as_a_group_of_order_six() {
    let doc = load_path(&catalog("s3")).unwrap();
    assert_eq!(doc.kind, Kind::Group);
    assert_eq!(doc.n, 6);
}

#[test]
fn s3_commutator_lattice_is_hyperabelian() {
    let v = json(&["hyperabelian", &path("s3"), "--mult=commutator"]);
    let h = &v["hyperabelian"];
    for c in ["cond_a", "cond_b", "cond_c", "cond_d", "cond_e", "cond_f"] {
        assert_eq!(h[c], Value::Bool(true), "{c}");
    }
}

#[test]
fn truncated_dvr_has_one_prime() {
    let v = json(&["spec", &path("zp2")]);
    assert_eq!(v["spectrum"]["primes"], serde_json::json!(["c1"]));
}

#[test]
fn a5_is_perfect() {
    let v = json(&["classify", &path("a5")]);
    assert_eq!(v["classification"]["group"]["perfect"], Value::Bool(true));
    assert_eq!(v["classification"]["group"]["solvable"], Value::Bool(false));
}

#[test]
fn element_filter_narrows_series() {
    let v = json(&["series", &path("s3"), "--element=G"]);
    let elems = v["series"]["elements"].as_array().unwrap();
    assert_eq!(elems.len(), 1);
    assert_eq!(elems[0]["label"], "G");
    assert_eq!(elems[0]["derived"]["reached"], "1");
}

#[test]
fn brace_ybe_reports_the_solution() {
    let v = json(&["brace-ybe", &path("radical_2z8")]);
    assert_eq!(v["ybe"]["involutive"], Value::Bool(true));
    assert_eq!(v["ybe"]["braid_holds"], Value::Bool(true));
    assert_eq!(v["ybe"]["r"].as_array().unwrap().len(), 16);
}

#[test]
fn user_errors_exit_with_one() {
    let cases: Vec<Vec<String>> = vec![
        vec!["frobnicate".into(), path("s3")],
        vec!["lattice".into(), path("s3"), "--mult=product".into()],
        vec!["brace-ybe".into(), path("s3")],
        vec!["series".into(), path("s3"), "--element=nope".into()],
        vec!["hyperabelian".into(), path("n5_meet")],
        vec!["lattice".into(), "/nonexistent.json".into()],
        vec!["lattice".into(), path("s3"), "--out=xml".into()],
        vec!["lattice".into()],
    ];
    for args in cases {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = mlat(&refs);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn malformed_file_reports_a_line() {
    let dir = std::env::temp_dir().join(format!("mlat-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("bad.json");
    std::fs::write(&f, "{\n  \"kind\": \"group\",\n  \"n\": 2,\n  \"cayley\": [[0, 1], [1, 5]]\n}\n").unwrap();
    let out = mlat(&["validate", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    for args in [["report", "s4"], ["dot", "q8"], ["report", "trivial_q8"]] {
        let a = mlat(&[args[0], &path(args[1])]);
        let b = mlat(&[args[0], &path(args[1])]);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn dot_output_marks_primes_and_draws_spec() {
    let out = mlat(&["dot", &path("chain_meet_4"), "--spec"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert_eq!(s.matches("digraph").count(), 2);
    assert_eq!(s.matches("peripheries=2").count(), 3);
    let via_flag = mlat(&["lattice", &path("chain_meet_4"), "--out=dot"]);
    assert!(String::from_utf8(via_flag.stdout).unwrap().starts_with("digraph"));
}

#[test]
fn text_output_is_not_json() {
    let out = mlat(&["spec", &path("zp2"), "--out=text"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("primes: [c1]"), "{s}");
}

#[test]
fn json_keys_are_sorted() {
    let out = mlat(&["report", &path("c4")]);
    let s = String::from_utf8(out.stdout).unwrap();
    let top: Vec<&str> = s.lines().filter(|l| l.starts_with("  \"")).map(|l| l.split('"').nth(1).unwrap()).collect();
    let mut sorted = top.clone();
    sorted.sort();
    assert_eq!(top, sorted);
}

#[test]
fn help_exits_cleanly() {
    assert_eq!(mlat(&["--help"]).status.code(), Some(0));
}
