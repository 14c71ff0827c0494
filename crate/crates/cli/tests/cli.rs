use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn omega(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omega")).args(args).output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn ex310() -> String {
    fixture("ex310.json").display().to_string()
}

#[test]
fn exit_codes() {
    let f = ex310();
    assert_eq!(omega(&["-f", &f, "check-cotorsion", "C", "C"]).status.code(), Some(0));
    assert_eq!(omega(&["-f", &f, "verify-axioms", "C", "C"]).status.code(), Some(1));
    assert_eq!(omega(&["-f", &f, "check-cotorsion", "C", "NOPE"]).status.code(), Some(2));
    assert_eq!(omega(&["-f", "/nonexistent.json", "validate"]).status.code(), Some(2));
    assert_eq!(omega(&["-f", &f, "classify-morphism", "nope"]).status.code(), Some(2));
    let k = fixture("kxx2.json").display().to_string();
    assert_eq!(omega(&["-f", &k, "verify-axioms", "X", "omega"]).status.code(), Some(0));
}

#[test]
fn non_cotorsion_pair_fails() {
    let o = omega(&["-f", &ex310(), "--report", "json", "check-cotorsion", "ALL", "ALL"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["outcome"]["orthogonality"]["right"], false);
    assert_eq!(omega(&["-f", &ex310(), "check-cotorsion", "P", "ALL"]).status.code(), Some(0));
}

#[test]
fn json_report_is_deterministic() {
    let f = ex310();
    let run = || omega(&["-f", &f, "--report", "json", "--seed", "7", "verify-axioms", "C", "C"]).stdout;
    let (a, b) = (run(), run());
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["tool"], "omega");
    assert_eq!(v["outcome"]["axioms"]["seed"], 7);
    assert_eq!(v["fixture_sha256"].as_str().unwrap().len(), 64);
    assert_eq!(v["command"], "verify-axioms C C");
}

#[test]
fn out_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let dest = dir.path().join("r.json");
    let o = omega(&["-f", &ex310(), "--report", "json", "--out", dest.to_str().unwrap(), "ext-table"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&std::fs::read(dest).unwrap()).unwrap();
    assert_eq!(v["command"], "ext-table");
}

#[test]
fn inline_morphism_matches_named_one() {
    let f = ex310();
    let named = json(&omega(&["-f", &f, "--report", "json", "classify-morphism", "d"]));
    let inline = r#"{"source":"P2","target":"S2","maps":[[[]],[[1]],[]]}"#;
    let o = omega(&["-f", &f, "--report", "json", "classify-morphism", inline]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["outcome"]["classification"], named["outcome"]["classification"]);
    let bad = r#"{"source":"P2","target":"S2","maps":[[[1]],[[1]],[]]}"#;
    assert_eq!(omega(&["-f", &f, "classify-morphism", bad]).status.code(), Some(2));
}

#[test]
fn pair_flag_and_fixture_pair() {
    let f = ex310();
    let a = json(&omega(&["-f", &f, "--report", "json", "check-exactness"]));
    let b = json(&omega(&["-f", &f, "--report", "json", "--pair", "C,C", "check-exactness"]));
    let c = json(&omega(&["-f", &f, "--report", "json", "check-exactness", "C", "C"]));
    assert_eq!(a["outcome"], b["outcome"]);
    assert_eq!(a["outcome"], c["outcome"]);
}

#[test]
fn budget_override_reaches_report() {
    let o = omega(&["-f", &ex310(), "--report", "json", "--budget", "m_max=2", "ext-table"]);
    assert_eq!(json(&o)["budget"]["m_max"], 2);
    assert_eq!(omega(&["-f", &ex310(), "--budget", "bogus=1", "ext-table"]).status.code(), Some(2));
}

fn validate(text: &str) -> (i32, String) {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("f.json");
    std::fs::write(&p, text).unwrap();
    let o = omega(&["-f", p.to_str().unwrap(), "validate"]);
    (o.status.code().unwrap(), String::from_utf8_lossy(&o.stdout).into_owned() + &String::from_utf8_lossy(&o.stderr))
}

#[test]
fn validate_reports_relation_violation() {
    let src = std::fs::read_to_string(fixture("ex310.json")).unwrap();
    let mut v: Value = serde_json::from_str(&src).unwrap();
    v["modules"]["bad"] = serde_json::json!({"dims": [1, 1, 1], "maps": {"alpha": [[1]], "beta": [[1]]}});
    let (code, msg) = validate(&serde_json::to_string_pretty(&v).unwrap());
    assert_eq!(code, 2, "{msg}");
    assert!(msg.contains("bad"), "{msg}");
}

#[test]
fn validate_reports_dangling_generator() {
    let src = std::fs::read_to_string(fixture("ex310.json")).unwrap();
    let mut v: Value = serde_json::from_str(&src).unwrap();
    v["subcats"]["C"]["generators"].as_array_mut().unwrap().push("Q9".into());
    let (code, msg) = validate(&serde_json::to_string_pretty(&v).unwrap());
    assert_eq!(code, 2, "{msg}");
    assert!(msg.contains("Q9"), "{msg}");
}

#[test]
fn validate_reports_line_of_syntax_error() {
    let (code, msg) = validate("{\n  \"field\": {\"characteristic\": 2},\n  oops\n}");
    assert_eq!(code, 2);
    assert!(msg.contains(":3:"), "{msg}");
}

#[test]
fn every_fixture_validates() {
    for f in ["ex310.json", "kxx2.json", "ka2_tilt.json"] {
        let o = omega(&["-f", fixture(f).to_str().unwrap(), "validate"]);
        assert_eq!(o.status.code(), Some(0), "{f}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn text_report_names_counterexample() {
    let o = omega(&["-f", &ex310(), "verify-axioms", "C", "C"]);
    let out = String::from_utf8_lossy(&o.stdout);
    assert!(out.contains("counterexample: f: 0 -> S2, g: S2 -> 0"), "{out}");
    assert!(out.contains("re-verified from scratch: ✓"), "{out}");
}

#[test]
fn in_process_run_matches_binary() {
    let f = ex310();
    let args = ["omega", "-f", &f, "--report", "json", "ext-table"];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(omega_cli::run(args, &mut out, &mut err), omega_cli::EXIT_OK);
    assert_eq!(out, omega(&args[1..]).stdout);
}
