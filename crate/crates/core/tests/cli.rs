use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn codezeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_codezeta")).args(args).output().expect("spawn codezeta")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = codezeta(&full);
    let v = serde_json::from_slice(&out.stdout).expect("json on stdout");
    (out.status.code().unwrap(), v)
}

#[test]
fn zeta_of_hamming() {
    let out = codezeta(&["zeta", &fixture("hamming74.code")]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("p: 1/5 + 2/5 T + 2/5 T^2"), "{text}");
    assert!(text.contains("functional_equation: true"));
}

#[test]
fn weights_json() {
    let (code, v) = json(&["weights", &fixture("ext_hamming84.code")]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "weights");
    assert_eq!(v["ok"], true);
    let counts: Vec<&str> = v["result"]["counts"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(counts, ["1", "0", "0", "0", "14", "0", "0", "0", "1"]);
    assert_eq!(v["result"]["d_dual"], 4);
}

#[test]
fn clifford_violation_exit_code() {
    let (code, v) = json(&["clifford", &fixture("code10.code"), "--exhaustive"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["first_violation"], serde_json::json!([2]));
    let (code, v) = json(&["clifford", &fixture("self_dual_sum4.code"), "--sample", "40", "--seed", "9"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["visited"], 40);
}

#[test]
fn extremal_ultraspherical() {
    let (code, v) = json(&["extremal", "--q", "4", "--c", "2", "--n", "6", "--ultraspherical"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["d"], 4);
    assert_eq!(v["result"]["ultraspherical"]["lambda"], "1/2");
    let (code, v) = json(&["extremal", "--q", "4", "--c", "2", "--n", "12", "--ultraspherical"]);
    assert_eq!(code, 0);
    for r in v["result"]["ultraspherical"]["radii"].as_array().unwrap() {
        assert!((r.as_f64().unwrap() - 0.5).abs() < 1e-9);
    }
}

#[test]
fn report_every_fixture() {
    for (name, expected) in [
        ("hamming74.code", 0),
        ("ext_hamming84.code", 0),
        ("hexacode.code", 0),
        ("repetition2.code", 0),
        ("self_dual_sum4.code", 0),
        ("code10.code", 1),
    ] {
        let (code, v) = json(&["report", &fixture(name)]);
        assert_eq!(code, expected, "{name}: {v}");
        assert_eq!(v["result"]["twovar"]["ok"], true, "{name}");
        assert_eq!(v["result"]["clifford"]["ok"], expected == 0, "{name}");
    }
}

#[test]
fn json_is_deterministic() {
    let a = codezeta(&["--json", "report", &fixture("hexacode.code")]);
    let b = codezeta(&["--json", "report", &fixture("hexacode.code")]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn thread_cap_gives_same_output() {
    let file = fixture("ext_hamming84.code");
    let base = codezeta(&["--json", "report", &file]);
    let capped = Command::new(env!("CARGO_BIN_EXE_codezeta"))
        .env("CODEZETA_THREADS", "1")
        .args(["--json", "report", &file])
        .output()
        .unwrap();
    assert_eq!(base.stdout, capped.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_codezeta"))
        .env("CODEZETA_THREADS", "many")
        .args(["weights", &file])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn operational_errors_exit_two() {
    assert_eq!(codezeta(&["zeta"]).status.code(), Some(2));
    assert_eq!(codezeta(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(codezeta(&["zeta", "/nonexistent/file.code"]).status.code(), Some(2));
    let dir = std::env::temp_dir().join(format!("codezeta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.code");
    std::fs::write(&bad, "2 3 1\n1 2 0\n").unwrap();
    let (code, v) = json(&["weights", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "parse");
    std::fs::write(&bad, "6 3 1\n1 0 0\n").unwrap();
    assert_eq!(codezeta(&["weights", bad.to_str().unwrap()]).status.code(), Some(2));
    let (code, v) = json(&["extremal", "--q", "2", "--c", "4", "--n", "12"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "invalid-parameters");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn help_exits_zero() {
    let out = codezeta(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("clifford"));
}
