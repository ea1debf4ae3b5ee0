use std::process::{Command, Output};

fn levelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_levelab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--json", "--seed", "3", "reproduce", "--only", "3,7"];
    let a = levelab(&args);
    let b = levelab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn abelianization_text_and_json() {
    let out = levelab(&["--json", "symp", "abelianization", "--g", "2", "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["command"][2], "abelianization");
    assert!(v.to_string().contains("Z_2^6 + Z_4^4"));
    let out = levelab(&["symp", "abelianization", "--g", "2", "--d", "3"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("Z_3^10"));
}

#[test]
fn brown_fixture() {
    let out = levelab(&["--json", "brown", "--input", &fixture("surface_f_q1.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out).to_string().contains("\"brown\":7"));
}

#[test]
fn johnson_tau_on_bounding_pair() {
    let out = levelab(&["--json", "johnson", "tau", "--input", &fixture("bounding_pair_g3_d3.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out).to_string();
    assert!(v.contains("\"in_lambda3\":true"), "{v}");
}

#[test]
fn failed_check_exits_one() {
    let out = levelab(&["symp", "verify-lemma-matrix", "--a1", "2", "--b1", "2", "--a2", "1", "--d", "3", "--g", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = levelab(&["symp", "verify-lemma-matrix", "--a1", "1", "--b1", "0", "--a2", "-1", "--d", "2", "--g", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(levelab(&["symp", "abelianization", "--g", "x"]).status.code(), Some(2));
    assert_eq!(levelab(&["brown", "--input", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(levelab(&["johnson", "rank", "--g", "3", "--d", "4"]).status.code(), Some(2));
}

#[test]
fn module_quotient() {
    let out = levelab(&["--json", "module", "quotient", "--g", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out).to_string().contains("Z_2^20 + Z_4^15 + Z_8^6"));
}
