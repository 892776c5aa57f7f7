use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn halg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_halg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture_file(dir: &TempDir, name: &str) -> PathBuf {
    let out = halg(&["catalog", name]);
    assert_eq!(code(&out), 0);
    let path = dir.path().join(format!("{name}.json"));
    fs::write(&path, &out.stdout).unwrap();
    path
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const NON_ASSOC: &str = r#"{"format-version":"1","field":{"kind":"rationals"},"dim":2,"omega":["a"],
"kind":"matching-hom-assoc","families":{"dot":{"a":[[["1","0"],["0","0"]],[["0","1"],["1","0"]]]}},
"twist":[["1","0"],["0","1"]]}"#;

#[test]
fn check_passes_catalog_docs() {
    let dir = TempDir::new().unwrap();
    for name in ["Z2", "N2", "N2-Pnil-w0", "aff2-F3"] {
        let f = fixture_file(&dir, name);
        let out = halg(&["check", s(&f)]);
        assert_eq!(code(&out), 0, "{name}");
        assert!(stdout(&out).contains("\"verdict\":\"pass\""));
    }
}

#[test]
fn check_reports_witness() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.json", NON_ASSOC);
    let out = halg(&["check", s(&f)]);
    assert_eq!(code(&out), 2);
    let report: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let witnesses: Vec<&Value> = report["violations"].as_array().unwrap().iter().collect();
    assert!(witnesses.iter().any(|v| v["basis-indices"] == serde_json::json!([1, 2, 2])));
}

#[test]
fn check_rejects_truncated_file() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "cut.json", &NON_ASSOC[..40]);
    assert_eq!(code(&halg(&["check", s(&f)])), 1);
    assert_eq!(code(&halg(&["check", "/no/such/file.json"])), 1);
}

#[test]
fn check_side_conditions_and_verbose() {
    let dir = TempDir::new().unwrap();
    let f = fixture_file(&dir, "N2-Pnil-w0");
    assert_eq!(code(&halg(&["check", s(&f), "--condition", "commutes"])), 0);
    assert_eq!(code(&halg(&["check", s(&f), "--condition", "bogus"])), 1);
    let aff = fixture_file(&dir, "aff2");
    assert_eq!(code(&halg(&["check", s(&aff), "--verbose"])), 0);
    assert_eq!(
        code(&halg(&["check", s(&aff), "--axiom-toggle", "dendriform-axiom3-twist=off"])),
        0
    );
    assert_eq!(code(&halg(&["check", s(&aff), "--axiom-toggle", "nope=off"])), 1);
}

#[test]
fn construct_rb_to_dendriform() {
    let dir = TempDir::new().unwrap();
    let f = fixture_file(&dir, "N2-Pnil-w0");
    let out_path = dir.path().join("dend.json");
    let out = halg(&["construct", "rb-to-dendriform", s(&f), "-o", s(&out_path)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&fs::read(&out_path).unwrap()).unwrap();
    assert_eq!(doc["kind"], "matching-hom-dendriform");
    let one = serde_json::json!([[["0", "0"], ["0", "0"]], [["0", "0"], ["0", "0"]]]);
    assert_ne!(doc["families"]["left"]["a"], one);
    assert_eq!(doc["families"]["left"]["a"], doc["families"]["right"]["a"]);
    assert_eq!(code(&halg(&["check", s(&out_path)])), 0);
}

#[test]
fn construct_untwist_singular() {
    let dir = TempDir::new().unwrap();
    let f = fixture_file(&dir, "N2");
    let twisted = dir.path().join("t.json");
    let out = halg(&["construct", "derived", s(&f), "--param", "n=0,variant=1", "-o", s(&twisted)]);
    assert_eq!(code(&out), 0);
    assert_eq!(fs::read(&twisted).unwrap(), fs::read(&f).unwrap());

    let text = fs::read_to_string(&f).unwrap().replace(
        r#""twist":[["1","0"],["0","1"]]"#,
        r#""twist":[["0","0"],["1","0"]]"#,
    );
    let singular = write(&dir, "singular.json", &text);
    assert_eq!(code(&halg(&["construct", "untwist", s(&singular)])), 2);
}

#[test]
fn construct_parameters() {
    let dir = TempDir::new().unwrap();
    let f = fixture_file(&dir, "N2-Pnil-w0");
    let out = halg(&["construct", "yau-twist", s(&f), "--param", "p=[[1,0],[0,1]]"]);
    assert_eq!(code(&out), 0);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["kind"], "hom-assoc-matching-rb");
    assert_eq!(code(&halg(&["construct", "yau-twist", s(&f)])), 1);
    assert_eq!(code(&halg(&["construct", "yau-twist", s(&f), "--param", "p=[[1,0]]"])), 1);
    assert_eq!(code(&halg(&["construct", "yau-twist", s(&f), "--param", "p=[[0,0],[1,0]]"])), 2);

    let aff = fixture_file(&dir, "aff2");
    let out = halg(&["construct", "collapse", s(&aff), "--param", r#"coeffs={"a":"3/2"}"#]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&halg(&["construct", "collapse", s(&aff), "--param", r#"coeffs={"b":1}"#])), 1);
    assert_eq!(code(&halg(&["construct", "commutator", s(&aff)])), 2);
}

#[test]
fn diagram_on_nilpotent_family() {
    let dir = TempDir::new().unwrap();
    let f = fixture_file(&dir, "N2-Pnil-w0");
    assert_eq!(code(&halg(&["diagram", s(&f)])), 0);
    let weighted = fixture_file(&dir, "N2-id-wm1");
    assert_eq!(code(&halg(&["diagram", s(&weighted)])), 2);
}

#[test]
fn search_streams_documents() {
    let out = halg(&["search", "--fixture", "Z2-F2", "--target", "rb"]);
    assert_eq!(code(&out), 0);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 16);
    let dir = TempDir::new().unwrap();
    let first = write(&dir, "first.json", &lines[0]);
    assert_eq!(code(&halg(&["check", s(&first)])), 0);

    let limited = halg(&["search", "--fixture", "Z2-F2", "--limit", "3"]);
    assert_eq!(stdout(&limited).lines().count(), 3);

    let sampled = halg(&["search", "--fixture", "N2-F3", "--omega-size", "2", "--seed", "5", "--count", "3"]);
    let again = halg(&["search", "--fixture", "N2-F3", "--omega-size", "2", "--seed", "5", "--count", "3"]);
    assert_eq!(code(&sampled), 0);
    assert_eq!(sampled.stdout, again.stdout);

    assert_eq!(code(&halg(&["search", "--fixture", "N2"])), 2);
    assert_eq!(code(&halg(&["search", "--fixture", "N2-F3", "--omega-size", "3", "--budget", "100"])), 2);
    assert_eq!(code(&halg(&["search", "--fixture", "N2-F2", "--weights", "-1", "--omega-size", "2"])), 0);
    assert_eq!(code(&halg(&["search", "--fixture", "N2-F2", "--weights", "0,1,1", "--omega-size", "2"])), 1);
}

#[test]
fn catalog_unknown_name() {
    assert_eq!(code(&halg(&["catalog", "no-such"])), 1);
    assert_eq!(stdout(&halg(&["catalog"])).lines().count(), 18);
}
