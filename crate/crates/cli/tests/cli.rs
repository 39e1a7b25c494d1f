use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn gproj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gproj")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = gproj(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn analyze_reports_cm_free() {
    assert!(stdout(&["analyze", &fixture("a2")]).contains("CM-free: no perfect paths"));
    let text = stdout(&["analyze", &fixture("lambda_star")]);
    assert!(text.contains("perfect paths (11)"));
    assert!(text.contains("minimal perfect sequences (4)"));
}

#[test]
fn classify_lambda_star() {
    let text = stdout(&["classify", &fixture("lambda_star")]);
    assert!(text.contains("A4 x3") && text.contains("A3 x2"));
    assert!(text.contains("vertices 2, rad^5") && text.contains("vertices 1, rad^4"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "classify", &fixture("lambda_star")])).unwrap();
    assert_eq!(json["graded"][0]["typeA_size"], 4);
    assert_eq!(json["ungraded"][1]["radical_exponent"], 4);
}

#[test]
fn graded_hom_with_witness() {
    let args =
        ["hom", &fixture("lambda_star"), "--from=a1.a2.a3", "--to=a1.a2.a3.a1.a2", "--graded", "--shift=3"];
    let text = stdout(&args);
    assert!(text.starts_with("dim Hom(a1.a2.a3, a1.a2.a3.a1.a2(3)) = 1"));
    assert!(text.contains("witness a1.a2.a3.a1.a2.a3"));
    let args = ["hom", &fixture("lambda_star"), "--from=a1.a2", "--to=a4.a5"];
    assert!(stdout(&args).starts_with("dim Hom(a1.a2, a4.a5) = 0"));
}

#[test]
fn ar_quiver_dot_and_json() {
    let dot = stdout(&["ar-quiver", &fixture("lambda_star")]);
    assert_eq!(dot.matches(" [label=").count(), 11);
    assert_eq!(dot.matches("dir=none").count(), 11);
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["ar-quiver", &fixture("lambda_star"), "--format=json"])).unwrap();
    assert_eq!(json["arrows"].as_array().unwrap().len(), 16);
    let ball = stdout(&["--json", "ar-quiver", &fixture("lambda_star"), "--around=a3", "--radius=0"]);
    let ball: serde_json::Value = serde_json::from_str(&ball).unwrap();
    assert_eq!(ball["vertices"].as_array().unwrap().len(), 1);
    assert_eq!(ball["vertices"][0]["incomplete"], true);
}

#[test]
fn hasse_json_components() {
    let json = stdout(&["hasse", &fixture("lambda_star"), "--order=prec", "--format=json"]);
    let json: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(json["components"].as_array().unwrap().len(), 3);
    assert_eq!(json["sinks"], serde_json::json!(["a3", "a1.a2", "a4.a5"]));
}

#[test]
fn verify_passes() {
    let out = gproj(&["verify", &fixture("quadratic"), "--random=5", "--seed=3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("PASS  hom-oracle"));
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"vertices":["1"],"arrows":[{"id":"x","from":"1","to":"1"}],"relations":[["x"]]}"#,
    )
    .unwrap();
    let out = gproj(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("relation #0"));

    let out = gproj(&["hom", &fixture("lambda_star"), "--from=a1.a3", "--to=a3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--from=a1.a3"));

    let out = gproj(&["analyze", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_flag_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("ar.dot");
    stdout(&[
        "ar-quiver",
        &fixture("lambda_star"),
        "--graded",
        "--window=-2..1",
        "--output",
        target.to_str().unwrap(),
    ]);
    let first = std::fs::read(&target).unwrap();
    let again = stdout(&["ar-quiver", &fixture("lambda_star"), "--graded", "--window=-2..1"]);
    assert_eq!(first, again.into_bytes());
}
