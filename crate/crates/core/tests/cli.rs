use std::process::Command;

fn engel(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_engel"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn report_to_stdout_and_files() {
    let out = engel(&["report", "--group", "S3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["diameter"], 1);

    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("a4.json");
    let dot = dir.path().join("a4.dot");
    let out = engel(&[
        "report",
        "--group",
        "A4",
        "--json",
        json.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(
        (v["vertexCount"].as_u64(), v["planar"].as_bool()),
        (Some(8), Some(false))
    );
    assert_eq!(
        std::fs::read_to_string(dot)
            .unwrap()
            .matches(" -- ")
            .count(),
        24
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(engel(&["report", "--group", "D7"]).status.code(), Some(2));
    assert_eq!(
        engel(&["report", "--group", "@/no/such/file"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(engel(&["report"]).status.code(), Some(2));
    assert_eq!(
        engel(&["survey", "--max-order", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        engel(&["verify", "--max-order", "11"]).status.code(),
        Some(2)
    );
    assert_eq!(engel(&["frobnicate"]).status.code(), Some(2));
    // an Engel group has no graph to draw
    assert_eq!(
        engel(&["report", "--group", "C6", "--dot", "/dev/null"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn survey_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = engel(&[
        "survey",
        "--max-order",
        "24",
        "--jobs",
        "2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(dir.path().join("survey.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["reports"][0]["name"], "S3");
    assert!(v["summary"]["failedChecks"].as_array().unwrap().is_empty());

    let out = engel(&["survey", "--max-order", "12", "--families", "dihedral"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["checkedGroups"], serde_json::json!(["D10", "D12"]));
}

#[test]
fn verify_passes() {
    let out = engel(&["verify", "--max-order", "24"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.lines()
            .all(|l| l.starts_with("pass") || l.starts_with(' ')),
        "{text}"
    );
    assert!(text.contains("planarity: planar set = {S3, D12, Dic3, S3xC2}"));
}

#[test]
fn closure_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_engel"))
        .args(["report", "--group", "S5"])
        .env("ENGEL_CLOSURE_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("50"));
}
