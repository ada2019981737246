use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fullsupport"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn info_reports_e8() {
    let out = run(&["info", "E8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("bruteTotal: 44"));
    assert!(text.contains("agree: true"));
}

#[test]
fn info_is_case_insensitive() {
    let out = run(&["info", "b2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["bruteTotal"], 2);
    assert_eq!(v[0]["bruteLong"], 1);
    assert_eq!(v[0]["bruteShort"], 1);
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["info", "D3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("A3"));
    assert_eq!(run(&["info", "X4"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--max-rank", "9"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--max-rank", "0"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--max-rank", "9"]).status.code(), Some(2));
}

#[test]
fn rank_two_table() {
    let out = run(&["table", "--max-rank", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let types: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap().to_string())
        .collect();
    assert_eq!(types, ["A1", "A2", "B2", "G2"]);
}

#[test]
fn json_table_is_flat() {
    let out = run(&["table", "--max-rank", "8", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 31);
    for row in rows {
        assert!(row
            .as_object()
            .unwrap()
            .values()
            .all(|x| !x.is_object() && !x.is_array()));
        assert_eq!(row["agree"], true);
    }
}

#[test]
fn markdown_is_deterministic() {
    let a = run(&["table"]);
    let b = run(&["table"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 2 + 31);
}

#[test]
fn verify_rank_one() {
    let out = run(&["verify", "--max-rank", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text
        .lines()
        .all(|l| !l.starts_with("PASS") || l.contains("A1")));
    assert!(text.contains("0 failed"));
}

#[test]
fn verify_deep_passes() {
    let out = run(&["verify", "--deep"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS charpoly     F4 α3 (short)"));
    assert!(text.contains("PASS normalizer   B3 α3 (short)"));
    assert!(text.contains("PASS bijection    F4"));
}
