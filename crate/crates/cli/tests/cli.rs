use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ubgraph(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ubgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn kite_invariants() {
    let out = ubgraph(&["invariants", "--family", "kite:3"], "");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("uB=6 "), "{text}");
    assert!(text.contains("diameter=3 "), "{text}");
    assert!(text.contains("balanced=[true, true, false]"), "{text}");
}

#[test]
fn tube_json() {
    let out = ubgraph(
        &["invariants", "--family", "tube:3x3", "--format", "json"],
        "",
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "ubgraph-report/1");
    assert_eq!(v["graphs"][0]["unbalancedness"], 42);
}

#[test]
fn empty_input_is_an_empty_report() {
    let out = ubgraph(&["invariants"], "");
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
}

#[test]
fn malformed_input_reports_the_line() {
    let out = ubgraph(&["invariants"], "Bw\n\nA_x\n");
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn disconnected_graphs_are_counted() {
    let out = ubgraph(&["invariants", "--format", "csv"], "Bw\nB?\nBg\n");
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 3);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("skipped 1 disconnected"), "{err}");
}

#[test]
fn tree_table_csv() {
    let out = ubgraph(&["trees", "--orders", "3..8", "--format", "csv"], "");
    assert!(out.status.success());
    let expected = "n,min,min',max',max,#all,#min,#max\n\
                    3,2,-,-,2,1,1,1\n\
                    4,6,-,-,6,2,2,2\n\
                    5,12,14,14,16,3,1,1\n\
                    6,20,24,30,32,6,1,1\n\
                    7,30,38,54,56,11,1,1\n\
                    8,42,54,88,90,23,1,1\n";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn three_spiders_at_ten() {
    let out = ubgraph(
        &[
            "trees",
            "--orders",
            "10",
            "--max-attainers",
            "--format",
            "json",
        ],
        "",
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let trees = v["rows"][0]["max_attainers"].as_array().unwrap();
    assert_eq!(trees.len(), 3);
    assert!(trees.iter().all(|t| t["spider_legs"].is_array()));
}

#[test]
fn conjecture_columns() {
    let out = ubgraph(
        &[
            "trees",
            "--orders",
            "4..6",
            "--check-conjectures",
            "--format",
            "csv",
        ],
        "",
    );
    let text = stdout(&out);
    assert!(text.lines().nth(1).unwrap().ends_with(",-,-"), "{text}");
    assert!(
        text.lines().nth(3).unwrap().ends_with(",holds,holds"),
        "{text}"
    );
}

#[test]
fn graph_survey_builtin() {
    let out = ubgraph(&["graphs", "--orders", "3..5", "--format", "csv"], "");
    assert!(out.status.success());
    let rows: Vec<String> = stdout(&out).lines().skip(1).map(str::to_string).collect();
    assert_eq!(rows, ["3,2,1,2,1", "4,6,2,4,1", "5,21,2,4,2"]);
}

#[test]
fn regular_survey_all_balanced() {
    let out = ubgraph(&["regular", "--orders", "5"], "");
    assert!(out.status.success());
    assert!(stdout(&out).contains("all highly distance-balanced"));
}

#[test]
fn large_builtin_order_needs_input() {
    let out = ubgraph(&["graphs", "--orders", "8"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ingested_survey_and_output_file() {
    let dir = std::env::temp_dir().join(format!("ubgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("four.g6");
    // every connected graph of order 4
    std::fs::write(&input, "CF\nCU\nCV\nC]\nC^\nC~\n").unwrap();
    let output = dir.join("report.csv");
    let out = ubgraph(
        &[
            "graphs",
            "--input",
            input.to_str().unwrap(),
            "--format",
            "csv",
            "--output",
            output.to_str().unwrap(),
        ],
        "",
    );
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report = std::fs::read_to_string(&output).unwrap();
    assert_eq!(report.lines().nth(1), Some("4,6,2,4,1"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn family_command() {
    let out = ubgraph(&["family", "--family", "ss:4,2"], "");
    assert!(out.status.success());
    assert!(stdout(&out).contains("agrees"));
}

#[test]
fn unknown_family_lists_kinds() {
    let out = ubgraph(&["invariants", "--family", "hexagon:3"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("kite"));
}

#[test]
fn verify_passes_and_fault_fails() {
    let out = ubgraph(&["verify", "--grid", "tube:5"], "");
    assert!(out.status.success());
    assert!(stdout(&out).contains("12 checks, 0 mismatches"));
    let out = ubgraph(&["verify", "--inject-fault"], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("MISMATCH"));
}

#[test]
fn worker_count_does_not_change_output() {
    let one = ubgraph(
        &[
            "trees",
            "--orders",
            "9..11",
            "--workers",
            "1",
            "--max-attainers",
        ],
        "",
    );
    let two = ubgraph(
        &[
            "trees",
            "--orders",
            "9..11",
            "--workers",
            "2",
            "--max-attainers",
        ],
        "",
    );
    assert!(one.status.success());
    assert_eq!(one.stdout, two.stdout);
}
