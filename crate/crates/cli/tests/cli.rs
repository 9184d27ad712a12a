use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

/// Fixture path as a string that lives for the whole test run.
fn fx(name: &str) -> &'static str {
    Box::leak(fixture(name).into_os_string().into_string().unwrap().into_boxed_str())
}

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn travel<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_travel")).args(args).output().unwrap();
    Output {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = travel(&full);
    (out.code, serde_json::from_str(&out.stdout).expect("one JSON object"))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn temp_graph(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn golden_groupoid_on_c4() {
    let out = travel(&["check-groupoid", fx("c4.table"), "--graph", fx("c4.graph")]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let lines: Vec<&str> = out.stdout.lines().map(str::trim).collect();
    assert!(lines.contains(&"t1        ✓"));
    assert!(lines.contains(&"t2        ✓"));
    assert!(lines.iter().any(|l| l.starts_with("t3        ✗") && l.contains("(0, 2)")));
    assert!(lines.contains(&"t4        ✓"));
    assert!(lines.contains(&"t5        ✓"));
    assert!(lines.contains(&"on-graph  ✓"));
    assert!(lines.contains(&"classification: smooth, not simple"));
}

#[test]
fn golden_groupoid_is_not_on_p4() {
    let out = travel(&["check-groupoid", fx("c4.table"), "--graph", fx("p4.graph")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("on-graph  ✗"));
}

#[test]
fn singleton_groupoid_passes_everything() {
    let out = travel(&["check-groupoid", fx("k1.table"), "--graph", fx("k1.graph")]);
    assert_eq!(out.code, 0);
    assert!(!out.stdout.contains('✗'));
}

#[test]
fn non_travel_groupoid_fails() {
    let out = travel(&["check-groupoid", fx("left_projection.table")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("classification: not a travel groupoid"));
}

#[test]
fn malformed_table_is_a_parse_error() {
    let out = travel(&["check-groupoid", fx("malformed.table")]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 3"), "{}", out.stderr);
}

#[test]
fn missing_file_and_bad_usage_exit_2() {
    assert_eq!(travel(&["check-groupoid", "does-not-exist.table"]).code, 2);
    assert_eq!(travel(&["check-groupoid"]).code, 2);
    assert_eq!(travel(&["enumerate", fx("c4.graph"), "--filter", "round"]).code, 2);
    assert_eq!(travel::<&str>(&[]).code, 2);
}

#[test]
fn size_mismatch_is_an_input_error() {
    let out = travel(&["check-tps", fx("c4.tps.json"), fx("k1.graph")]);
    assert_eq!(out.code, 2);
}

#[test]
fn golden_system_on_c4() {
    let out = travel(&["check-tps", fx("c4.tps.json"), fx("c4.graph")]);
    assert_eq!(out.code, 0);
    for axiom in ["P0", "P1a", "P1b", "P1c", "P2", "R4", "R5"] {
        assert!(out.stdout.lines().any(|l| l.trim() == format!("{axiom:3}  ✓")), "{axiom}\n{}", out.stdout);
    }
    assert!(out.stdout.lines().any(|l| l.trim().starts_with("R3   ✗")));
}

#[test]
fn golden_system_on_p4_fails_p1b_and_p1c() {
    let out = travel(&["check-tps", fx("c4.tps.json"), fx("p4.graph")]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.lines().any(|l| l.trim().starts_with("P1b  ✗")));
    assert!(out.stdout.lines().any(|l| l.trim().starts_with("P1c  ✗")));
}

#[test]
fn singleton_system_passes_everything() {
    let out = travel(&["check-tps", fx("k1.tps.json"), fx("k1.graph")]);
    assert_eq!(out.code, 0);
    assert!(!out.stdout.contains('✗'));
}

#[test]
fn convert_round_trips_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let (graph, system) = (fixture("c4.graph"), fixture("c4.tps.json"));
    let table = dir.path().join("c4.table");
    let back = dir.path().join("c4.tps.json");
    let again = dir.path().join("again.table");

    assert_eq!(travel(&["convert", "to-groupoid", path(&system), path(&graph), path(&table)]).code, 0);
    assert_eq!(travel(&["convert", "to-tps", path(&table), path(&graph), path(&back)]).code, 0);
    assert_eq!(travel(&["convert", "to-groupoid", path(&back), path(&graph), path(&again)]).code, 0);

    assert_eq!(fs::read(&back).unwrap(), fs::read(&system).unwrap());
    assert_eq!(fs::read(&again).unwrap(), fs::read(&table).unwrap());
    let canonical_fixture: String = fs::read_to_string(fixture("c4.table"))
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(fs::read_to_string(&table).unwrap(), canonical_fixture);
}

#[test]
fn convert_refuses_invalid_input_naming_the_axiom() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("out");
    let out = travel(&[
        "convert",
        "to-tps",
        fx("left_projection.table"),
        fx("k2.graph"),
        path(&out_path),
    ]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("t2 failed"), "{}", out.stdout);
    assert!(!out_path.exists());

    let out = travel(&["convert", "to-groupoid", fx("c4.tps.json"), fx("p4.graph"), path(&out_path)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("P1b"));
    assert!(!out_path.exists());

    let out = travel(&["convert", "to-tps", fx("c4.table"), fx("p4.graph"), path(&out_path)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("on-graph failed"));
}

#[test]
fn enumerate_counts() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = temp_graph(dir.path(), "p3.graph", "n 3\n0 1\n1 2\n");
    let two = temp_graph(dir.path(), "2k1.graph", "n 2\n");
    let c4 = fixture("c4.graph");
    for (graph, total) in [(c4.as_path(), "total 16"), (p3.as_path(), "total 1"), (two.as_path(), "total 0")] {
        let out = travel(&["enumerate", path(graph)]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout.lines().nth(1), Some(total));
    }
    let out = travel(&["enumerate", path(&c4), "--count-only"]);
    assert!(out.stdout.contains("simple 4\nsmooth 16\nsemi-smooth 16\n"));
}

#[test]
fn enumerate_streams_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = fixture("c4.graph");
    let mut streams = Vec::new();
    for (i, jobs) in ["1", "1", "4"].iter().enumerate() {
        let out_path = dir.path().join(format!("run{i}.jsonl"));
        let out = travel(&["enumerate", path(&c4), "--jobs", jobs, "--out", path(&out_path)]);
        assert_eq!(out.code, 0);
        streams.push(fs::read(&out_path).unwrap());
    }
    assert_eq!(streams[0], streams[1]);
    assert_eq!(streams[0], streams[2]);
    let text = String::from_utf8(streams.swap_remove(0)).unwrap();
    assert_eq!(text.lines().count(), 16);
    let golden: Value = serde_json::from_str(&fs::read_to_string(fixture("c4.tps.json")).unwrap()).unwrap();
    assert!(text.lines().any(|l| serde_json::from_str::<Value>(l).unwrap() == golden));
}

#[test]
fn enumerate_filter_limits_the_stream() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("simple.jsonl");
    let (code, report) =
        json(&["enumerate", fx("c4.graph"), "--filter", "simple", "--out", path(&out_path)]);
    assert_eq!(code, 0);
    assert_eq!(report["enumeration"]["matching"], 4);
    assert_eq!(report["enumeration"]["filter"], "simple");
    assert_eq!(fs::read_to_string(&out_path).unwrap().lines().count(), 4);
}

#[test]
fn oracle_reports() {
    let out = travel(&["oracle", fx("c4.graph")]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().nth(1), Some("oracle 16, csp 16, match ✓"));
    let out = travel(&["oracle", fx("k1.graph")]);
    assert_eq!(out.stdout.lines().nth(1), Some("oracle 1, csp 1, match ✓"));

    let dir = tempfile::tempdir().unwrap();
    let big = temp_graph(dir.path(), "c9.graph", &format!(
        "n 9\n{}",
        (0..9).map(|i| format!("{} {}\n", i, (i + 1) % 9)).collect::<String>()
    ));
    let out = travel(&["oracle", path(&big)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("limit"));
}

/// Verdicts read off the text report: the outcome word and each axiom's mark.
fn text_verdicts(text: &str) -> (String, Vec<(String, bool)>) {
    let mut lines = text.lines();
    let outcome = lines.next().unwrap().rsplit(": ").next().unwrap().to_string();
    let axioms = lines
        .filter_map(|l| {
            let name = l.split_whitespace().next()?;
            let mark = l.split_whitespace().find(|w| *w == "✓" || *w == "✗")?;
            l.starts_with("  ").then(|| (name.to_string(), mark == "✓"))
        })
        .collect();
    (outcome, axioms)
}

fn json_verdicts(report: &Value) -> (String, Vec<(String, bool)>) {
    let mut axioms: Vec<(String, bool)> = report["axioms"]
        .as_array()
        .map(|a| {
            a.iter()
                .map(|r| (r["axiom"].as_str().unwrap().to_string(), r["holds"].as_bool().unwrap()))
                .collect()
        })
        .unwrap_or_default();
    if let Some(on_graph) = report["on_graph"].as_bool() {
        axioms.push(("on-graph".to_string(), on_graph));
    }
    if let Some(cv) = report.get("cross_validation") {
        axioms.push(("systems".to_string(), cv["sets_match"].as_bool().unwrap()));
        axioms.push(("tallies".to_string(), cv["tallies_match"].as_bool().unwrap()));
    }
    (report["outcome"].as_str().unwrap().to_string(), axioms)
}

#[test]
fn text_and_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let scratch = dir.path().join("out");
    let (c4, p4) = (fixture("c4.graph"), fixture("p4.graph"));
    let (table, system) = (fixture("c4.table"), fixture("c4.tps.json"));
    let runs: Vec<Vec<&str>> = vec![
        vec!["check-groupoid", path(&table), "--graph", path(&c4)],
        vec!["check-groupoid", path(&table), "--graph", path(&p4)],
        vec!["check-groupoid", path(&table), "--graph", path(&c4), "--as-routing"],
        vec!["check-groupoid", fx("left_projection.table")],
        vec!["check-tps", path(&system), path(&c4)],
        vec!["check-tps", path(&system), path(&p4)],
        vec!["convert", "to-groupoid", path(&system), path(&p4), path(&scratch)],
        vec!["enumerate", path(&c4), "--count-only"],
        vec!["oracle", path(&c4)],
        vec!["check-groupoid", fx("malformed.table")],
    ];
    for args in runs {
        let text = travel(&args);
        let (code, report) = json(&args);
        assert_eq!(text.code, code, "{args:?}");
        let shown = if code == 2 { &text.stderr } else { &text.stdout };
        let (text_outcome, mut text_axioms) = text_verdicts(shown);
        if report.get("cross_validation").is_some() {
            text_axioms.retain(|(name, _)| name == "systems" || name == "tallies");
        }
        let (json_outcome, json_axioms) = json_verdicts(&report);
        assert_eq!(text_outcome, json_outcome, "{args:?}");
        assert_eq!(text_axioms, json_axioms, "{args:?}");
    }
}

#[test]
fn routing_view_changes_presentation_only() {
    let args = ["check-groupoid", fx("c4.table"), "--graph", fx("c4.graph")];
    let (plain_code, mut plain) = json(&args);
    let mut routed_args = args.to_vec();
    routed_args.push("--as-routing");
    let (routed_code, mut routed) = json(&routed_args);
    assert_eq!(plain_code, routed_code);
    assert_eq!(routed["routing"][0], serde_json::json!([0, 1, 3, 3]));
    routed.as_object_mut().unwrap().remove("routing");
    plain.as_object_mut().unwrap().remove("routing");
    assert_eq!(plain, routed);
    assert!(travel(&routed_args).stdout.contains("next hop from u (row) toward v (column):"));
}

#[test]
fn witness_limit_caps_the_list() {
    let (_, report) = json(&["--witness-limit", "1", "check-groupoid", fx("c4.table")]);
    let t3 = &report["axioms"][2];
    assert_eq!(t3["axiom"], "t3");
    assert_eq!(t3["violations"], 4);
    assert_eq!(t3["witnesses"], serde_json::json!([[0, 2]]));
}
