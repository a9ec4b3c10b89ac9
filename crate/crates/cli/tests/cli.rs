//! End-to-end checks of the binary: exit statuses, file round-trips, and
//! numeric agreement between the output formats.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn cubewire(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubewire"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn formula_prints_the_number() {
    let out = cubewire(&["formula", "--n1", "2", "--n2", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "12");
}

#[test]
fn formula_formats_carry_identical_numbers() {
    let json = cubewire(&["formula", "--n1", "3", "--n2", "2", "--format", "json"]);
    let csv = cubewire(&["formula", "--n1", "3", "--n2", "2", "--format", "csv"]);
    assert!(json.status.success() && csv.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(parsed["wirelength"], 128);
    let csv_text = stdout(&csv);
    let mut lines = csv_text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    for (name, value) in header.iter().zip(&row) {
        if *name == "engine" {
            continue;
        }
        assert_eq!(
            parsed[*name].to_string(),
            *value,
            "field {name} differs between JSON and CSV"
        );
    }
}

#[test]
fn gray_file_feeds_the_engines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gray_32.txt");
    let out = cubewire(&["gray", "--n1", "3", "--n2", "2", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "128");

    let engines = cubewire(&["wirelength", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert!(engines.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&engines)).unwrap();
    let records = parsed.as_array().unwrap();
    assert_eq!(records.len(), 3);
    for record in records {
        assert_eq!(record["wirelength"], 128, "{}", record["engine"]);
    }
}

#[test]
fn gray_without_output_prints_the_file() {
    let out = cubewire(&["gray", "--n1", "2", "--n2", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("3 2 1\n"));
    assert_eq!(text.split_whitespace().count(), 3 + 8);
}

#[test]
fn theta_reports_bounds_for_big_types() {
    let exact = cubewire(&["theta", "6", "32", "--type", "6"]);
    assert_eq!(stdout(&exact).trim(), "52");
    let bound = cubewire(&["theta", "6", "32", "--type", "12", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&bound)).unwrap();
    assert_eq!(parsed["theta"], 48);
    assert_eq!(parsed["exact"], false);
}

#[test]
fn typeseq_and_reduce_on_the_bundled_example() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("example.txt");
    let emitted = cubewire(&["fixtures", "embedding"]);
    assert!(emitted.status.success());
    fs::write(&path, stdout(&emitted)).unwrap();

    let ts = cubewire(&["typeseq", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert!(ts.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&ts)).unwrap();
    assert_eq!(parsed["entries"][11], 17);
    assert_eq!(parsed["satisfied"], false); // big-type entry breaks the cap
    assert_eq!(parsed["condition"]["continuity"], true);

    let reduce = cubewire(&["reduce", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert!(reduce.status.success());
    let stages: serde_json::Value = serde_json::from_str(&stdout(&reduce)).unwrap();
    assert_eq!(stages.as_array().unwrap().len(), 7);
    assert_eq!(stages[0]["stage_name"], "input");
    assert_eq!(stages[6]["theta_sum"], 376);
}

#[test]
fn reduce_csv_matches_json_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gray.txt");
    cubewire(&["gray", "--n1", "3", "--n2", "1", "--output", path.to_str().unwrap()]);
    let json = cubewire(&["reduce", "--input", path.to_str().unwrap(), "--format", "json"]);
    let csv = cubewire(&["reduce", "--input", path.to_str().unwrap(), "--format", "csv"]);
    let stages: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let csv_text = stdout(&csv);
    let rows: Vec<&str> = csv_text.lines().skip(1).collect();
    assert_eq!(rows.len(), stages.as_array().unwrap().len());
    for (row, stage) in rows.iter().zip(stages.as_array().unwrap()) {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[0], stage["stage_name"]);
        assert_eq!(fields[3], stage["theta_sum"].to_string());
        let entries: Vec<String> = stage["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e.to_string())
            .collect();
        assert_eq!(&fields[4..], entries.as_slice());
    }
}

#[test]
fn brute_force_wirelength_subcommand() {
    let out = cubewire(&[
        "brute-force",
        "wirelength",
        "--n1",
        "2",
        "--n2",
        "1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["minimum"], 12);
    assert_eq!(parsed["nodes_explored"], 40320);
    assert_eq!(parsed["exhaustive"], true);
}

#[test]
fn brute_force_witness_is_a_loadable_optimum() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("witness.txt");
    let out = cubewire(&[
        "brute-force",
        "wirelength",
        "--n1",
        "2",
        "--n2",
        "1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let engines = cubewire(&["wirelength", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert!(engines.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&engines)).unwrap();
    for record in parsed.as_array().unwrap() {
        assert_eq!(record["wirelength"], 12);
    }
}

#[test]
fn verify_subcommands_exit_zero_on_success() {
    let engines = cubewire(&[
        "verify", "engines", "--n1", "2", "--n2", "2", "--trials", "50", "--seed", "7",
    ]);
    assert!(engines.status.success(), "{}", stdout(&engines));
    let columns = cubewire(&[
        "verify", "columns", "--n1", "2", "--n2", "2", "--trials", "50", "--seed", "7",
    ]);
    assert!(columns.status.success());
    let identities = cubewire(&["verify", "identities", "--max-n", "10", "--max-k", "4096"]);
    assert!(identities.status.success());
}

#[test]
fn fixtures_table_roundtrip_is_exact() {
    let out = cubewire(&["fixtures", "table1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("table reproduction: exact"));
}

#[test]
fn usage_and_format_errors_exit_two() {
    let out = cubewire(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.txt");
    fs::write(&path, "2 2 0\n1 2 2 4\n").unwrap();
    let out = cubewire(&["wirelength", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate label 2"));

    let missing = Path::new("/nonexistent/embedding.txt");
    let out = cubewire(&["wirelength", "--input", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seqmin_reports_search_results() {
    let out = cubewire(&["brute-force", "seqmin", "--n1", "3", "--n2", "2", "--format", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["minimum"], 80);
    assert_eq!(parsed["gray_value"], 80);
}
