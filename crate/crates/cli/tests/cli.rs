//! End-to-end tests of the `csf` binary: JSON shapes, exit codes, and
//! character-table cache behavior.

use std::path::Path;
use std::process::{Command, Output};

use csf_cli::{read_table, write_table, EXIT_IO, EXIT_USAGE};
use csf_core::CharacterTable;
use serde_json::Value;

fn csf(cache_dir: &Path) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_csf"));
    cmd.env("CSF_CACHE_DIR", cache_dir);
    cmd
}

fn stdout_json(output: &Output) -> Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is one JSON document")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("process exited")
}

#[test]
fn spider_emits_the_fixed_labeling() {
    let dir = tempfile::tempdir().unwrap();
    let out = csf(dir.path()).args(["spider", "--nu", "2,1"]).output().unwrap();
    let doc = stdout_json(&out);
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["command"], "spider");
    assert_eq!(doc["results"]["vertices"], 8);
    let edges: Vec<[usize; 2]> =
        serde_json::from_value(doc["results"]["edges"].clone()).unwrap();
    assert_eq!(
        edges,
        [[0, 1], [0, 2], [0, 3], [0, 4], [1, 5], [1, 6], [2, 7]]
    );
}

#[test]
fn spider_of_nine_has_twenty_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let out = csf(dir.path()).args(["spider", "--nu", "9"]).output().unwrap();
    let doc = stdout_json(&out);
    assert_eq!(doc["results"]["vertices"], 20);
    assert_eq!(doc["results"]["edges"].as_array().unwrap().len(), 19);
}

#[test]
fn malformed_partitions_exit_with_usage_code() {
    let dir = tempfile::tempdir().unwrap();
    for bad in ["1,2", "0", "3,", "x", "2, 1"] {
        let out = csf(dir.path()).args(["spider", "--nu", bad]).output().unwrap();
        assert_eq!(exit_code(&out), EXIT_USAGE, "nu={bad:?}");
        assert!(out.stdout.is_empty(), "no JSON on failure for nu={bad:?}");
        let out = csf(dir.path()).args(["expand", "--nu", bad]).output().unwrap();
        assert_eq!(exit_code(&out), EXIT_USAGE, "nu={bad:?}");
    }
}

#[test]
fn usage_errors_from_the_parser_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let no_args = csf(dir.path()).output().unwrap();
    assert_eq!(exit_code(&no_args), 2);
    let unknown = csf(dir.path()).arg("frobnicate").output().unwrap();
    assert_eq!(exit_code(&unknown), 2);
    let missing = csf(dir.path()).arg("expand").output().unwrap();
    assert_eq!(exit_code(&missing), 2);
}

#[test]
fn expand_smallest_path_is_schur_positive() {
    let dir = tempfile::tempdir().unwrap();
    let out = csf(dir.path()).args(["expand", "--nu", "1"]).output().unwrap();
    let doc = stdout_json(&out);
    let results = &doc["results"];
    assert_eq!(results["nu"], serde_json::json!([1]));
    assert_eq!(results["vertices"], 4);
    assert_eq!(results["schur_positive"], true);
    assert_eq!(results["negative"], serde_json::json!([]));
    assert_eq!(
        results["schur"],
        serde_json::json!([
            { "lambda": [2, 2], "coeff": 2 },
            { "lambda": [2, 1, 1], "coeff": 4 },
            { "lambda": [1, 1, 1, 1], "coeff": 8 },
        ])
    );
}

#[test]
fn expand_writes_the_cache_under_the_env_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = csf(dir.path()).args(["expand", "--nu", "1"]).output().unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("chartable-4.txt").is_file());
}

#[test]
fn explicit_cache_flag_wins_over_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let custom = dir.path().join("nested").join("custom.txt");
    let out = csf(dir.path())
        .args(["expand", "--nu", "1", "--cache"])
        .arg(&custom)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(custom.is_file());
    assert!(!dir.path().join("chartable-4.txt").exists());
}

#[test]
fn verify_guards_zero_and_large_hub_degrees() {
    let dir = tempfile::tempdir().unwrap();
    let zero = csf(dir.path()).args(["verify", "--n", "0"]).output().unwrap();
    assert_eq!(exit_code(&zero), EXIT_USAGE);
    let eleven = csf(dir.path()).args(["verify", "--n", "11"]).output().unwrap();
    assert_eq!(exit_code(&eleven), EXIT_USAGE);
    let stderr = String::from_utf8_lossy(&eleven.stderr);
    assert!(stderr.contains("--force"), "stderr should point at --force: {stderr}");
}

#[test]
fn verify_report_file_follows_the_published_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.json");
    let out = csf(dir.path())
        .args(["verify", "--n", "2", "--out"])
        .arg(&out_path)
        .output()
        .unwrap();
    let doc = stdout_json(&out);
    assert_eq!(doc["results"]["verdict"], "COUNTEREXAMPLE-ABSENT");

    let text = std::fs::read_to_string(&out_path).unwrap();
    let file: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(file["schema_version"], "1");
    assert_eq!(file["n"], 2);
    assert_eq!(file["verdict"], "COUNTEREXAMPLE-ABSENT");
    let reports = file["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 1);
    let report = &reports[0];
    assert_eq!(report["nu"], serde_json::json!([1]));
    assert_eq!(report["vertices"], 4);
    assert_eq!(report["schur_positive"], true);
    assert!(report["schur"].as_array().unwrap().len() == 3);
    // The file carries no timing, and fields appear in the published order.
    assert!(file.get("timing").is_none());
    let order = ["schema_version", "n", "reports", "verdict"];
    let positions: Vec<usize> =
        order.iter().map(|k| text.find(&format!("\"{k}\"")).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "field order {positions:?}");
    // Partition arrays are descending.
    for term in report["schur"].as_array().unwrap() {
        let lambda: Vec<usize> = serde_json::from_value(term["lambda"].clone()).unwrap();
        assert!(lambda.windows(2).all(|w| w[0] >= w[1]));
    }
}

#[test]
fn chartable_small_tables_have_the_expected_entries() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t2.txt");
    let out = csf(dir.path())
        .args(["chartable", "--n", "2", "--cache"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("CHARTABLE v1 n=2 count=2"));
    let entries: Vec<&str> = lines.collect();
    assert_eq!(entries, ["2 2 1", "2 1,1 1", "1,1 2 -1", "1,1 1,1 1"]);

    let path4 = dir.path().join("t4.txt");
    csf(dir.path())
        .args(["chartable", "--n", "4", "--cache"])
        .arg(&path4)
        .output()
        .unwrap();
    let text4 = std::fs::read_to_string(&path4).unwrap();
    assert!(text4.lines().any(|l| l == "2,1,1 1,1,1,1 3"));
}

#[test]
fn chartable_reuses_a_valid_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t6.txt");
    let first = csf(dir.path())
        .args(["chartable", "--n", "6", "--cache"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(stdout_json(&first)["results"]["reused"], false);
    let second = csf(dir.path())
        .args(["chartable", "--n", "6", "--cache"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(stdout_json(&second)["results"]["reused"], true);
    let stderr = String::from_utf8_lossy(&second.stderr);
    assert!(stderr.contains("not recomputing"), "stderr: {stderr}");
}

#[test]
fn corrupted_caches_are_rebuilt_with_identical_results() {
    let dir = tempfile::tempdir().unwrap();
    let clean = csf(dir.path()).args(["expand", "--nu", "2"]).output().unwrap();
    let clean_doc = stdout_json(&clean);

    let cache = dir.path().join("chartable-6.txt");
    assert!(cache.is_file());
    for corruption in ["", "CHARTABLE v1 n=6 count=11\ngarbage", "not a table at all"] {
        std::fs::write(&cache, corruption).unwrap();
        let redo = csf(dir.path()).args(["expand", "--nu", "2"]).output().unwrap();
        let redo_doc = stdout_json(&redo);
        assert_eq!(redo_doc["results"], clean_doc["results"]);
        let stderr = String::from_utf8_lossy(&redo.stderr);
        assert!(stderr.contains("rejected"), "stderr: {stderr}");
    }
    // A tampered value (flipped sign) must also be caught, not trusted:
    // here the trivial-character tripwire fires.
    let text = std::fs::read_to_string(&cache).unwrap();
    let tampered = text.replacen("6 6 1", "6 6 -1", 1);
    assert_ne!(text, tampered);
    std::fs::write(&cache, tampered).unwrap();
    let redo = csf(dir.path()).args(["expand", "--nu", "2"]).output().unwrap();
    assert_eq!(stdout_json(&redo)["results"], clean_doc["results"]);
}

#[test]
fn chartable_degree_and_io_failures() {
    let dir = tempfile::tempdir().unwrap();
    let too_big = csf(dir.path())
        .args(["chartable", "--n", "23", "--cache"])
        .arg(dir.path().join("t23.txt"))
        .output()
        .unwrap();
    assert_eq!(exit_code(&too_big), EXIT_USAGE);

    let zero = csf(dir.path())
        .args(["chartable", "--n", "0", "--cache"])
        .arg(dir.path().join("t0.txt"))
        .output()
        .unwrap();
    assert_eq!(exit_code(&zero), EXIT_USAGE);

    // /dev/null is a file, so using it as a parent directory must fail.
    let unwritable = csf(dir.path())
        .args(["chartable", "--n", "2", "--cache", "/dev/null/nested/t.txt"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&unwritable), EXIT_IO);
}

#[test]
fn verify_out_io_failure_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let out = csf(dir.path())
        .args(["verify", "--n", "1", "--out", "/dev/null/nested/report.json"])
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), EXIT_IO);
}

#[test]
fn cache_round_trips_through_the_text_format() {
    let dir = tempfile::tempdir().unwrap();
    for n in 1..=8 {
        let built = CharacterTable::build(n).unwrap();
        let path = dir.path().join(format!("roundtrip-{n}.txt"));
        write_table(&built, &path).unwrap();
        let loaded = read_table(&path, n).unwrap();
        assert_eq!(loaded, built, "n={n}");
    }
}

#[test]
fn every_command_emits_exactly_one_json_document() {
    let dir = tempfile::tempdir().unwrap();
    let outputs = [
        csf(dir.path()).args(["spider", "--nu", "3,1"]).output().unwrap(),
        csf(dir.path()).args(["expand", "--nu", "1,1"]).output().unwrap(),
        csf(dir.path()).args(["verify", "--n", "2"]).output().unwrap(),
        csf(dir.path())
            .args(["chartable", "--n", "3", "--cache"])
            .arg(dir.path().join("t3.txt"))
            .output()
            .unwrap(),
    ];
    for out in &outputs {
        let doc = stdout_json(out);
        assert_eq!(doc["schema_version"], "1");
        assert!(doc["timing"]["total"].as_f64().unwrap() >= 0.0);
    }
}
