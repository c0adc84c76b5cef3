//! End-to-end tests for the `crystal` binary: every subcommand is exercised
//! through a real process, checking output shape, determinism and exit codes.

use std::process::{Command, Output};

fn crystal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crystal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn build_b_dot_has_all_vertices() {
    let out = crystal(&["build", "--type", "E6", "--what", "B", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("[label=").count(), 27);
    assert_eq!(text.matches("->").count(), 42);
}

#[test]
fn build_b_json_counts_elements() {
    let out = crystal(&["build", "--type", "E8", "--what", "B", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["type"], "E8");
    assert_eq!(doc["elements"].as_array().unwrap().len(), 249);
    let zero_arrows = doc["arrows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|a| a["color"] == 0)
        .count();
    assert_eq!(zero_arrows, 58);
}

#[test]
fn build_wall_fragment_is_closed_graph() {
    let out = crystal(&[
        "build", "--type", "E7", "--what", "wall", "--lambda", "0", "--depth", "2",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let n = doc["elements"].as_array().unwrap().len();
    assert!(n >= 3);
    for a in doc["arrows"].as_array().unwrap() {
        assert!((a["from"].as_u64().unwrap() as usize) < n);
        assert!((a["to"].as_u64().unwrap() as usize) < n);
    }
}

#[test]
fn build_is_deterministic() {
    let one = stdout(&crystal(&["build", "--type", "E6", "--what", "BxB", "--format", "json"]));
    let two = stdout(&crystal(&["build", "--type", "E6", "--what", "BxB", "--format", "json"]));
    assert_eq!(one, two);
}

#[test]
fn invalid_type_is_usage_error() {
    let out = crystal(&["build", "--type", "F4", "--what", "B"]);
    assert!(!out.status.success());
    assert_eq!(out.stdout.len(), 0);
}

#[test]
fn unknown_flag_exits_with_usage_code() {
    let out = crystal(&["build", "--nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_reduced_counts_walls() {
    let out = crystal(&["enumerate", "--type", "E6", "--model", "reduced", "--depth", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("2 walls"));
}

#[test]
fn enumerate_fock_highest_weight_matches_partition_numbers() {
    let out = crystal(&[
        "enumerate", "--type", "E8", "--model", "fock", "--hw-only", "--depth", "3",
    ]);
    assert!(out.status.success());
    // p(0) + p(1) + p(2) + p(3) = 1 + 1 + 2 + 3
    assert!(stdout(&out).contains("7 walls"));
}

#[test]
fn enumerate_depth_overflow_is_reported() {
    let out = crystal(&["enumerate", "--type", "E6", "--model", "reduced", "--depth", "9"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("DEPTH_OVERFLOW"));
}

#[test]
fn enumerate_cap_can_be_raised() {
    let out = crystal(&[
        "enumerate", "--type", "E6", "--model", "fock", "--hw-only", "--depth", "9",
        "--depth-cap", "9",
    ]);
    assert!(out.status.success());
    // sum of p(0)..p(9)
    assert!(stdout(&out).contains("97 walls"));
}

#[test]
fn verify_filter_runs_matching_checks_only() {
    let out = crystal(&["verify", "--only", "energy"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let rows = doc.as_array().unwrap();
    assert!(!rows.is_empty());
    for row in rows {
        assert_eq!(row["status"], "PASS");
        let hit = row["id"].as_str().unwrap().contains("energy")
            || row["subject"].as_str().unwrap().contains("energy");
        assert!(hit);
    }
}

#[test]
fn verify_rejects_unmatched_filter() {
    let out = crystal(&["verify", "--only", "no-such-check"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn tables_sigma_recomputation_passes() {
    let out = crystal(&["tables", "--type", "E6", "--sigma"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches(" PASS").count(), 28);
    assert!(text.contains("27 rows PASS"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn tables_ground_csv_has_header_and_rows() {
    let out = crystal(&["tables", "--type", "E7", "--ground", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "lambda,cycle,h_cycle,m_first6,status");
    assert_eq!(lines.len(), 3);
    assert!(lines[1..].iter().all(|l| l.ends_with("PASS")));
}

#[test]
fn energy_dump_csv_is_square() {
    let out = crystal(&["energy", "dump", "--type", "E6", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 27 * 27 + 1);
}

#[test]
fn column_show_names_blocks() {
    let out = crystal(&["column", "show", "--type", "E8", "--label", "vac"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("column class"));
    assert!(text.contains("block at slot"));
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = std::env::temp_dir().join("crystal-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("config.json");
    std::fs::write(&cfg, r#"{"type": "E6", "what": "b", "format": "json"}"#).unwrap();

    let out = crystal(&["build", "--config", cfg.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["type"], "E6");
    assert_eq!(doc["elements"].as_array().unwrap().len(), 27);

    // The command line overrides the file.
    let out = crystal(&["build", "--config", cfg.to_str().unwrap(), "--type", "E7"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["elements"].as_array().unwrap().len(), 56);
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join("crystal-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graph.dot");
    let out = crystal(&[
        "build", "--type", "E6", "--what", "C", "--format", "dot", "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(out.stdout.len(), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("digraph"));
}
