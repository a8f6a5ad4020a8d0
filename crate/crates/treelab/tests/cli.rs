//! End-to-end checks of the command-line surface: exit codes, determinism,
//! and the documented invocations.

use std::process::{Command, Output};

fn treelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treelab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = treelab(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn complexity_of_the_five_cycle() {
    let out = stdout(&["complexity", "--family", "cycle", "--n", "5"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["treeCount"], "5");
    assert_eq!(v["treeCountClosedForm"], "5");
}

#[test]
fn synchrony_exhaustive_matches_hand_enumeration() {
    let out = stdout(&[
        "synchrony", "--family", "cycle", "--n", "4", "--threshold", "2", "--k", "2",
        "--exhaustive",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pK"]["num"], "1");
    assert_eq!(v["pK"]["den"], "3");
    assert_eq!(v["eK"]["num"], "1");
    assert_eq!(v["eK"]["den"], "3");
}

#[test]
fn filtrate_small_regular_class() {
    let out = stdout(&[
        "filtrate", "--order", "6", "--size", "9", "--regular-only", "--max-r", "3",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["maxTreeCount"], "81");
    assert_eq!(v["championTriangleCount"], 0);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "synchrony", "--family", "petersen", "--threshold", "2", "--k", "3", "--samples",
        "500", "--rng-seed", "0",
    ];
    assert_eq!(stdout(&args), stdout(&args));

    // worker count must not change filtration output
    let base = [
        "filtrate", "--order", "6", "--size", "8", "--workers", "1",
    ];
    let two = [
        "filtrate", "--order", "6", "--size", "8", "--workers", "2",
    ];
    assert_eq!(stdout(&base), stdout(&two));
}

#[test]
fn gen_round_trips_through_both_formats() {
    let edge_list = stdout(&["gen", "--family", "petersen"]);
    assert!(edge_list.starts_with("10 15\n"));
    let g6 = stdout(&["gen", "--family", "petersen", "--out-format", "graph6"]);
    let parsed = treelab::io::parse_graph6(g6.trim_end().as_bytes()).unwrap();
    assert_eq!(parsed.order(), 10);
    assert_eq!(parsed.size(), 15);
    let reparsed = treelab::io::parse_edge_list(&edge_list).unwrap();
    assert_eq!(reparsed, parsed);
}

#[test]
fn stats_reports_the_degree_story() {
    let out = stdout(&["stats", "--family", "rook3x3", "--walks", "3"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["triangleCount"], 6);
    assert_eq!(v["regular"], true);
    // Tr(A^3) = 6 * triangles
    assert_eq!(v["closedWalkCount"], "36");
    assert_eq!(v["srgParams"]["k"], 4);
}

#[test]
fn spectrum_detects_two_eigenvalue_structure() {
    let out = stdout(&["spectrum", "--family", "rook3x3"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["twoEigenvalue"]["n1"], 4);
    assert_eq!(v["twoEigenvalue"]["x1"], 6.0);
    assert_eq!(v["twoEigenvalue"]["x2"], 3.0);
}

#[test]
fn verify_srg_passes_and_reports_mismatches() {
    let good = stdout(&[
        "verify-srg", "--family", "petersen", "--expected", "10,3,0,1",
    ]);
    let v: serde_json::Value = serde_json::from_str(&good).unwrap();
    assert_eq!(v["verification"]["passed"], true);

    let bad = stdout(&[
        "verify-srg", "--family", "complete", "--n", "4", "--expected", "10,3,0,1",
    ]);
    let v: serde_json::Value = serde_json::from_str(&bad).unwrap();
    assert_eq!(v["verification"]["passed"], false);
    assert!(!v["verification"]["mismatches"].as_array().unwrap().is_empty());
}

#[test]
fn exit_codes_separate_usage_from_domain_errors() {
    // no input source: usage error, exit 2
    let out = treelab(&["complexity"]);
    assert_eq!(out.status.code(), Some(2));

    // both input sources: usage error, exit 2
    let out = treelab(&[
        "complexity", "--family", "cycle", "--n", "5", "--input", "nowhere.g6",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // domain error from the family constructor: exit 1
    let out = treelab(&["complexity", "--family", "cycle", "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));

    // envelope violation: exit 1
    let out = treelab(&["filtrate", "--order", "11", "--size", "20"]);
    assert_eq!(out.status.code(), Some(1));

    // unknown flag: clap usage error, exit 2
    let out = treelab(&["complexity", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_format_renders_the_same_document() {
    let json = stdout(&["complexity", "--family", "cycle", "--n", "5"]);
    let text = stdout(&["--format", "text", "complexity", "--family", "cycle", "--n", "5"]);
    assert!(json.contains("\"treeCount\": \"5\""));
    assert!(text.contains("treeCount: 5"));
    assert!(!text.contains('{'));
}

#[test]
fn expander_series_carries_estimate_labels() {
    let out = stdout(&[
        "expander", "--series", "moebius-ladder", "--from", "6", "--to", "20", "--step", "2",
        "--tail", "3",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["points"][0]["treeCount"], "81");
    assert_eq!(v["points"][1]["treeCount"], "392");
    assert!(v["estimateNote"].as_str().unwrap().contains("estimate"));
}

#[test]
fn complement_duality_via_cli() {
    let out = stdout(&["complement", "--family", "petersen"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["duality"]["complementTriangleCount"], 30);
    assert_eq!(v["duality"]["passed"], true);
}

#[test]
fn trajectory_mode_reports_one_based_sets() {
    let out = stdout(&[
        "synchrony", "--family", "cycle", "--n", "4", "--threshold", "1", "--seed-vertices", "1",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["iStar"], 2);
    assert_eq!(v["trajectory"][0], serde_json::json!([1]));
    assert_eq!(v["trajectory"][2], serde_json::json!([1, 2, 3, 4]));
}
