//! End-to-end tests of the `quasiadj` binary against the checked-in corpus.

use std::path::{Path, PathBuf};
use std::process::Command;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quasiadj"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn run_on(cmd: &str, file: &str, extra: &[&str]) -> (i32, String, String) {
    let path = corpus(file);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

#[test]
fn resolve_table_matches_golden() {
    let (code, stdout, _) = run_on("resolve", "twocusps.germ", &[]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "divisors 5  branches 2\n\
         E1  self -5  canonical 1  neighbors E4 E5\n\
         E2  self -2  canonical 2  neighbors E4\n\
         E3  self -2  canonical 2  neighbors E5\n\
         E4  self -1  canonical 4  neighbors E1 E2\n\
         E5  self -1  canonical 4  neighbors E1 E3\n\
         branch f1  attach E5  valuations 2 2 3 4 6\n\
         branch f2  attach E4  valuations 2 3 2 6 4\n\
         rupture E4 E5\n"
    );
}

#[test]
fn resolve_same_data_from_germ_and_graph() {
    let (code_g, json_g, _) = run_on("resolve", "cusp.germ", &["--format", "json"]);
    let (code_h, json_h, _) = run_on("resolve", "cusp.graph", &["--format", "json"]);
    assert_eq!((code_g, code_h), (0, 0));
    assert_eq!(json_g, json_h);
    let value: serde_json::Value = serde_json::from_str(&json_g).unwrap();
    assert_eq!(value["mult"], serde_json::json!([[2, 3, 6]]));
    assert_eq!(value["rupture"], serde_json::json!([3]));
}

#[test]
fn spectrum_table_matches_golden() {
    let (code, stdout, _) = run_on("spectrum", "twocusps.germ", &["--weights", "1,2"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "weights 1,2\n\
         s = 1/16  multiplicity 1  mirrored -15/16\n\
         s = 1/14  multiplicity 1  mirrored -13/14\n\
         s = 3/16  multiplicity 1  mirrored -13/16\n\
         s = 3/14  multiplicity 1  mirrored -11/14\n\
         s = 5/14  multiplicity 1  mirrored -9/14\n\
         s = 1/2  multiplicity 1  mirrored -1/2\n\
         s = 9/16  multiplicity 1  mirrored -7/16\n\
         s = 11/16  multiplicity 1  mirrored -5/16\n"
    );
}

#[test]
fn diagonal_json_reports_faces_met() {
    let (code, stdout, _) = run_on("diagonal", "twocusps.germ", &["--format", "json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["faces_met"], serde_json::json!(6));
    let elements = value["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 3);
    assert_eq!(elements[0]["s"], serde_json::json!("1/10"));
    assert_eq!(elements[0]["multiplicity"], serde_json::json!(2));
    assert_eq!(elements[2]["mirrored"], serde_json::json!("-1/2"));
}

#[test]
fn diagonal_works_on_graph_input() {
    let (code, stdout, _) = run_on("diagonal", "ordinary3.graph", &[]);
    assert_eq!(code, 0);
    assert!(stdout.contains("s = 1/3  multiplicity 1"));
    assert!(stdout.contains("faces met 1"));
}

#[test]
fn bernstein_table_matches_golden() {
    let (code, stdout, _) = run_on("bernstein", "twocusps.germ", &[]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "4*s1+6*s2+5\n4*s1+6*s2+7\n4*s1+6*s2+9\n\
         6*s1+4*s2+5\n6*s1+4*s2+7\n6*s1+4*s2+9\n"
    );
}

#[test]
fn milnor_report_on_germ_and_refusal_on_graph() {
    let (code, stdout, _) = run_on("milnor", "twocusps.germ", &[]);
    assert_eq!(code, 0);
    assert!(stdout.contains("mu from blowup trace 11"));
    assert!(stdout.contains("mu from face formula 13"));
    assert!(stdout.contains("matches no"));

    let (code, _, stderr) = run_on("milnor", "cusp.graph", &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("blowup trace"));
}

#[test]
fn ideal_reports_gap_point_off_face() {
    let (code, stdout, _) = run_on("ideal", "twocusps.germ", &["--at", "5/16,10/16"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("at (5/16, 5/8)"));
    assert!(stdout.contains("on face: no"));

    let (code, stdout, _) = run_on("ideal", "twocusps.germ", &["--at", "11/16,3/8"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("on face: yes  depth 1"));
    assert!(stdout.contains("wall 4*x1+6*x2 = 5"));
}

#[test]
fn faces_svg_is_written_for_two_branches_only() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let svg_path = dir.join("twocusps-arrangement.svg");
    let path_str = svg_path.to_str().unwrap();
    let (code, stdout, _) = run_on("faces", "twocusps.germ", &["--svg", path_str]);
    assert_eq!(code, 0);
    assert!(stdout.contains("candidate walls 29"));
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("d=1"));

    let (code, _, stderr) = run_on("faces", "cusp.germ", &["--svg", path_str]);
    assert_eq!(code, 2);
    assert!(stderr.contains("two-branch"));
}

#[test]
fn rupture_only_restricts_candidates() {
    let (code, stdout, _) = run_on("faces", "twocusps.germ", &["--rupture-only"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("candidate walls 18"));
}

#[test]
fn invalid_inputs_use_distinct_exit_codes() {
    // Semantic germ errors: exit 1.
    let (code, _, stderr) = run_on("resolve", "bad.germ", &[]);
    assert_eq!(code, 1);
    assert!(stderr.contains("does not vanish"));

    let (code, _, stderr) = run_on("resolve", "badcenter.germ", &[]);
    assert_eq!(code, 1);
    assert!(stderr.contains("irrational"));

    // Unsupported extension: exit 2.
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let stray = dir.join("input.txt");
    std::fs::write(&stray, "f1 = x\n").unwrap();
    let (code, _, stderr) = run(&["resolve", stray.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains(".germ or .graph"));

    // Graph whose data breaks a structural invariant: exit 3.
    let broken = dir.join("broken.graph");
    std::fs::write(
        &broken,
        "divisors 3 branches 1\n\
         E 1 self -3 adj 3 a 2 c 1\n\
         E 2 self -2 adj 3 a 3 c 2\n\
         E 3 self -1 adj 1,2 a 5 c 4\n\
         branch 1 attach 3\n",
    )
    .unwrap();
    let (code, _, stderr) = run(&["resolve", broken.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert!(stderr.contains("validation"));

    // Bad weight vectors: exit 1 with a pointed message.
    let (code, _, stderr) = run_on("spectrum", "cusp.germ", &["--weights", "2,4"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("weight"));

    let (code, _, stderr) = run_on("ideal", "cusp.germ", &["--at", "3/2"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("cube"));
}
