//! End-to-end tests of the `gsq` binary: golden outputs against the library,
//! exit-code contracts, and pipeline composition.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use gsq::enumerate::{all_connected, all_trees, all_unicyclic};
use gsq::families::{broom, cycle, star};
use gsq::iso::{minimal_forbidden, ForbiddenMode, GraphClass};
use gsq::to_graph6;
use num::BigRational;

fn gsq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn gsq_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gsq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

// ---------------------------------------------------------------------------
// rho

#[test]
fn rho_squared_cycle_is_four() {
    let c6 = to_graph6(&cycle(6).unwrap());
    let out = gsq(&["rho", &c6, "--power", "2"]);
    assert_eq!(exit_code(&out), 0);
    let line = stdout_str(&out);
    assert!(line.starts_with("4.000000000000 residual="), "got {line:?}");
}

#[test]
fn rho_exact_flag_uses_the_oracle() {
    let c6 = to_graph6(&cycle(6).unwrap());
    let out = gsq(&["rho", &c6, "--power", "2", "--exact"]);
    assert_eq!(exit_code(&out), 0);
    let line = stdout_str(&out);
    assert!(line.starts_with("4.000000000000 width="), "got {line:?}");
    assert!(line.trim_end().ends_with("exact"));
}

#[test]
fn rho_exact_rejects_orders_above_the_cap() {
    let big = to_graph6(&cycle(13).unwrap());
    let out = gsq(&["rho", &big, "--exact"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn rho_reads_one_graph_per_stdin_line() {
    let lines = format!(
        "{}\n{}\n",
        to_graph6(&cycle(5).unwrap()),
        to_graph6(&star(5).unwrap())
    );
    let out = gsq_stdin(&["rho", "-"], &lines);
    assert_eq!(exit_code(&out), 0);
    let body = stdout_str(&out);
    let mut rows = body.lines();
    assert!(rows.next().unwrap().starts_with("2.000000000000"));
    assert!(rows.next().unwrap().starts_with("2.000000000000")); // sqrt(4)
    assert_eq!(rows.next(), None);
}

#[test]
fn rho_rejects_malformed_graph6() {
    let out = gsq(&["rho", "not graph6"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn rho_rejects_empty_stdin() {
    let out = gsq_stdin(&["rho", "-"], "");
    assert_eq!(exit_code(&out), 2);
}

// ---------------------------------------------------------------------------
// square / family composition

#[test]
fn square_verb_matches_library() {
    let g = broom(8, 4, 3).unwrap();
    let out = gsq(&["square", &to_graph6(&g)]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_str(&out).trim(), to_graph6(&g.square()));
}

#[test]
fn family_verb_builds_documented_specs() {
    let out = gsq(&["family", "broom:n=9,d=4,i=3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_str(&out).trim(), to_graph6(&broom(9, 4, 3).unwrap()));
}

#[test]
fn family_verb_rejects_bad_specs() {
    for spec in ["widget:n=4", "broom:n=9,d=4", "path:n=four", "path:n=4,n=5"] {
        let out = gsq(&["family", spec]);
        assert_eq!(exit_code(&out), 2, "spec {spec:?}");
    }
}

#[test]
fn family_pipes_into_square_and_rho() {
    let fam = gsq(&["family", "cycle:n=7"]);
    let sq = gsq_stdin(&["square"], &stdout_str(&fam));
    let rho = gsq_stdin(&["rho", "-"], &stdout_str(&sq));
    assert_eq!(exit_code(&rho), 0);
    // C_7^2 is 4-regular, so its radius is exactly 4.
    assert!(stdout_str(&rho).starts_with("4.000000000000"));
}

// ---------------------------------------------------------------------------
// enum

#[test]
fn enum_trees_matches_library_stream() {
    let out = gsq(&["enum", "trees", "--n", "7"]);
    assert_eq!(exit_code(&out), 0);
    let want: Vec<String> = all_trees(7)
        .unwrap()
        .graphs()
        .iter()
        .map(to_graph6)
        .collect();
    let got: Vec<String> = stdout_str(&out).lines().map(str::to_string).collect();
    assert_eq!(got.len(), 11);
    assert_eq!(got, want);
}

#[test]
fn enum_unicyclic_girth_filter_matches_library() {
    let out = gsq(&["enum", "unicyclic", "--n", "6", "--girth", "6"]);
    assert_eq!(exit_code(&out), 0);
    // the lone girth-6 unicyclic graph on 6 vertices is the cycle itself,
    // emitted under its canonical labeling
    let want: Vec<String> = all_unicyclic(6, Some(6))
        .unwrap()
        .graphs()
        .iter()
        .map(to_graph6)
        .collect();
    assert_eq!(stdout_str(&out).lines().collect::<Vec<_>>(), want);
    assert_eq!(want.len(), 1);

    let out = gsq(&["enum", "unicyclic", "--n", "7", "--girth", "4"]);
    let want = all_unicyclic(7, Some(4)).unwrap().len();
    assert_eq!(stdout_str(&out).lines().count(), want);
}

#[test]
fn enum_connected_counts_are_known() {
    let out = gsq(&["enum", "connected", "--n", "5"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_str(&out).lines().count(), 21);
    assert_eq!(all_connected(5).unwrap().len(), 21);
}

#[test]
fn enum_rejects_flag_class_mismatches() {
    for args in [
        ["enum", "trees", "--n", "6", "--girth", "3"],
        ["enum", "connected", "--n", "6", "--girth", "3"],
        ["enum", "unicyclic", "--n", "6", "--diameter", "3"],
        ["enum", "connected", "--n", "6", "--diameter", "3"],
    ] {
        let out = gsq(&args);
        assert_eq!(exit_code(&out), 2, "args {args:?}");
    }
}

#[test]
fn enum_rejects_orders_beyond_the_cap() {
    let out = gsq(&["enum", "connected", "--n", "10"]);
    assert_eq!(exit_code(&out), 2);
}

// ---------------------------------------------------------------------------
// forbidden

#[test]
fn forbidden_matches_library_in_both_modes() {
    let threshold = BigRational::from_integer(4.into());
    for (flag, mode) in [
        ("--strict", ForbiddenMode::Strict),
        ("--proper", ForbiddenMode::Proper),
    ] {
        let out = gsq(&[
            "forbidden",
            "--class",
            "tree",
            "--threshold",
            "4",
            "--n-max",
            "7",
            flag,
        ]);
        assert_eq!(exit_code(&out), 0);
        let want: Vec<String> = minimal_forbidden(GraphClass::Tree, &threshold, 7, mode)
            .unwrap()
            .iter()
            .map(to_graph6)
            .collect();
        let got: Vec<String> = stdout_str(&out).lines().map(str::to_string).collect();
        assert_eq!(got, want, "mode {flag}");
    }
}

#[test]
fn forbidden_accepts_fractional_and_decimal_thresholds() {
    let a = gsq(&[
        "forbidden",
        "--class",
        "tree",
        "--threshold",
        "9/2",
        "--n-max",
        "6",
    ]);
    let b = gsq(&[
        "forbidden",
        "--class",
        "tree",
        "--threshold",
        "4.5",
        "--n-max",
        "6",
    ]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(stdout_str(&a), stdout_str(&b));
}

#[test]
fn forbidden_rejects_bad_thresholds() {
    for t in ["zero", "1/0", ""] {
        let out = gsq(&[
            "forbidden",
            "--class",
            "tree",
            "--threshold",
            t,
            "--n-max",
            "6",
        ]);
        assert_eq!(exit_code(&out), 2, "threshold {t:?}");
    }
}

// ---------------------------------------------------------------------------
// verify / scan

#[test]
fn verify_emits_holds_json_with_exit_zero() {
    let out = gsq(&["verify", "check_connected_min", "--n-max", "6"]);
    assert_eq!(exit_code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report["status"], "HOLDS");
    assert!(report["claim"].as_str().unwrap().contains("path"));
    assert!(report["extremal_table"].as_array().unwrap().len() >= 3);
    assert!(report.get("runtime_ms").is_none(), "stable by default");
}

#[test]
fn verify_csv_has_documented_header_and_row_count() {
    let json = gsq(&["verify", "check_tree_extremes", "--n-max", "6"]);
    let csv = gsq(&[
        "verify",
        "check_tree_extremes",
        "--n-max",
        "6",
        "--format",
        "csv",
    ]);
    assert_eq!(exit_code(&csv), 0);
    let body = stdout_str(&csv);
    let mut lines = body.lines();
    assert_eq!(
        lines.next().unwrap(),
        "claim,range,status,n,param,role,graph6,radius,certificate,note"
    );
    let report: serde_json::Value = serde_json::from_str(&stdout_str(&json)).unwrap();
    let table_rows = report["extremal_table"].as_array().unwrap().len();
    let witness_rows = report["witnesses"].as_array().unwrap().len();
    assert_eq!(lines.count(), table_rows + witness_rows);
}

#[test]
fn verify_timings_flag_adds_runtime() {
    let out = gsq(&["verify", "check_connected_min", "--n-max", "5", "--timings"]);
    let report: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert!(report["runtime_ms"].is_u64());
}

#[test]
fn verify_rejects_unknown_claims_and_bad_ranges() {
    assert_eq!(exit_code(&gsq(&["verify", "no_such_claim"])), 2);
    let out = gsq(&[
        "verify",
        "check_tree_extremes",
        "--n-min",
        "9",
        "--n-max",
        "5",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn scan_conjecture1_holds_on_a_short_range() {
    let out = gsq(&["scan", "conjecture1", "--n-max", "12"]);
    assert_eq!(exit_code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report["status"], "HOLDS");
    assert_eq!(report["extremal_table"].as_array().unwrap().len(), 8);
}

#[test]
fn scan_rejects_unknown_targets() {
    assert_eq!(exit_code(&gsq(&["scan", "conjecture9", "--n-max", "8"])), 2);
}

#[test]
fn jobs_flag_and_env_give_byte_identical_reports() {
    let base = gsq(&[
        "--jobs",
        "1",
        "verify",
        "check_lemma_properties",
        "--trials",
        "40",
        "--seed",
        "9",
    ]);
    let par = gsq(&[
        "--jobs",
        "4",
        "verify",
        "check_lemma_properties",
        "--trials",
        "40",
        "--seed",
        "9",
    ]);
    assert_eq!(exit_code(&base), 0);
    assert_eq!(base.stdout, par.stdout);

    let via_env = Command::new(env!("CARGO_BIN_EXE_gsq"))
        .env("GSQ_JOBS", "2")
        .args([
            "verify",
            "check_lemma_properties",
            "--trials",
            "40",
            "--seed",
            "9",
        ])
        .output()
        .expect("binary runs");
    assert_eq!(base.stdout, via_env.stdout);
}
