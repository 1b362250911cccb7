//! End-to-end tests of the binary: exit codes, formats, determinism.

use std::process::{Command, Output};

const IDEAL_17_28: &str = "y^28 + x^2*y^26 + x^10*y^14 + x^11*y^12 + x^15*y^5 + x^17";
const BELOW_SEGMENT: &str = "x^7 + x^6*y + x*y^10 + y^14";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rrclosure"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn closure_reproduces_the_six_generator_ideal() {
    let out = run(&["closure", IDEAL_17_28]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains(
        "closure:         y^28 + x^2*y^26 + x^5*y^24 + x^7*y^22 + x^8*y^20 + x^10*y^14 + x^11*y^12 + x^13*y^10 + x^15*y^5 + x^17"
    ));
    assert!(text.contains("ratliff-rush:    no"));
    assert!(text.contains("reduction bound: 16"));
}

#[test]
fn closure_of_a_two_generator_ideal_is_itself() {
    let out = run(&["closure", "x^2 + y^3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("closure:         y^3 + x^2"));
    assert!(text.contains("ratliff-rush:    yes"));
}

#[test]
fn hypothesis_violation_exits_2_with_deficits() {
    let out = run(&["closure", BELOW_SEGMENT]);
    assert_eq!(code(&out), 2);
    let text = stdout(&out);
    assert!(text.contains("x^6*y — deficit 7/98"));
    assert!(text.contains("x*y^10 — deficit 14/98"));
}

#[test]
fn parse_errors_exit_1() {
    assert_eq!(code(&run(&["closure", "z^2 + w"])), 1);
    assert_eq!(code(&run(&["closure", "x^2 + x*y"])), 1); // no pure y power
    assert_eq!(code(&run(&["nonsense"])), 1);
    assert_eq!(code(&run(&["closure", "x^2 + y^3", "--format", "yaml"])), 1);
}

#[test]
fn check_exit_codes_follow_the_verdict() {
    assert_eq!(code(&run(&["check", "x^2 + y^3"])), 0);
    assert_eq!(code(&run(&["check", BELOW_SEGMENT])), 2);
}

#[test]
fn overflow_exits_4() {
    // The corner product no longer fits in 64 bits.
    let out = run(&["closure", "x^18446744073709551615 + y^2"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn machine_document_is_deterministic_and_well_formed() {
    let first = run(&["closure", IDEAL_17_28, "--format", "json-doc"]);
    let second = run(&["closure", IDEAL_17_28, "--format", "json-doc"]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let doc: serde_json::Value = serde_json::from_str(&stdout(&first)).expect("valid json");
    assert_eq!(doc["hypothesis"]["ok"], serde_json::json!(true));
    assert_eq!(doc["is_ratliff_rush"], serde_json::json!(false));
    assert_eq!(doc["reduction_bound"], serde_json::json!(16));
    assert_eq!(
        doc["closure"],
        serde_json::json!([
            [0, 28],
            [2, 26],
            [5, 24],
            [7, 22],
            [8, 20],
            [10, 14],
            [11, 12],
            [13, 10],
            [15, 5],
            [17, 0]
        ])
    );
    // The S/T sets carry both the minimal antichain and the full point set.
    assert_eq!(doc["S"]["minimal"].as_array().unwrap().len(), 10);
    assert_eq!(doc["T"]["minimal"].as_array().unwrap().len(), 11);
    assert_eq!(doc["ideal_S"].as_array().unwrap().len(), 10);
    assert_eq!(doc["ideal_T"].as_array().unwrap().len(), 11);
}

#[test]
fn oracle_matches_and_mismatch_exits_3() {
    let out = run(&["oracle", IDEAL_17_28]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("MATCH"));

    // The chain has not reached the closure after one step for this ideal.
    let truncated = run(&["oracle", IDEAL_17_28, "--max-power", "1"]);
    assert_eq!(code(&truncated), 3);
    assert!(stdout(&truncated).contains("MISMATCH"));
}

#[test]
fn oracle_suite_runs_from_a_seed() {
    let out = run(&["oracle", "--seed", "42", "--cases", "5"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("5 cases, 0 mismatches (seed 42)"));
}

#[test]
fn powers_reports_per_power_verdicts() {
    let out = run(&["powers", "x^7 + x^5*y^2 + y^5", "--upto", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "I^1: ratliff-rush\nI^2: ratliff-rush\nI^3: ratliff-rush\n");

    let out = run(&["powers", "x^35 + x^33*y^2 + x^4*y^26 + y^28", "--upto", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "I^1: not ratliff-rush\n");
}

#[test]
fn family_constructors_print_both_syntaxes() {
    let out = run(&["family", "crispin", "5", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "y^5 + x^3*y^2 + x^4*y + x^5\n[[0,5],[3,2],[4,1],[5,0]]\n");

    let out = run(&["family", "sigma", "20", "17", "2", "4", "3", "2", "3", "1"]);
    assert_eq!(code(&out), 0);
    let pairs: Vec<[u64; 2]> =
        serde_json::from_str(stdout(&out).lines().nth(1).unwrap()).expect("pair line");
    assert_eq!(pairs.len(), 9);

    let out = run(&["family", "gap", "8", "8"]);
    assert_eq!(code(&out), 0);
    let pairs: Vec<[u64; 2]> =
        serde_json::from_str(stdout(&out).lines().nth(1).unwrap()).expect("pair line");
    assert_eq!(pairs.len(), 6);

    // A middle generator below the corner segment is refused.
    assert_eq!(code(&run(&["family", "three", "7", "14", "6", "1"])), 2);
}

#[test]
fn family_output_reparses_to_the_same_report() {
    let family = run(&["family", "mk", "2", "2"]);
    let monomial_line = stdout(&family).lines().next().unwrap().to_string();
    let pair_line = stdout(&family).lines().nth(1).unwrap().to_string();
    let via_monomials = run(&["closure", &monomial_line, "--format", "json-doc"]);
    let via_pairs = run(&["closure", &pair_line, "--format", "json-doc"]);
    assert_eq!(code(&via_monomials), 0);
    assert_eq!(via_monomials.stdout, via_pairs.stdout);

    // Both routes agree with direct library composition.
    let lib = rrclosure::ratliff_rush_closure(&rrclosure::families::family_mk(2, 2).unwrap())
        .expect("family satisfies the hypothesis");
    let doc: serde_json::Value = serde_json::from_str(&stdout(&via_monomials)).unwrap();
    let lib_closure: Vec<[u64; 2]> = lib.closure.gens().iter().map(|g| [g.a, g.b]).collect();
    assert_eq!(doc["closure"], serde_json::json!(lib_closure));
}

#[test]
fn intclosure_prints_the_corner_staircase() {
    let out = run(&["intclosure", "5", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "y^5 + x*y^4 + x^2*y^3 + x^3*y^2 + x^4*y + x^5\n[[0,5],[1,4],[2,3],[3,2],[4,1],[5,0]]\n"
    );
}

#[test]
fn ascii_staircase_of_a_corner_ideal() {
    let out = run(&["staircase", "x^2 + y^3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "staircase on [0,2] x [0,3]\n\
         @##\n\
         ..#\n\
         ..#\n\
         ..@\n\
         legend: @ minimal generator, # inside the ideal, . outside\n"
    );
}

#[test]
fn overlay_marks_the_closure_only_points() {
    let out = run(&["staircase", IDEAL_17_28, "--overlay"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let grid: Vec<&str> = text.lines().collect();
    // Header on line 0, then row b sits on line 1 + (28 - b).
    let cell = |a: usize, b: usize| grid[1 + (28 - b)].as_bytes()[a] as char;
    assert_eq!(cell(5, 24), '*');
    assert_eq!(cell(7, 22), '*');
    assert_eq!(cell(8, 20), '*');
    assert_eq!(cell(13, 10), '*');
    assert_eq!(cell(4, 24), 's'); // in the S-ideal only
    assert_eq!(cell(8, 19), 't'); // in the T-ideal only
    assert_eq!(cell(0, 28), '@');
    assert_eq!(cell(0, 0), '.');
}

#[test]
fn overlay_of_the_gap_family_marks_the_midpoint() {
    // The run of generators between the quarter points collapses onto
    // x^4 y^4 in the closure.
    let out = run(&["staircase", "[[0,8],[2,6],[4,5],[5,4],[6,2],[8,0]]", "--overlay"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let grid: Vec<&str> = text.lines().collect();
    let cell = |a: usize, b: usize| grid[1 + (8 - b)].as_bytes()[a] as char;
    assert_eq!(cell(4, 4), '*');
    assert_eq!(cell(4, 5), '@');
    assert_eq!(cell(3, 5), '.');
}

#[test]
fn svg_goes_to_the_out_path() {
    let path = std::env::temp_dir().join("rrclosure-staircase-test.svg");
    let out = run(&[
        "staircase",
        "x^2 + y^3",
        "--format",
        "svg",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let content = std::fs::read_to_string(&path).expect("svg written");
    assert!(content.starts_with("<svg xmlns"));
    assert!(content.contains("viewBox=\"0 0 3 4\""));
    std::fs::remove_file(&path).ok();
}
