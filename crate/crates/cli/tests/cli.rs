use std::process::{Command, Output};

use serde_json::Value;
use supersieve_core::sieve::CspReport;

fn supersieve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supersieve"))
        .args(args)
        .output()
        .expect("failed to run supersieve")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gf_of_three_by_two() {
    let out = supersieve(&["gf", "3,3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "q^3 + q^5 + q^6 + q^7 + q^9\n");
    let out = supersieve(&["gf", "2x3"]);
    assert_eq!(stdout(&out), "q^3 + q^5 + q^6 + q^7 + q^9\n");
}

#[test]
fn rect_csp_json_report() {
    let out = supersieve(&["verify", "rect-csp", "3,3", "--k", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: CspReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.verdict);
    assert_eq!(report.theorem, "rect-csp");
    assert_eq!((report.n, report.k, report.m), (6, Some(1), None));
    assert_eq!(
        report.polynomial.to_pairs(),
        vec![(-1, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5), (5, 4), (6, 3), (7, 2), (8, 1)]
    );
    assert_eq!(report.rows.len(), 6);
    assert_eq!(report.rows[0].fix, 30);
}

#[test]
fn json_round_trips_byte_for_byte() {
    let out = supersieve(&["verify", "trivial-csp", "2,2", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let reports: Vec<CspReport> = serde_json::from_str(&text).unwrap();
    assert_eq!(reports.len(), 5);
    assert_eq!(format!("{}\n", serde_json::to_string(&reports).unwrap()), text);
}

#[test]
fn output_is_stable_across_runs() {
    let args = ["verify", "mn", "--max-n", "6", "--format", "csv"];
    assert_eq!(supersieve(&args).stdout, supersieve(&args).stdout);
}

#[test]
fn negative_instance_exits_zero() {
    let out = supersieve(&["verify", "theorem-b", "2,1", "--m", "1", "--k", "0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["condition_holds"], false);
    assert_eq!(v["realizable"], false);
    assert_eq!(v["verdict"], true);
    assert!(v["evaluations"].as_array().unwrap().iter().any(|e| e["eval"] == -1));
}

#[test]
fn perturbation_exits_one() {
    let out = supersieve(&["verify", "rect-csp", "2,2", "--k", "1", "--perturb"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("MISMATCH"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(supersieve(&["gf", "3,5"]).status.code(), Some(2));
    assert_eq!(supersieve(&["gf", "3,0"]).status.code(), Some(2));
    assert_eq!(supersieve(&["verify", "rect-csp", "2,1"]).status.code(), Some(2));
    assert_eq!(supersieve(&["verify", "theorem-b", "2,1"]).status.code(), Some(2));
    assert_eq!(supersieve(&["verify", "rect-csp", "2,2", "--k", "9"]).status.code(), Some(2));
    assert_eq!(supersieve(&["verify", "mn", "2,2", "--d", "3"]).status.code(), Some(2));
    let out = supersieve(&["gf", "4,2,5"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("`5`"));
}

#[test]
fn sweeps_pass() {
    for check in ["rect-csp", "trivial-csp", "product-formula", "content-lemma", "mn"] {
        let out = supersieve(&["verify", check, "--max-n", "6"]);
        assert_eq!(out.status.code(), Some(0), "{check}: {}", stdout(&out));
    }
    let out = supersieve(&["verify", "theorem-b", "--max-n", "5", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn csv_rows() {
    let out = supersieve(&["verify", "rect-csp", "2,2", "--k", "0", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "theorem,shape,n,k,m,d,s,fix,eval,match");
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[1], "rect-csp,\"2,2\",4,0,,0,1,2,2,true");
}

#[test]
fn output_file_is_written() {
    let dir = std::env::temp_dir().join(format!("supersieve-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = supersieve(&[
        "verify",
        "rect-csp",
        "2,2",
        "--k",
        "2",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let report: CspReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report.verdict);
    let leftovers = std::fs::read_dir(&dir).unwrap().count();
    assert_eq!(leftovers, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn other_subcommands() {
    assert_eq!(stdout(&supersieve(&["count", "3,3"])), "5\n");
    let out = supersieve(&["bst", "3,3", "--strip-size", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 2);
    let out = supersieve(&["super-gf", "2", "--format", "json"]);
    assert_eq!(stdout(&out), "{\"shape\":\"2\",\"n\":2,\"grades\":[[[0,1]],[[0,1],[1,1]],[[1,1]]]}\n");
    let out = supersieve(&["promote", "1,2/3,4", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["length"], 2);
    let out = supersieve(&["promote", "1,2/3,4", "--negatives", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("~"));
}
