use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_doubleseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn spiral_prints_position() {
    let o = run(&["spiral", "--j", "10"]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "(1,4)");
    let o = run(&["spiral", "--j", "7", "--out", "json"]);
    assert_eq!(json(&o)["row"], 3);
}

#[test]
fn log_max_has_a_witness() {
    let o = run(&[
        "check-so",
        "--seq",
        "log_max",
        "--eps",
        "0.1",
        "--horizon",
        "10000",
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["status"], "verified");
    assert!(v["witness"]["alpha"].as_f64().unwrap() > 0.0);
    assert_eq!(v["certificate"]["status"], "verified");
}

#[test]
fn explicit_triple_reports_counterexample() {
    let o = run(&[
        "check-so",
        "--seq",
        "alternating",
        "--eps",
        "0.5",
        "--alpha",
        "0.5",
        "--delta",
        "0.5",
        "--n",
        "4",
        "--horizon",
        "5",
    ]);
    assert_eq!(code(&o), 1);
    let cx = &json(&o)["counterexample"];
    assert_eq!(
        (
            cx["k"].as_u64(),
            cx["l"].as_u64(),
            cx["s"].as_u64(),
            cx["t"].as_u64()
        ),
        (Some(4), Some(4), Some(4), Some(5))
    );
}

#[test]
fn cauchy_on_constant_passes() {
    let o = run(&[
        "check-cauchy",
        "--seq",
        "const",
        "--eps",
        "0.001",
        "--n",
        "1",
        "--horizon",
        "50",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["status"], "verified");
}

#[test]
fn pringsheim_and_limit() {
    let o = run(&[
        "check-pringsheim",
        "--seq",
        "log_max",
        "--limit",
        "3",
        "--eps",
        "1",
        "--n",
        "10",
        "--horizon",
        "100",
    ]);
    assert_eq!(code(&o), 1);
    let o = run(&[
        "limit",
        "--seq",
        "harmonic_sum",
        "--eps",
        "0.01",
        "--horizon",
        "512",
    ]);
    assert_eq!(code(&o), 0);
    assert!(json(&o)["limit"].as_f64().unwrap() < 0.01);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(
        code(&run(&[
            "check-so",
            "--seq",
            "no_such",
            "--eps",
            "0.1",
            "--horizon",
            "10"
        ])),
        64
    );
    assert_eq!(
        code(&run(&["check-cauchy", "--seq", "const", "--eps", "oops"])),
        64
    );
    assert_eq!(
        code(&run(&[
            "check-cauchy",
            "--seq",
            "const",
            "--n",
            "1",
            "--horizon",
            "5"
        ])),
        64
    );
    assert_eq!(code(&run(&["frobnicate"])), 64);
    assert_eq!(code(&run(&["campaign", "T9.9"])), 64);
    assert_eq!(
        code(&run(&[
            "check-cauchy",
            "--seq",
            "recip_grid",
            "--eps",
            "1",
            "--n",
            "1",
            "--horizon",
            "5"
        ])),
        64
    );
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn domain_errors_exit_1() {
    let o = run(&[
        "apply",
        "--fn",
        "sum",
        "--seq",
        "log_grid",
        "--horizon",
        "3",
    ]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("outside the domain"));
}

#[test]
fn csv_outputs() {
    let o = run(&["subseq", "--seq", "log_max", "--count", "3", "--out", "csv"]);
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,l,value");
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[3], "2,1,");

    let o = run(&[
        "apply",
        "--fn",
        "product",
        "--seq",
        "recip_grid",
        "--horizon",
        "2",
        "--out",
        "csv",
    ]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text, "k,l,value\n1,1,1\n1,2,0.5\n2,1,0.5\n2,2,0.25\n");
}

#[test]
fn subseq_rejects_non_increasing_lists() {
    let o = run(&[
        "subseq", "--seq", "log_max", "--count", "3", "--n-seq", "1,2,2", "--k-seq", "1,2,3",
    ]);
    assert_eq!(code(&o), 64);
}

#[test]
fn output_file_and_round_trip() {
    let dir = std::env::temp_dir().join(format!("doubleseq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = run(&[
        "check-pringsheim",
        "--seq",
        "harmonic_sum",
        "--limit",
        "0",
        "--eps",
        "0.05",
        "--n",
        "10",
        "--horizon",
        "100",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn uc_test_exit_codes() {
    assert_eq!(
        code(&run(&["uc-test", "--fn", "one_over_xy", "--eps", "1"])),
        1
    );
    let o = run(&["uc-test", "--fn", "sum", "--eps", "0.1", "--budget", "200"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["status"], "no_violation_found");
}

#[test]
fn campaigns_report_status() {
    let o = run(&["campaign", "T3.2", "--horizon", "1000"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["theorem_id"], "T3.2");
    assert_eq!(v["summary"]["pass"], 1);

    let o = run(&["campaign", "T3.4", "--family", "power", "--horizon", "200"]);
    assert_eq!(code(&o), 2);
    assert_eq!(json(&o)["cases"][0]["outcome"], "refused");

    let o = run(&[
        "campaign", "T3.3", "--fn", "sum", "--eps", "0.1", "--budget", "200", "--out", "csv",
    ]);
    assert_eq!(code(&o), 2);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("theorem_id,sequence,function,outcome,note\nT3.3,"));
    assert!(text.contains("inconclusive"));
}

#[test]
fn campaign_runs_are_byte_identical() {
    let args = [
        "campaign",
        "T3.1",
        "--fn",
        "sum10,constant",
        "--seq",
        "recip_grid,const_grid(0.5,0.25)",
        "--horizon",
        "300",
    ];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
}
