use std::process::{Command, Output};

use msection_cli::report::{Output as ReportOutput, Report};

fn msection(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msection"))
        .args(args)
        .env_remove("MSECTION_OEIS_FETCH")
        .env("MSECTION_OEIS_CACHE", std::env::temp_dir().join("msection-cli-test-empty-cache"))
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Report, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = msection(&full);
    let report: Report = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json ({e}): {}", stdout(&out)));
    (report, out.status.code().unwrap())
}

#[test]
fn trisection_table() {
    let out = msection(&["msect", "0", "1", "1", "1", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("(p', q', r', s') = (0, 2, 4, 1)"), "{text}");
    assert!(text.contains("(2*x)/(1 - 4*x - x^2)"), "{text}");
    assert!(text.contains("(1 - x)/(1 - 4*x - x^2)"), "{text}");
    assert!(text.contains("(1 + x)/(1 - 4*x - x^2)"), "{text}");
    assert!(text.contains("result: pass"), "{text}");
}

#[test]
fn json_report_round_trips() {
    let (report, code) = json(&["msect", "0", "1", "1", "1", "3", "1"]);
    assert_eq!(code, 0);
    assert!(report.passed);
    let again: Report = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(again, report);
    match &report.outputs[0] {
        ReportOutput::Section { p_prime, q_prime, r_prime, s_prime, terms, .. } => {
            assert_eq!([p_prime, q_prime, r_prime, s_prime], ["1", "3", "4", "1"]);
            assert_eq!(&terms[..4], ["1", "3", "13", "55"]);
        }
        other => panic!("unexpected output {other:?}"),
    }
}

#[test]
fn negative_parameters_parse() {
    let (report, code) = json(&["msect", "2", "-1", "-3", "2", "2", "1"]);
    assert_eq!(code, 0, "{report:?}");
    assert!(report.passed);
}

#[test]
fn invalid_section_is_a_usage_error() {
    let out = msection(&["msect", "0", "1", "1", "1", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("m must be"));
    let out = msection(&["msect", "0", "1", "1", "0", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    assert_eq!(msection(&["bogus"]).status.code(), Some(2));
    assert_eq!(msection(&["--n-terms", "0", "ogf", "0", "1", "1", "1"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "master", "--m-max", "12"][..],
        &["verify", "cassini", "--n-min", "-10", "--n-max", "40"],
        &["verify", "bisection", "--m-max", "30"],
        &["verify", "vandermonde-cross", "--m-max", "6", "--r-max", "2"],
        &["verify", "s-section", "--m-max", "5"],
        &["verify", "triangle", "--m-max", "10", "--r-max", "3"],
    ] {
        let (report, code) = json(args);
        assert_eq!(code, 0, "{args:?}: {report:?}");
        assert!(report.checks.iter().all(|c| c.passed && c.cases > 0), "{args:?}");
    }
}

#[test]
fn seeded_verification_is_reproducible() {
    let args = ["--seed", "7", "verify", "vandermonde-cross", "--m-max", "4", "--samples", "5"];
    let (a, code) = json(&args);
    let (b, _) = json(&args);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    assert_eq!(a.inputs.get("seed").map(String::as_str), Some("7"));
}

#[test]
fn oeis_check_against_bundled_fixture() {
    let (report, code) = json(&["--offline", "oeis-check", "A014445", "msect:0,1,1,1,3,0"]);
    assert_eq!(code, 0);
    match &report.outputs[0] {
        ReportOutput::OeisMatch { provenance, match_length, compared, .. } => {
            assert_eq!(provenance, "bundled");
            assert_eq!(match_length, compared);
            assert!(*compared >= 20);
        }
        other => panic!("unexpected output {other:?}"),
    }
}

#[test]
fn misaligned_oeis_check_fails_with_status_one() {
    let out = msection(&["--offline", "oeis-check", "A015448", "msect:0,1,1,1,3,2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = msection(&["--offline", "oeis-check", "A015448", "msect:0,1,1,1,3,2", "--skip", "1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn missing_fixture_offline_is_reported() {
    let out = msection(&["--offline", "oeis-check", "A000001", "h01:1,1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("A000001") && err.contains("unavailable"), "{err}");
}

#[test]
fn s_section_and_triangle_commands() {
    let (report, code) = json(&["s-section", "4"]);
    assert_eq!(code, 0);
    assert_eq!(report.outputs.len(), 4);
    let out = msection(&["triangle", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("result: pass"));
}
