//! Interface tests: file round-trips, the command-line surface, and the
//! fail-closed behavior of the verifier on corrupted data and exhausted
//! precision.

use certipoly::dataio::{parse_univariate, render_univariate, DataSet};
use certipoly::kernel::{format_rational, parse_rational};
use certipoly::report::Report;
use certipoly::resultant::BivariatePolynomial;
use std::path::Path;
use std::process::Command;

fn data_dir() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn cli() -> Command {
    Command::new(env!("CARGO_BIN_EXE_certipoly"))
}

#[test]
fn polynomial_files_round_trip() {
    let d = DataSet::load(&data_dir()).unwrap();
    for p in [&d.p, &d.p2, &d.p4, &d.p5, &d.cubic_x0] {
        let text = render_univariate(p).unwrap();
        assert_eq!(&parse_univariate(&text).unwrap(), p);
    }
    let text = d.p3.render();
    assert_eq!(BivariatePolynomial::parse(&text).unwrap(), d.p3);
}

#[test]
fn rationals_round_trip() {
    for s in ["0", "1", "-7", "22/7", "-355/113", "118059162071741130342400000000"] {
        let q = parse_rational(s).unwrap();
        assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }
}

#[test]
fn reports_round_trip_through_json() {
    let out = cli()
        .args(["verify", "conjecture", "--json"])
        .arg("--data")
        .arg(data_dir())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let rep = Report::from_json(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(rep.suite, "conjecture");
    assert_eq!(rep.verdict, certipoly::report::Verdict::Certified);
    assert_eq!(Report::from_json(&rep.to_json()).unwrap().steps.len(), rep.steps.len());
}

#[test]
fn signlist_command_reports_counts() {
    let out = cli()
        .arg("signlist")
        .arg(data_dir().join("p2.poly"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("sign changes: 8"));
    assert!(text.contains("distinct real roots: 4"));
}

#[test]
fn isolate_command_brackets_the_cubic_root() {
    let out = cli()
        .arg("isolate")
        .arg(data_dir().join("cubic_x0.poly"))
        .args(["--range", "3", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("1 isolating interval(s)"));
    assert!(text.contains("4.113537611"));
}

#[test]
fn resultant_command_prints_the_eliminant() {
    let out = cli()
        .arg("resultant")
        .arg(data_dir().join("p2.poly"))
        .arg(data_dir().join("p3.bipoly"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r = parse_univariate(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(r.degree(), Some(80));
}

#[test]
fn verify_writes_a_report_file() {
    let tmp = std::env::temp_dir().join("certipoly_report_test.txt");
    let out = cli()
        .args(["verify", "theorem1"])
        .arg("--data")
        .arg(data_dir())
        .arg("--report")
        .arg(&tmp)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let written = std::fs::read_to_string(&tmp).unwrap();
    assert!(written.contains("verdict: certified"));
    std::fs::remove_file(&tmp).ok();
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = cli()
        .args(["verify", "nonsense"])
        .arg("--data")
        .arg(data_dir())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exhausted_precision_reports_indeterminate() {
    let out = cli()
        .args(["verify", "theorem1", "--bits", "8", "--max-bits", "8"])
        .arg("--data")
        .arg(data_dir())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("verdict: indeterminate"));
}

#[test]
fn corrupted_coefficient_flips_the_verdict() {
    // copy the data directory, bump one interior coefficient of p5 by
    // one (degree and leading coefficient stay valid), and verify that
    // the suite falsifies rather than certifying
    let tmp = std::env::temp_dir().join("certipoly_mutated_data");
    std::fs::remove_dir_all(&tmp).ok();
    std::fs::create_dir_all(&tmp).unwrap();
    for entry in std::fs::read_dir(data_dir()).unwrap() {
        let entry = entry.unwrap();
        std::fs::copy(entry.path(), tmp.join(entry.file_name())).unwrap();
    }
    let p5_path = tmp.join("p5.poly");
    let original = std::fs::read_to_string(&p5_path).unwrap();
    let mutated: Vec<String> = original
        .lines()
        .map(|line| {
            if let Some(rest) = line.strip_prefix("8 ") {
                let v = parse_rational(rest).unwrap() + parse_rational("1").unwrap();
                format!("8 {}", format_rational(&v))
            } else {
                line.to_string()
            }
        })
        .collect();
    std::fs::write(&p5_path, mutated.join("\n") + "\n").unwrap();

    let out = cli()
        .args(["verify", "theorem2"])
        .arg("--data")
        .arg(&tmp)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "stdout: {}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("verdict: falsified"));
    assert!(text.contains("[falsified] verify_factorization"));
    std::fs::remove_dir_all(&tmp).ok();
}
