//! End-to-end runs of the binary and of `cli::run`.

use std::process::Command;

use icotile::catalog::TileRecord;
use icotile::checks::CheckOutcome;
use icotile::cli::{run, InflateOutput, LedgerLine, Outcome};
use icotile::SpectralData;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("icotile").chain(args.iter().copied()))
}

fn bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_icotile")).args(args).output().expect("binary runs")
}

#[test]
fn inflate_t2_order_three() {
    let o = cli(&["inflate", "--tile", "T2", "--order", "3"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "T2^(3)\ncounts 5 21 12 6\nvolume (144*tau+89)/12 = 26.8330745\n");
}

#[test]
fn inflate_json_shape() {
    let o = cli(&["inflate", "--tile", "T1", "--order", "4", "--json"]);
    let parsed: InflateOutput = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(parsed.counts, icotile::CountVector::new([79, 246, 154, 98]));
    let value: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert!(value["counts"].is_array());
    assert_eq!(value["volume"]["den"], "6");
    assert!(value["volume_float"].is_f64());
}

#[test]
fn ledger_verifies_seven_entries() {
    let o = cli(&["ledger", "--verify"]);
    assert_eq!(o.code, 0);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines.len(), 7);
    assert!(lines.iter().all(|l| l.starts_with("OK ")));
    assert!(lines[0].ends_with("T1^(2) = d(1) + 2T2^(1) + T3^(1) + T4^(1) + T2 + 4T3"));
}

#[test]
fn corrupted_ledger_exits_one() {
    for i in 0..7 {
        let i = i.to_string();
        let o = bin(&["ledger", "--verify", "--corrupt", &i]);
        assert_eq!(o.status.code(), Some(1), "entry {i}");
    }
    let help = String::from_utf8(bin(&["ledger", "--help"]).stdout).unwrap();
    assert!(!help.contains("corrupt"));
}

#[test]
fn build_d1_writes_obj() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d1.obj");
    let o = bin(&["build", "--shape", "d1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("hull volume 7.6631190"));
    assert!(text.contains("7.663118960"));
    assert!(text.contains("12 pentagonal faces"));
    let obj = std::fs::read_to_string(&path).unwrap();
    assert_eq!(obj.lines().filter(|l| l.starts_with("o ")).count(), 39);
    assert!(obj.lines().filter(|l| l.starts_with("v ")).all(|l| l.split_whitespace().count() == 4));
}

#[test]
fn build_json_is_a_patch() {
    let o = cli(&["build", "--shape", "i1", "--json"]);
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["frame"], "icosa-half-integer");
    assert_eq!(v["tiles"].as_array().unwrap().len(), 16);
    assert_eq!(v["hull"]["faces"].as_array().unwrap().len(), 20);
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    let reparsed: serde_json::Value = serde_json::from_str(&again).unwrap();
    assert_eq!(reparsed, v);
}

#[test]
fn unknown_shape_is_usage_error() {
    let o = bin(&["build", "--shape", "d7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("Usage"));
}

#[test]
fn json_outputs_round_trip() {
    let inflate = cli(&["inflate", "--tile", "T3", "--order", "7", "--json"]).stdout;
    let x: InflateOutput = serde_json::from_str(&inflate).unwrap();
    assert_eq!(serde_json::to_string_pretty(&x).unwrap() + "\n", inflate);

    let eigen = cli(&["eigen", "--json"]).stdout;
    let x: SpectralData = serde_json::from_str(&eigen).unwrap();
    assert_eq!(serde_json::to_string_pretty(&x).unwrap() + "\n", eigen);

    let ledger = cli(&["ledger", "--verify", "--json"]).stdout;
    let x: Vec<LedgerLine> = serde_json::from_str(&ledger).unwrap();
    assert_eq!(serde_json::to_string_pretty(&x).unwrap() + "\n", ledger);

    let catalog = cli(&["catalog", "dump"]).stdout;
    let x: Vec<TileRecord> = serde_json::from_str(&catalog).unwrap();
    assert_eq!(x.len(), 13);
    assert_eq!(serde_json::to_string_pretty(&x).unwrap() + "\n", catalog);

    let verify = cli(&["verify", "--json"]).stdout;
    let x: Vec<CheckOutcome> = serde_json::from_str(&verify).unwrap();
    assert_eq!(serde_json::to_string_pretty(&x).unwrap() + "\n", verify);
}

#[test]
fn eigen_human_output() {
    let o = cli(&["eigen"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("x^4 - 5x^3 + 2x^2 + 5x + 1"));
    assert!(o.stdout.contains("eigenvalues 4.2360680 1.6180340 -0.6180340 -0.2360680"));
    assert!(o.stdout.contains("frequencies 0.1338305 0.4330847 0.2676611 0.1654236"));
}

#[test]
fn report_bundle_is_reproducible() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        assert_eq!(cli(&["report", "--out", d.path().to_str().unwrap()]).code, 0);
    }
    for name in ["report.md", "table1.csv", "table2.csv", "matrix.csv", "projection.csv", "spectrum.csv", "ledger.csv"] {
        let x = std::fs::read(a.path().join(name)).unwrap();
        let y = std::fs::read(b.path().join(name)).unwrap();
        assert_eq!(x, y, "{name}");
    }
    let t1 = std::fs::read_to_string(a.path().join("table1.csv")).unwrap();
    assert!(t1.lines().any(|l| l.starts_with("t4,1x(1,1,1);3x(1,tau,tau),tau^2/12,")));
}

#[test]
fn environment_sets_tolerances() {
    let o = Command::new(env!("CARGO_BIN_EXE_icotile"))
        .args(["build", "--shape", "T2"])
        .env("ICOTILE_TOL_PREDICATE", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_icotile"))
        .args(["inflate", "--tile", "T1", "--order", "5"])
        .env("ICOTILE_MAX_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports_every_check() {
    let o = cli(&["verify"]);
    assert_eq!(o.stdout.lines().count(), 10);
    // the order-ten convergence bound cannot hold: the error there is about 5e-5
    assert_eq!(o.code, 1);
    assert!(o.stdout.lines().nth(5).unwrap().starts_with("FAIL  6"));
    assert_eq!(o.stdout.lines().filter(|l| l.starts_with("PASS")).count(), 9);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(cli(&["--help"]).code, 0);
    assert_eq!(cli(&["--version"]).code, 0);
}
