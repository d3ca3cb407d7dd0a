use std::process::Command;

use abelian_ideals::cli::{run_with, Report, ReportBody};
use abelian_ideals::rootsys::Root;

fn capture(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("abelian-ideals").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn binary(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_abelian-ideals"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn long_f4_json() {
    let (code, out, _) = capture(&["long", "F4", "--format", "json"]);
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(report.schema_version, "1");
    assert_eq!(report.simple_type.as_deref(), Some("F4"));
    assert_eq!(report.counts["long_ideals"], 4);
    assert_eq!(report.counts["d_pow_a"], 4);
    let ReportBody::Long(listing) = &report.body else {
        panic!("wrong body {:?}", report.body);
    };
    assert_eq!(listing.ideals.len(), 4);
    assert_eq!(listing.maximal.len(), 1);
    let expected: Vec<Root> = [[2, 4, 2, 1], [2, 4, 3, 1], [2, 4, 3, 2]]
        .iter()
        .map(|c| Root::new(c.to_vec()))
        .collect();
    assert_eq!(listing.maximal[0].roots, expected);
}

#[test]
fn ideal_json_has_documented_fields() {
    let (code, out, _) = capture(&["ideals", "G2", "--format", "json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    let first = &value["body"]["data"][1];
    for key in ["type", "roots", "word", "long", "rootlet", "generators"] {
        assert!(first.get(key).is_some(), "missing {key} in {first}");
    }
    assert_eq!(first["type"], "G2");
    assert_eq!(first["word"], serde_json::json!([0]));
}

#[test]
fn json_round_trips_for_every_command() {
    for args in [
        &["ideals", "B3"][..],
        &["long", "C4"],
        &["rootlets", "G2"],
        &["verify", "F4"],
        &["dual", "G2"],
        &["gl-oracle", "5", "2"],
    ] {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let (code, out, err) = capture(&full);
        assert_eq!(code, 0, "{args:?}: {err}");
        let report: Report = serde_json::from_str(&out).unwrap();
        assert_eq!(report.to_json() + "\n", out, "{args:?}");
    }
}

#[test]
fn json_is_byte_identical_across_runs() {
    let a = capture(&["verify", "B3", "--format", "json"]).1;
    let b = capture(&["verify", "B3", "--format", "json"]).1;
    assert_eq!(a, b);
}

#[test]
fn gl_oracle_line() {
    let out = binary(&["gl-oracle", "4", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("count=12 formula=12 OK"));
}

#[test]
fn verify_all_up_to_rank_six() {
    let out = binary(&["verify", "--all", "--max-rank", "6"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("E6"));
    assert!(!text.contains("E7"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["ideals", "Q3"][..],
        &["ideals"],
        &["verify"],
        &["long", "E6"],
        &["gl-oracle", "10", "5"],
        &["--format", "yaml", "ideals", "A2"],
    ] {
        let out = binary(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("abelian-ideals-{}.csv", std::process::id()));
    let path_str = path.to_str().unwrap();
    let (code, out, _) = capture(&["rootlets", "C3", "--format", "csv", "--out", path_str]);
    assert_eq!(code, 0);
    assert!(out.starts_with("wrote "));
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(written.starts_with("type,ideal_index,size,long,rootlet,word\n"));
    assert_eq!(written.lines().count(), 8);
}

#[test]
fn seed_is_accepted_and_ignored() {
    let a = capture(&["ideals", "A3", "--format", "json", "--seed", "7"]).1;
    let b = capture(&["ideals", "A3", "--format", "json"]).1;
    let strip = |s: &str| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        v["command"] = serde_json::Value::Null;
        v
    };
    assert_eq!(strip(&a), strip(&b));
}
