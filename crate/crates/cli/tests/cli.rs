use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn chandas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chandas"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = chandas(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn assert_golden(args: &[&str], name: &str) {
    assert_eq!(stdout(args), golden(name), "{args:?} vs {name}");
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["nashtam", "--n", "3", "--row", "5"]), "GGL\n");
    assert_eq!(
        stdout(&["uddishtam", "--seq", "GLL", "--method", "kedara"]),
        "7\n"
    );
    assert_eq!(
        stdout(&["sankhya", "--n", "8", "--method", "pingala"]),
        "256\n"
    );
}

#[test]
fn scalar_commands() {
    assert_eq!(stdout(&["uddishtam", "--seq", "glg"]), "3\n");
    assert_eq!(
        stdout(&["uddishtam", "--seq", "010", "--notation", "binary"]),
        "3\n"
    );
    assert_eq!(
        stdout(&["rank", "--digits", "789", "--base", "10"]),
        "790\n"
    );
    assert_eq!(stdout(&["rank", "--digits", "ff", "--base", "16"]), "256\n");
    assert_eq!(stdout(&["ncr", "--n", "30", "--r", "15"]), "155117520\n");
    assert_eq!(stdout(&["adhvayoga", "--n", "6"]), "126\n");
    assert_eq!(
        stdout(&["sankhya", "--n", "6", "--method", "lagakriya"]),
        "64\n"
    );
    assert_eq!(
        stdout(&["sankhya", "--n", "6", "--method", "uddishta"]),
        "64\n"
    );
    assert_eq!(stdout(&["sankhya", "--n", "0"]), "1\n");
    assert_eq!(
        stdout(&["lagakriya", "--n", "6", "--method", "bhaskara"]),
        "1 6 15 20 15 6 1\n"
    );
    assert_eq!(
        stdout(&["pataka", "--n", "5", "--column", "4"]),
        "16\n24\n28\n30\n31\n"
    );
    assert_eq!(
        stdout(&["nashtam", "--n", "3", "--row", "5", "--notation", "binary"]),
        "001\n"
    );
}

#[test]
fn golden_text_renderings() {
    assert_golden(&["prastara", "--n", "3"], "prastara_3.txt");
    assert_golden(
        &["prastara", "--n", "3", "--method", "kedara"],
        "prastara_3.txt",
    );
    assert_golden(&["prastara", "--n", "3", "--stream"], "prastara_3.txt");
    assert_golden(
        &["prastara", "--n", "3", "--numbered", "--method", "kedara"],
        "prastara_3_numbered.txt",
    );
    assert_golden(
        &["prastara", "--n", "3", "--notation", "binary"],
        "prastara_3_binary.txt",
    );
    assert_golden(&["pataka", "--n", "5"], "pataka_5.txt");
    assert_golden(
        &["lagakriya", "--n", "6", "--method", "kedara"],
        "lagakriya_6_kedara.txt",
    );
    assert_golden(&["lagakriya", "--n", "7"], "meru_7.txt");
    assert_golden(&["sankhya", "--n", "8", "--trace"], "sankhya_8_trace.txt");
}

#[test]
fn golden_machine_formats() {
    assert_golden(
        &["prastara", "--n", "3", "--format", "csv"],
        "prastara_3.csv",
    );
    assert_golden(
        &["prastara", "--n", "3", "--format", "csv", "--stream"],
        "prastara_3.csv",
    );
    assert_golden(
        &["prastara", "--n", "3", "--format", "json"],
        "prastara_3.json",
    );
    assert_golden(
        &["prastara", "--n", "3", "--format", "json", "--stream"],
        "prastara_3.json",
    );
    assert_golden(&["pataka", "--n", "5", "--format", "json"], "pataka_5.json");
    assert_golden(&["pataka", "--n", "5", "--format", "csv"], "pataka_5.csv");
    assert_golden(
        &["lagakriya", "--n", "6", "--format", "json"],
        "meru_6.json",
    );
    assert_golden(
        &["sankhya", "--n", "8", "--trace", "--format", "json"],
        "sankhya_8_trace.json",
    );
    assert_golden(
        &["sankhya", "--n", "8", "--trace", "--format", "csv"],
        "sankhya_8_trace.csv",
    );
}

#[test]
fn golden_files_hold_the_historical_tables() {
    assert_eq!(
        golden("prastara_3.txt").lines().collect::<Vec<_>>(),
        ["GGG", "LGG", "GLG", "LLG", "GGL", "LGL", "GLL", "LLL"]
    );
    let table22: Value = serde_json::from_str(&golden("pataka_5.json")).unwrap();
    let expected: Value = serde_json::from_str(
        "[[1],[2,3,5,9,17],[4,6,10,18,7,11,19,13,21,25],\
         [8,12,20,14,22,26,15,23,27,29],[16,24,28,30,31],[32]]",
    )
    .unwrap();
    assert_eq!(table22, expected);
    let meru: Value = serde_json::from_str(&golden("meru_6.json")).unwrap();
    assert_eq!(meru[6], serde_json::json!([1, 6, 15, 20, 15, 6, 1]));
    let trace: Value = serde_json::from_str(&golden("sankhya_8_trace.json")).unwrap();
    assert_eq!(trace["tokens"], serde_json::json!([2, 2, 2, 0]));
    assert_eq!(trace["replay"], serde_json::json!([2, 4, 16, 256]));
}

#[test]
fn json_prastara_reranks_to_row_numbers() {
    let rows: Vec<String> =
        serde_json::from_str(&stdout(&["prastara", "--n", "3", "--format", "json"])).unwrap();
    assert_eq!(rows.len(), 8);
    for (k, row) in (1..).zip(&rows) {
        for method in ["pingala", "kedara"] {
            let rank = stdout(&["uddishtam", "--seq", row, "--method", method]);
            assert_eq!(rank.trim(), k.to_string());
        }
    }
}

#[test]
fn json_scalars_are_exact() {
    let v: Value =
        serde_json::from_str(&stdout(&["sankhya", "--n", "200", "--format", "json"])).unwrap();
    assert_eq!(
        v["result"].to_string(),
        "1606938044258990275541962092341162602522202993782792835301376"
    );
    let v: Value = serde_json::from_str(&stdout(&[
        "nashtam", "--n", "3", "--row", "5", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(v, serde_json::json!({"n": 3, "row": 5, "sequence": "GGL"}));
    assert_eq!(
        stdout(&["ncr", "--n", "6", "--r", "2", "--format", "csv"]),
        "n,r,ncr\n6,2,15\n"
    );
}

#[test]
fn verify_agrees_everywhere() {
    let cases: &[&[&str]] = &[
        &["prastara", "--n", "6"],
        &["prastara", "--n", "6", "--method", "kedara"],
        &["prastara", "--n", "4", "--stream"],
        &["nashtam", "--n", "70", "--row", "1180591620717411303424"],
        &["uddishtam", "--seq", "LGLLGGGL"],
        &["uddishtam", "--seq", "LGLLGGGL", "--method", "kedara"],
        &["rank", "--digits", "0123456789abcdef", "--base", "16"],
        &["lagakriya", "--n", "12", "--method", "kedara"],
        &["lagakriya", "--n", "12", "--method", "meru"],
        &["lagakriya", "--n", "12", "--method", "bhaskara"],
        &["ncr", "--n", "40", "--r", "17"],
        &["sankhya", "--n", "1000"],
        &["sankhya", "--n", "20", "--method", "lagakriya"],
        &["sankhya", "--n", "20", "--method", "uddishta"],
        &["adhvayoga", "--n", "64"],
        &["pataka", "--n", "8"],
        &["pataka", "--n", "8", "--column", "3"],
    ];
    for args in cases {
        let mut full = args.to_vec();
        full.push("--verify");
        let out = chandas(&full);
        assert_eq!(out.status.code(), Some(0), "{full:?}");
        if !full.contains(&"--stream") {
            assert!(
                String::from_utf8_lossy(&out.stderr).starts_with("verify: agree"),
                "{full:?}"
            );
        }
    }
}

#[test]
fn exit_codes_and_diagnostics() {
    let usage: &[&[&str]] = &[
        &[],
        &["frobnicate"],
        &["nashtam", "--n", "3", "--row", "9"],
        &["nashtam", "--n", "3", "--row", "0"],
        &["uddishtam", "--seq", "GLX"],
        &["uddishtam", "--seq", ""],
        &["rank", "--digits", "12", "--base", "2"],
        &["rank", "--digits", "1", "--base", "1"],
        &["ncr", "--n", "3", "--r", "4"],
        &["pataka", "--n", "5", "--column", "6"],
        &["prastara", "--n", "0"],
        &["adhvayoga", "--n", "0"],
        &["prastara", "--n", "3", "--format", "xml"],
    ];
    for args in usage {
        let out = chandas(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?} wrote to stdout");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
    for args in [
        &["prastara", "--n", "21"][..],
        &["prastara", "--n", "8", "--guard", "7"],
        &["pataka", "--n", "21"],
        &["pataka", "--n", "21", "--column", "1"],
    ] {
        let out = chandas(args);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
        assert!(out.stdout.is_empty());
    }
    let out = chandas(&["prastara", "--n", "8", "--guard", "8", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn stream_ignores_guard() {
    let out = chandas(&["prastara", "--n", "12", "--stream", "--guard", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 4096);
    assert_eq!(text.lines().last(), Some("LLLLLLLLLLLL"));
}
