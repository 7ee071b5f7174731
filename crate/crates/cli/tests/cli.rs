//! End-to-end tests against the built binary: golden-file reproduction,
//! inverse compose/decompose through the CLI layer, byte determinism, and
//! exit codes.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_psl2-ogs"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8")
}

#[test]
fn tables_q29_matches_golden_file() {
    let golden = include_str!("../testdata/tables_q29.tsv");
    assert_eq!(stdout(&["tables", "--q", "29"]), golden);
}

#[test]
fn tables_json_carries_the_same_data_as_tsv() {
    let tsv = stdout(&["tables", "--q", "29", "--format", "tsv"]);
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["tables", "--q", "29", "--format", "json"])).unwrap();
    assert_eq!(json["q"], 29);
    assert_eq!(json["a"], 4);
    assert_eq!(json["b"], 1);
    assert_eq!(json["t"], 15);
    for line in tsv.lines().skip(1) {
        let cells: Vec<&str> = line.split('\t').collect();
        let idx = cells[0];
        for (cell, key) in cells[1..]
            .iter()
            .zip(["a_seq", "b_seq", "alpha", "beta", "gamma"])
        {
            if !cell.is_empty() {
                assert_eq!(
                    json[key][idx].as_u64().unwrap().to_string(),
                    *cell,
                    "{key}[{idx}]"
                );
            }
        }
    }
}

#[test]
fn identical_invocations_produce_identical_bytes() {
    for args in [
        vec!["tables", "--q", "27"],
        vec!["params", "--q", "25"],
        vec!["verify", "--q", "9", "--suite", "conversion", "--json"],
    ] {
        assert_eq!(stdout(&args), stdout(&args), "{args:?}");
    }
}

#[test]
fn compose_and_decompose_are_mutually_inverse_through_the_cli() {
    let composed: serde_json::Value = serde_json::from_str(&stdout(&[
        "compose", "--q", "29", "--k", "5", "--ell", "0", "--x", "7", "--y", "9",
    ]))
    .unwrap();
    assert_eq!(composed["bn"]["a"], 14);
    assert_eq!(composed["bn"]["x"], 3);
    assert_eq!(composed["bn"]["y"], 4);
    let entries: Vec<String> = composed["matrix"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap().to_string())
        .collect();
    let decomposed: serde_json::Value = serde_json::from_str(&stdout(&[
        "decompose",
        "--q",
        "29",
        "--matrix",
        &entries.join(","),
    ]))
    .unwrap();
    assert_eq!(decomposed["ogs"]["k"], 5);
    assert_eq!(decomposed["ogs"]["ell"], 0);
    assert_eq!(decomposed["ogs"]["x"], 7);
    assert_eq!(decomposed["ogs"]["y"], 9);
    assert_eq!(decomposed["bn"], composed["bn"]);
}

#[test]
fn decompose_identity_gives_the_trivial_form() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["decompose", "--q", "29", "--matrix", "1,0,0,1"])).unwrap();
    assert_eq!(v["ogs"]["k"], 0);
    assert_eq!(v["ogs"]["ell"], 0);
    assert_eq!(v["ogs"]["x"], 0);
    assert_eq!(v["ogs"]["y"], 1);
    assert!(v["bn"]["a"].is_null());
}

#[test]
fn order_of_us_over_gf29() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["order", "--q", "29", "--matrix", "25,1,28,0"])).unwrap();
    assert_eq!(v["order"], 15);
}

#[test]
fn params_for_gf4_has_no_b() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["params", "--q", "4"])).unwrap();
    assert_eq!(v["p"], 2);
    assert_eq!(v["kappa"], 2);
    assert_eq!(v["q"], 4);
    assert_eq!(v["t"], 5);
    assert_eq!(v["a"], 2);
    assert_eq!(v["modulus"], serde_json::json!([1, 1, 1]));
    assert!(v.get("b").is_none());
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = run(&["verify", "--q", "8", "--suite", "all"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 failed"), "{text}");
}

#[test]
fn usage_and_validation_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["params", "--q", "6"],
        &["params", "--q", "29", "--a", "2"],
        &["params", "--q", "29", "--b", "11"],
        &["tables", "--q", "4", "--b", "1"],
        &["decompose", "--q", "29", "--matrix", "1,0,0,2"],
        &["decompose", "--q", "29", "--matrix", "1,0,0"],
        &[
            "compose", "--q", "29", "--k", "15", "--ell", "0", "--x", "0", "--y", "1",
        ],
        &[
            "compose", "--q", "29", "--k", "0", "--ell", "0", "--x", "0", "--y", "0",
        ],
        &["verify", "--q", "29", "--suite", "bogus"],
        &["verify", "--q", "128", "--suite", "enumeration"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?} should explain itself");
    }
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let path = std::env::temp_dir().join("psl2_ogs_tables_q29_test.tsv");
    let _ = std::fs::remove_file(&path);
    let out = run(&["tables", "--q", "29", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&["tables", "--q", "29"]));
    std::fs::remove_file(&path).unwrap();
}
