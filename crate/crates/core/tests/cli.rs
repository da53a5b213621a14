mod common;

use std::process::Command;

use common::{data_path, parse_brackets, published_tables};
use spin_kostka::cli::{self, SpinRecord};
use spin_kostka::{partition, strict, LaurentPoly, Partition, StrictPartition};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        std::iter::once("spin-kostka").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out
}

#[test]
fn bracket_notation_expands() {
    assert_eq!(parse_brackets("4[2]").to_string(), "4*t + 4");
    assert_eq!(parse_brackets("[4]!!"), parse_brackets("[4][2]"));
    assert_eq!(parse_brackets("t^2[2]"), LaurentPoly::from_coeffs(&[0, 0, 1, 1]));
    assert_eq!(
        parse_brackets("[6]!!/[3]!"),
        LaurentPoly::from_coeffs(&[1, 1, 1, 2, 1, 1, 1])
    );
    assert_eq!(
        parse_brackets("4[2]([4]+t^2)"),
        LaurentPoly::from_coeffs(&[4, 8, 12, 12, 4])
    );
}

#[test]
fn csv_tables_match_golden_files() {
    for n in 2..=6 {
        let expected = std::fs::read_to_string(data_path(&format!("table_n{n}.csv"))).unwrap();
        assert_eq!(
            ok(&["table", "--n", &n.to_string(), "--format", "csv"]),
            expected,
            "n = {n}"
        );
    }
}

#[test]
fn golden_files_agree_with_published_cells() {
    // The one published cell that disagrees is a misprint: the recurrence, the
    // vertex-operator oracle and the Σ b·K path all give 4[4]^2[6]/[3].
    let misprint = (strict![5, 1], partition![2, 1, 1, 1, 1]);
    let mut compared = 0;
    for cell in published_tables() {
        let text = std::fs::read_to_string(data_path(&format!("table_n{}.csv", cell.n))).unwrap();
        let mut rdr = csv::Reader::from_reader(text.as_bytes());
        let row = rdr
            .records()
            .map(|r| r.unwrap())
            .find(|r| r[0] == cell.xi.to_string() && r[1] == cell.mu.to_string())
            .unwrap_or_else(|| panic!("missing cell {:?} {:?}", cell.xi, cell.mu));
        let rendered = cell.value.to_string();
        if (cell.xi.clone(), cell.mu.clone()) == misprint {
            assert_ne!(&row[2], rendered);
            assert_eq!(&row[2], parse_brackets("4[4]^2[6]/[3]").to_string());
        } else {
            assert_eq!(
                &row[2], rendered,
                "{} at ξ={:?}, μ={:?}",
                cell.notation, cell.xi, cell.mu
            );
        }
        compared += 1;
    }
    assert_eq!(compared, 83);
}

#[test]
fn markdown_layout() {
    let md = ok(&["table", "--n", "3", "--format", "md"]);
    let lines: Vec<&str> = md.lines().collect();
    assert_eq!(lines[0], "| μ \\ ξ | (3) | (2,1) |");
    assert_eq!(lines[2], "| (3) | 2 | 0 |");
    assert_eq!(lines[4], "| (1,1,1) | 2*t^3 + 2*t^2 + 2*t + 2 | 4*t^2 + 4*t |");
    let md = ok(&["table", "--n", "3", "--format", "md", "--display", "bracket"]);
    assert!(md.contains("| (1,1,1) | 2[4] | 4t[2] |"), "{md}");
}

#[test]
fn json_table_parses_back() {
    let text = ok(&["table", "--n", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let records: Vec<SpinRecord> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| SpinRecord::from_json(r).unwrap())
        .collect();
    assert_eq!(records.len(), 7 * 3);
    let engine = spin_kostka::SpinKostkaEngine::new();
    for r in &records {
        assert_eq!(r.poly, engine.spin_kostka(&r.xi, &r.mu));
    }
    let b: serde_json::Value =
        serde_json::from_str(&ok(&["table", "--n", "4", "--mode", "b", "--format", "json"])).unwrap();
    assert_eq!(b[0], serde_json::json!({"xi": [4], "lambda": [4], "b": 2}));
}

#[test]
fn oracle_flag_agrees_for_small_weights() {
    for n in 1..=7 {
        for xi in StrictPartition::all(n) {
            for mu in Partition::all(n) {
                let (x, m) = (xi.to_string(), mu.to_string());
                let plain = ok(&["compute", "--xi", &x, "--mu", &m]);
                let oracle = ok(&["compute", "--xi", &x, "--mu", &m, "--oracle"]);
                assert_eq!(plain, oracle, "ξ={xi:?}, μ={mu:?}");
            }
        }
    }
}

#[test]
fn cache_and_threads_do_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("memo.json");
    let cache = cache.to_str().unwrap();
    let plain = ok(&["table", "--n", "7", "--format", "csv"]);
    let cold = ok(&["table", "--n", "7", "--format", "csv", "--cache", cache]);
    assert!(std::fs::metadata(cache).unwrap().len() > 0);
    let warm = ok(&[
        "table",
        "--n",
        "7",
        "--format",
        "csv",
        "--cache",
        cache,
        "--threads",
        "3",
    ]);
    let single = ok(&["table", "--n", "7", "--format", "csv", "--threads", "1"]);
    assert_eq!(plain, cold);
    assert_eq!(plain, warm);
    assert_eq!(plain, single);

    let out = dir.path().join("t.csv");
    assert_eq!(
        ok(&["table", "--n", "7", "--format", "csv", "--out", out.to_str().unwrap()]),
        ""
    );
    assert_eq!(std::fs::read_to_string(out).unwrap(), plain);
}

#[test]
fn corrupt_cache_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("memo.json");
    std::fs::write(&cache, "{\"not\": \"an array\"}").unwrap();
    let (code, _, err) = call(&[
        "table",
        "--n",
        "3",
        "--format",
        "csv",
        "--cache",
        cache.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("not a JSON array"), "{err}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_spin-kostka");
    let out = Command::new(bin)
        .args(["compute", "--xi", "3,1", "--mu", "2,2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "4*t + 4\n");

    let out = Command::new(bin)
        .args(["compute", "--xi", "2,2", "--mu", "2,2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--xi"));

    let out = Command::new(bin).args(["table", "--n", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(bin)
        .args(["compute", "--xi", "9", "--mu", "9", "--oracle"])
        .env("SPIN_KOSTKA_MAX_DEGREE", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("truncat"),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn verify_all_suites() {
    let out = ok(&["verify", "--suite", "all", "--max-n", "6", "--seed", "7"]);
    for suite in ["relations", "tables", "properties", "oracle"] {
        assert!(out.lines().any(|l| l.starts_with(&format!("PASS {suite} "))), "{out}");
    }
    assert!(!out.contains("FAIL"));
}
