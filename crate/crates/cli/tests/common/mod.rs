//! Shared helpers for running the `defrost` binary against golden files.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_defrost"))
        .args(args)
        .env_remove("DEFROST_MAX_N")
        .output()
        .expect("binary runs")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// (golden file, arguments, expected exit code)
pub const CASES: &[(&str, &[&str], i32)] = &[
    ("poly_dfe_n0.json", &["poly", "--family", "dfe", "--n", "0", "--u", "2", "--lambda", "1/2"], 0),
    ("poly_dfe_n1.json", &["poly", "--family", "dfe", "--n", "1", "--u", "2", "--lambda", "1/2"], 0),
    ("poly_dgen_n2_x0.json", &["poly", "--family", "dgen", "--n", "2", "--lambda", "0", "--x", "0"], 0),
    ("table_dfe_euler.csv", &["table", "--family", "dfe", "--max-n", "2", "--u", "-1", "--lambda", "0", "--format", "csv"], 0),
    ("table_dbern_lambda1.json", &["table", "--family", "dbern", "--max-n", "1", "--lambda", "1"], 0),
    ("table_dgen_n0.json", &["table", "--family", "dgen", "--max-n", "0", "--lambda", "1/2"], 0),
    ("verify_t2.json", &["verify", "--identity", "T2_reflection", "--u", "2", "--lambda", "1/3", "--max-n", "16"], 0),
    ("verify_t3_u1.json", &["verify", "--identity", "T3_distribution", "--u", "1", "--lambda", "1/2", "--max-n", "6"], 0),
    ("verify_all.json", &["verify", "--identity", "all", "--max-n", "12"], 0),
    ("convert_h2H.json", &["convert", "--direction", "h2H", "--u", "2", "--lambda", "1/2", "--max-m", "8"], 0),
    ("convert_H2h_lambda0.json", &["convert", "--direction", "H2h", "--u", "2", "--lambda", "0", "--max-m", "8"], 0),
    ("convert_round_trip.json", &["convert", "--direction", "h2H", "--round-trip", "--u", "2", "--lambda", "1/3", "--max-m", "8"], 0),
];

pub fn check_golden(name: &str, args: &[&str], code: i32) -> Result<(), String> {
    let out = run(args);
    if out.status.code() != Some(code) {
        return Err(format!(
            "{name}: exit {:?}, expected {code}; stderr: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let path = golden_path(name);
    let got = stdout(&out);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).unwrap();
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{name}: {e}"))?;
    if got != want {
        return Err(format!("{name}: output differs from golden file"));
    }
    Ok(())
}

