#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// `(name, args)` pairs from `cases.txt`.
pub fn golden_cases() -> Vec<(String, Vec<String>)> {
    let text = std::fs::read_to_string(golden_dir().join("cases.txt")).expect("cases.txt");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, args) = l.split_once(':').expect("name: args");
            (
                name.trim().to_string(),
                args.split_whitespace().map(String::from).collect(),
            )
        })
        .collect()
}

/// Runs the binary from the golden directory and renders exit code,
/// stdout and stderr into one transcript.
pub fn run_case(args: &[String]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_fixedspace"))
        .args(args)
        .current_dir(golden_dir())
        .env_remove("FIXEDSPACE_CAP")
        .output()
        .expect("binary runs");
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

/// Compares every case with its expected transcript. With
/// `FIXEDSPACE_BLESS=1` the transcripts are written instead.
pub fn check_golden() -> Vec<(String, bool)> {
    let bless = std::env::var("FIXEDSPACE_BLESS").is_ok_and(|v| v == "1");
    golden_cases()
        .into_iter()
        .map(|(name, args)| {
            let path = golden_dir().join("expected").join(format!("{name}.out"));
            let actual = run_case(&args);
            if bless {
                std::fs::write(&path, &actual).expect("write expected");
            }
            let expected = std::fs::read_to_string(&path).unwrap_or_default();
            (name, expected == actual)
        })
        .collect()
}
