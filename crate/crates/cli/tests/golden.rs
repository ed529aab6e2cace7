//! Byte-for-byte comparisons against the checked-in golden outputs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn qhopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhopf")).args(args).env_remove("QHOPF_CACHE_DIR").output().expect("binary runs")
}

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("missing golden file {}: {e}", p.display()))
}

fn check(args: &[&str], name: &str) {
    let out = qhopf(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    let got = String::from_utf8(out.stdout).unwrap();
    let want = golden(name);
    if got != want {
        let line = got.lines().zip(want.lines()).position(|(a, b)| a != b);
        panic!("{args:?} differs from {name} (first differing line: {line:?})");
    }
}

#[test]
fn spectrum_exact_csv() {
    check(&["spectrum", "--n", "-2..2", "--filtration", "3", "--mode", "exact", "--format", "csv"], "spectrum_exact.csv");
}

#[test]
fn spectrum_exact_json() {
    check(&["spectrum", "--n", "-1..1", "--filtration", "2", "--format", "json"], "spectrum_exact.json");
}

#[test]
fn spectrum_exact_latex() {
    check(&["spectrum", "--n", "-1..1", "--filtration", "2", "--format", "latex"], "spectrum_exact.tex");
}

#[test]
fn spectrum_numeric_csv() {
    check(&["spectrum", "--n", "-1..1", "--filtration", "2", "--mode", "numeric", "--format", "csv"], "spectrum_numeric.csv");
}

#[test]
fn table_latex() {
    check(&["table", "--format", "latex"], "table.tex");
}

#[test]
fn conventions_json() {
    check(&["conventions", "--format", "json"], "conventions.json");
}

#[test]
fn haar_csv() {
    check(&["haar", "--filtration", "4", "--format", "csv"], "haar.csv");
}

#[test]
fn ym_check_json() {
    check(&["ym-check", "--n", "1..2", "--format", "json"], "ym_check.json");
}

#[test]
fn table_latex_has_both_layouts() {
    let t = golden("table.tex");
    assert_eq!(t.matches("\\begin{tabular}").count(), 2);
    // header plus nine rows per table
    assert_eq!(t.matches("\\\\\\hline").count(), 20);
    assert!(t.contains(r"\hat p(\alpha^{*m}\gamma^{k}\gamma^{*l})"));
}
