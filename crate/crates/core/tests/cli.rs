use std::fs;
use std::process::Command;

use morita::cli::run;

fn morita(dir: &std::path::Path, args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_morita"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn corpus_dir() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(morita(dir.path(), &["corpus", "."]).2, 0);
    dir
}

fn field<'a>(out: &'a str, key: &str) -> Option<&'a str> {
    out.lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix('='))
}

#[test]
fn validate_exit_codes() {
    let dir = corpus_dir();
    let p = dir.path();
    fs::write(p.join("broken.smg"), "2\na b\nb a\na a\n").unwrap();
    fs::write(p.join("garbled.smg"), "2\na b\na\n").unwrap();
    let (out, _, code) = morita(p, &["validate", "broken.smg"]);
    assert_eq!(code, 1);
    assert_eq!(field(&out, "verdict"), Some("fail"));
    let w = out
        .lines()
        .find(|l| l.starts_with("associative=fail"))
        .unwrap();
    assert_eq!(
        w.split("witness=")
            .nth(1)
            .unwrap()
            .split_whitespace()
            .count(),
        1
    );
    assert_eq!(morita(p, &["validate", "garbled.smg"]).2, 2);
    assert_eq!(morita(p, &["validate", "missing.smg"]).2, 2);
    assert_eq!(morita(p, &["validate", "sim_2.smg"]).2, 0);
}

#[test]
fn analyze_reports() {
    let dir = corpus_dir();
    let (out, _, code) = morita(dir.path(), &["analyze", "brandt_1_2.smg"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "idempotents"), Some("3"));
    assert_eq!(field(&out, "l-morphisms"), Some("7"));
    assert_eq!(field(&out, "c-morphisms"), Some("13"));
    let (out, _, _) = morita(dir.path(), &["analyze", "cyclic_1.smg"]);
    assert_eq!(field(&out, "idempotents"), Some("1"));
    assert_eq!(field(&out, "hasse-edges"), Some("0"));
}

#[test]
fn morita_verdicts_and_budget() {
    let dir = corpus_dir();
    let p = dir.path();
    let (out, _, code) = morita(p, &["morita", "brandt_1_2.smg", "brandt_1_3.smg"]);
    assert_eq!((code, field(&out, "verdict")), (0, Some("true")));
    let (out, _, code) = morita(
        p,
        &[
            "morita",
            "cyclic_2.smg",
            "cyclic_3.smg",
            "--max-points",
            "5",
        ],
    );
    assert_eq!((code, field(&out, "verdict")), (0, Some("false")));
    assert_eq!(field(&out, "search.found"), Some("false"));
    let (_, err, code) = morita(
        p,
        &[
            "morita",
            "sim_2.smg",
            "sim_2.smg",
            "--max-points",
            "7",
            "--budget",
            "50",
        ],
    );
    assert_eq!(code, 3);
    assert!(err.contains("budget"));
}

#[test]
fn pipeline_on_group_and_corner() {
    let dir = corpus_dir();
    let p = dir.path();
    assert_eq!(
        morita(
            p,
            &["enlarge", "cyclic_3.smg", "all", "all", "--out", "g.biset"]
        )
        .2,
        0
    );
    let (out, _, code) = morita(p, &["boge", "g.biset"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(field(&out, "g.objects"), Some("2"));
    let (out, _, code) = morita(p, &["enlarge", "brandt_1_2.smg", "(1,1) 0", "all"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(field(&out, "points"), Some("3"));
    let (out, _, code) = morita(p, &["enlarge", "brandt_1_3.smg", "corner:(1,1)", "0"]);
    assert_eq!(code, 1);
    assert!(out.contains("precondition=fail witness="));
}

#[test]
fn psh_equiv_and_dump_cat() {
    let dir = corpus_dir();
    let p = dir.path();
    let (out, _, code) = morita(
        p,
        &[
            "psh-equiv",
            "chain_2.smg",
            "--samples",
            "20",
            "--seed",
            "42",
        ],
    );
    assert_eq!(code, 0, "{out}");
    assert_eq!(field(&out, "samples"), Some("20"));
    let (cat, _, code) = morita(p, &["dump-cat", "brandt_1_2.smg", "--which", "c"]);
    assert_eq!(code, 0);
    let c = morita::category::parse_category(&cat).unwrap();
    assert_eq!(c.morphism_count(), 13);
}

#[test]
fn json_output_and_timing() {
    let dir = corpus_dir();
    let (out, _, _) = morita(dir.path(), &["analyze", "chain_3.smg", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "analyze");
    assert!(v.get("timing_ms").is_none());
    let (out, _, _) = morita(dir.path(), &["analyze", "chain_3.smg", "--timing"]);
    assert!(field(&out, "timing_ms").is_some());
}

#[test]
fn corpus_manifest() {
    let dir = corpus_dir();
    let manifest = fs::read_to_string(dir.path().join("manifest.txt")).unwrap();
    let has = |line: &str| manifest.lines().any(|l| l == line);
    assert!(has("brandt_c2_2 c2_zero true enlargement"));
    assert!(has("chain_2 chain_3 false idempotent-count"));
    assert!(has("sim_2 sim_2 true reflexive"));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 18);
}

#[test]
fn usage_errors_exit_two() {
    let (_, err, code) = run(["morita", "frobnicate"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    assert_eq!(run(["morita", "--help"]).2, 0);
}
