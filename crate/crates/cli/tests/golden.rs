//! Golden-file acceptance for the command line: every table and svg command
//! must be byte-identical across runs and match the committed output, and
//! the verify subcommand must exercise its documented exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::Instant;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sturmian-abelian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden_path(name: &str) -> PathBuf {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.extend(["tests", "golden", name]);
    path
}

fn assert_matches_golden(name: &str, args: &[&str]) {
    let first = run(args);
    let second = run(args);
    assert!(
        first.status.success(),
        "{name}: {}",
        String::from_utf8_lossy(&first.stderr)
    );
    assert_eq!(first.stderr, b"", "{name}: stderr must stay clean");
    assert_eq!(
        first.stdout, second.stdout,
        "{name}: two runs must be byte-identical"
    );
    let expected = std::fs::read(golden_path(name)).expect("golden file exists");
    assert_eq!(
        first.stdout, expected,
        "{name}: output drifted from the committed golden file"
    );
}

#[test]
fn criterion_11_golden_outputs_are_deterministic() {
    let started = Instant::now();
    let cases: &[(&str, &[&str])] = &[
        (
            "word_fib_34.txt",
            &["word", "--alpha", "fib", "--len", "34"],
        ),
        (
            "table_km.tsv",
            &["table", "km", "--alpha", "fib", "--m", "1..21"],
        ),
        (
            "table_km.json",
            &[
                "table", "km", "--alpha", "fib", "--m", "1..21", "--format", "json",
            ],
        ),
        (
            "table_kmn.tsv",
            &[
                "table", "kmn", "--alpha", "fib", "--m", "3,10", "--n", "0..20",
            ],
        ),
        (
            "table_kmi.tsv",
            &["table", "kmi", "--alpha", "fib", "--m", "10", "--i", "0..9"],
        ),
        (
            "table_norms.tsv",
            &[
                "table", "norms", "--alpha", "fib", "--m", "1..18", "--digits", "2",
            ],
        ),
        (
            "table_norms.json",
            &[
                "table", "norms", "--alpha", "fib", "--m", "1..18", "--digits", "2", "--format",
                "json",
            ],
        ),
        ("table_lp.tsv", &["table", "lp", "--j", "2..11"]),
        (
            "table_fibperiods.tsv",
            &["table", "fibperiods", "--j", "3..16"],
        ),
        ("table_sqrt5dev.tsv", &["table", "sqrt5dev", "--j", "2..11"]),
        (
            "table_kmn_sqrt3.tsv",
            &[
                "table", "kmn", "--alpha", "[0;|2,1]", "--rho", "0", "--m", "1..8", "--n", "0..12",
            ],
        ),
        (
            "svg_partition_m6.svg",
            &["svg", "partition", "--alpha", "fib", "--m", "6"],
        ),
        (
            "svg_partition_m1.svg",
            &["svg", "partition", "--alpha", "fib", "--m", "1"],
        ),
        (
            "svg_circle_steps15.svg",
            &["svg", "circle", "--alpha", "fib", "--steps", "15"],
        ),
        (
            "lagrange_sqrt3.txt",
            &["lagrange", "--alpha", "[0;|2,1]", "--depth", "40"],
        ),
    ];
    for (name, args) in cases {
        assert_matches_golden(name, args);
    }
    let elapsed = started.elapsed();
    println!(
        "PASS criterion 11: {} commands byte-identical across runs and golden files [{elapsed:.2?}]",
        cases.len()
    );
}

#[test]
fn known_values_appear_in_outputs() {
    // the 34-letter prefix of the Fibonacci word
    let word = run(&["word", "--alpha", "fib", "--len", "34"]);
    assert_eq!(
        String::from_utf8_lossy(&word.stdout).trim(),
        "abaababaabaababaababaabaababaabaab"
    );
    // the seven factors of length 6 label the partition drawing
    let svg = run(&["svg", "partition", "--alpha", "fib", "--m", "6"]);
    let text = String::from_utf8_lossy(&svg.stdout).to_string();
    for factor in [
        "babaab", "baabab", "baabaa", "ababaa", "abaaba", "aababa", "aabaab",
    ] {
        assert!(text.contains(factor), "missing factor label {factor}");
    }
    // the m=1 drawing splits at 2−φ
    let svg = run(&["svg", "partition", "--alpha", "fib", "--m", "1"]);
    assert!(String::from_utf8_lossy(&svg.stdout).contains("0.381966"));
    // exact Lagrange constants
    let lagrange = run(&["lagrange", "--alpha", "fib"]);
    assert!(String::from_utf8_lossy(&lagrange.stdout).contains("(0,1,1,5)\t2.236068"));
}

#[test]
fn verify_subcommand_exit_codes() {
    let pass = run(&["verify", "km", "--alpha", "fib", "--m", "1..21"]);
    assert_eq!(pass.status.code(), Some(0), "{pass:?}");
    assert!(String::from_utf8_lossy(&pass.stdout).starts_with("ok:"));

    let pass = run(&[
        "verify", "kmn", "--alpha", "[0;|2,1]", "--rho", "0", "--m", "1..10", "--n", "0..100",
    ]);
    assert_eq!(pass.status.code(), Some(0), "{pass:?}");

    let pass = run(&[
        "verify", "kmn", "--alpha", "fib", "--m", "3,10", "--n", "0..20",
    ]);
    assert_eq!(pass.status.code(), Some(0), "{pass:?}");

    let pass = run(&["verify", "fibperiods", "--j", "3..13"]);
    assert_eq!(pass.status.code(), Some(0), "{pass:?}");

    let pass = run(&["verify", "factors", "--max-len", "30"]);
    assert_eq!(pass.status.code(), Some(0), "{pass:?}");

    // beyond the documented budget: clamped, partial report, exit 3
    let clamped = run(&["verify", "km", "--alpha", "fib", "--m", "1..80"]);
    assert_eq!(clamped.status.code(), Some(3), "{clamped:?}");
    assert!(String::from_utf8_lossy(&clamped.stderr).contains("budget"));

    // usage errors exit 2
    let usage = run(&["table", "nosuch"]);
    assert_eq!(usage.status.code(), Some(2), "{usage:?}");
    let usage = run(&["verify", "nosuch"]);
    assert_eq!(usage.status.code(), Some(2), "{usage:?}");
    let usage = run(&["word", "--alpha", "(1,2,3)", "--len", "5"]);
    assert_eq!(usage.status.code(), Some(2), "{usage:?}");
}
