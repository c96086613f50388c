//! End-to-end checks of the command-line binary: every subcommand runs
//! against the bundled example files, exit codes follow the 0/1/2
//! convention, and structured reports are byte-identical across runs
//! and match the committed golden files.
//!
//! Regenerate goldens with `GOLDEN_WRITE=1 cargo test -p fincat --test cli`.

use std::path::Path;
use std::process::Command;

fn run(args: &[&str]) -> (i32, Vec<u8>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_fincat"))
        .args(args)
        .env_remove("FINCAT_BOUND")
        .output()
        .expect("spawn fincat");
    (out.status.code().unwrap_or(-1), out.stdout, out.stderr)
}

const DISPATCH: &[&[&str]] = &[
    &["validate", "examples/data/cospan.fc"],
    &["construct", "limit", "examples/data/cospan.fc"],
    &["construct", "colimit", "examples/data/cospan.fc"],
    &["construct", "kan-right", "examples/data/kan.fc"],
    &["construct", "kan-left", "examples/data/kan.fc"],
    &["construct", "comma", "examples/data/adjunction.fc"],
    &["construct", "functor-cat", "examples/data/walking_arrow.fc"],
    &["construct", "algebra-cat", "examples/data/walking_arrow.fc"],
    &["check", "adjunction", "examples/data/adjunction.fc"],
    &["check", "yoneda", "examples/data/chain3.fc"],
    &["check", "topos", "examples/data/sets.fc"],
    &["check", "complete-preorder", "examples/data/chain3.fc"],
    &["check", "universal", "examples/data/sets.fc"],
    &["universe", "scenario", "set-complete-preorder"],
    &["universe", "examples/data/scenario.fc"],
];

#[test]
fn every_subcommand_succeeds_on_the_examples() {
    for args in DISPATCH {
        let (code, stdout, stderr) = run(args);
        assert_eq!(
            code,
            0,
            "{args:?} failed\nstdout:\n{}\nstderr:\n{}",
            String::from_utf8_lossy(&stdout),
            String::from_utf8_lossy(&stderr)
        );
        assert!(!stdout.is_empty(), "{args:?} printed nothing");
    }
}

const GOLDEN: &[(&str, &[&str])] = &[
    ("validate_cospan", &["validate", "examples/data/cospan.fc"]),
    ("construct_limit_cospan", &["construct", "limit", "examples/data/cospan.fc"]),
    ("construct_kan_right", &["construct", "kan-right", "examples/data/kan.fc"]),
    ("check_adjunction", &["check", "adjunction", "examples/data/adjunction.fc"]),
    ("check_topos_sets", &["check", "topos", "examples/data/sets.fc"]),
    (
        "check_complete_preorder",
        &["check", "complete-preorder", "examples/data/chain3.fc"],
    ),
    (
        "universe_scenario_refusal",
        &["universe", "scenario", "set-complete-preorder"],
    ),
    ("universe_file", &["universe", "examples/data/scenario.fc"]),
];

#[test]
fn structured_reports_match_goldens_byte_for_byte() {
    let write = std::env::var_os("GOLDEN_WRITE").is_some();
    for (name, base) in GOLDEN {
        let mut args: Vec<&str> = base.to_vec();
        args.extend(["--format", "structured"]);
        let (code, first, _) = run(&args);
        assert_eq!(code, 0, "{name}");
        let (_, second, _) = run(&args);
        assert_eq!(first, second, "{name}: output differs between runs");
        let path = Path::new("tests/golden").join(format!("{name}.json"));
        if write {
            std::fs::write(&path, &first).unwrap();
        } else {
            let expected = std::fs::read(&path)
                .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert_eq!(
                first,
                expected,
                "{name}: output drifted from the golden file\ngot:\n{}",
                String::from_utf8_lossy(&first)
            );
        }
    }
}

#[test]
fn failing_checks_exit_one() {
    let (code, stdout, _) = run(&["check", "adjunction", "tests/data/not_adjoint.fc"]);
    assert_eq!(code, 1);
    assert!(String::from_utf8_lossy(&stdout).contains("FAIL"));
}

#[test]
fn unreadable_input_exits_two() {
    let (code, _, stderr) = run(&["validate", "tests/data/bad_syntax.fc"]);
    assert_eq!(code, 2);
    assert!(String::from_utf8_lossy(&stderr).contains("parse error"));

    let (code, _, _) = run(&["validate", "tests/data/no_such_file.fc"]);
    assert_eq!(code, 2);

    let (code, _, stderr) = run(&["universe", "scenario", "nonsense"]);
    assert_eq!(code, 2);
    assert!(String::from_utf8_lossy(&stderr).contains("unknown scenario"));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
}

#[test]
fn timings_flag_only_adds_timing_lines() {
    let (code, plain, _) = run(&["check", "topos", "examples/data/sets.fc"]);
    assert_eq!(code, 0);
    let (code, timed, _) = run(&["check", "topos", "examples/data/sets.fc", "--timings"]);
    assert_eq!(code, 0);
    let plain = String::from_utf8(plain).unwrap();
    let timed = String::from_utf8(timed).unwrap();
    let stripped: String = timed
        .lines()
        .filter(|l| !l.trim_start().starts_with("timing_ms"))
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(plain, stripped);
}
