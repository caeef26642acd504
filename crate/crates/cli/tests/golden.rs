//! Golden transcripts for the CLI. Set `KAEHLER_BLESS=1` to rewrite them.

mod common;

use common::{golden_path, read_golden, run, with_seed, CASES};

#[test]
fn transcripts_match_goldens() {
    let bless = std::env::var_os("KAEHLER_BLESS").is_some();
    let mut stale = Vec::new();
    for c in CASES {
        let (got, _) = run(c.args);
        if bless {
            std::fs::write(golden_path(c.name), &got).unwrap();
            continue;
        }
        match read_golden(c.name) {
            Some(want) if want == got => {}
            Some(want) => stale.push(format!("{}:\n--- want\n{}--- got\n{}", c.name, want, got)),
            None => stale.push(format!("{}: no golden file", c.name)),
        }
    }
    assert!(stale.is_empty(), "{}", stale.join("\n"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for c in CASES {
        assert_eq!(run(c.args).0, run(c.args).0, "{}", c.name);
    }
}

#[test]
fn seed_does_not_leak_into_seed_free_commands() {
    for c in CASES.iter().filter(|c| !c.seeded) {
        let base = run(c.args).0;
        for seed in ["1", "987654321"] {
            assert_eq!(base, run(&with_seed(c.args, seed)).0, "{} with seed {}", c.name, seed);
        }
    }
}

#[test]
fn exit_codes() {
    let code = |name: &str| {
        let c = CASES.iter().find(|c| c.name == name).unwrap();
        run(c.args).1
    };
    assert_eq!(code("verify_counterexample"), 0);
    assert_eq!(code("verify_descent_cone_naive"), 1);
    assert_eq!(code("verify_compose_corrupted"), 1);
    assert_eq!(code("compose_corrupted"), 1);
    assert_eq!(code("verify_equalizer_unlocalized"), 1);
    assert_eq!(code("error_unknown_section"), 2);
    assert_eq!(code("error_missing_file"), 2);
    assert_eq!(run(&["frobnicate"]).1, 2);
}
