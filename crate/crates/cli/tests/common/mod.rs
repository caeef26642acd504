//! Shared case table for the golden and acceptance targets.

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    /// Output may legitimately depend on `--seed`.
    pub seeded: bool,
}

const fn case(name: &'static str, args: &'static [&'static str]) -> Case {
    Case { name, args, seeded: false }
}

pub const CASES: &[Case] = &[
    case("omega_circle", &["omega", "workspaces/circle.toml", "circle", "1"]),
    case("omega_plane_2", &["omega", "workspaces/circle.toml", "plane", "2"]),
    case("omega_cusp", &["omega", "workspaces/circle.toml", "cusp", "1"]),
    case("omega_cone_relative", &["omega", "workspaces/cone.toml", "B", "1", "--base"]),
    case("omega_circle_json", &["--json", "omega", "workspaces/circle.toml", "circle", "1"]),
    case("omega_lex", &["--order", "lex", "omega", "workspaces/cone.toml", "B", "1"]),
    case("transfer_dt", &["transfer", "workspaces/graph.toml", "transpose", "dt"]),
    case("transfer_tdt", &["transfer", "workspaces/graph.toml", "transpose", "tdt"]),
    case("transfer_graph", &["transfer", "workspaces/graph.toml", "graph", "ds"]),
    case("transfer_json", &["--json", "transfer", "workspaces/graph.toml", "transpose", "t3dt"]),
    case("compose_kummer", &["compose", "workspaces/composition.toml", "kummer"]),
    case("compose_graphs", &["compose", "workspaces/composition.toml", "graphs"]),
    case("compose_corrupted", &["compose", "workspaces/corrupted.toml", "kummer"]),
    Case { name: "verify_cover_kummer", args: &["verify", "cover", "workspaces/kummer.toml", "kummer"], seeded: true },
    Case { name: "verify_cover_cone", args: &["verify", "cover", "workspaces/cone.toml"], seeded: true },
    case("verify_counterexample", &["verify", "counterexample", "workspaces/cone.toml"]),
    case("verify_descent_trivial", &["verify", "descent", "workspaces/circle.toml"]),
    case("verify_descent_kummer", &["verify", "descent", "workspaces/kummer.toml", "kummer"]),
    case("verify_descent_cone", &["verify", "descent", "workspaces/cone.toml"]),
    case("verify_descent_cone_naive", &["verify", "descent", "workspaces/cone.toml", "--naive"]),
    case("verify_compose_kummer", &["verify", "compose", "workspaces/composition.toml", "kummer"]),
    case("verify_compose_graphs", &["verify", "compose", "workspaces/composition.toml", "graphs"]),
    case("verify_compose_corrupted", &["verify", "compose", "workspaces/corrupted.toml", "kummer"]),
    case("verify_welldef", &["verify", "welldef", "workspaces/graph.toml"]),
    case("verify_equalizer_localized", &["verify", "equalizer", "workspaces/kummer.toml", "kummer_loc"]),
    case("verify_equalizer_unlocalized", &["verify", "equalizer", "workspaces/kummer.toml", "kummer"]),
    case("error_unknown_section", &["transfer", "workspaces/graph.toml", "nope", "dt"]),
    case("error_ambiguous_cover", &["verify", "cover", "workspaces/kummer.toml"]),
    case("error_missing_file", &["omega", "workspaces/absent.toml", "X", "1"]),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{}.out", name))
}

/// Runs the binary from the crate directory and renders stdout, stderr and
/// the exit code into one transcript.
pub fn run(args: &[&str]) -> (String, i32) {
    let out =
        Command::new(env!("CARGO_BIN_EXE_kaehler")).args(args).current_dir(crate_dir()).output().expect("binary runs");
    let code = out.status.code().expect("exit code");
    let mut text = String::from_utf8(out.stdout).expect("utf-8 stdout");
    let err = String::from_utf8(out.stderr).expect("utf-8 stderr");
    if !err.is_empty() {
        text.push_str("--- stderr\n");
        text.push_str(&err);
    }
    text.push_str(&format!("--- exit {}\n", code));
    (text, code)
}

pub fn with_seed<'a>(args: &[&'a str], seed: &'a str) -> Vec<&'a str> {
    let mut v = vec!["--seed", seed];
    v.extend_from_slice(args);
    v
}

pub fn read_golden(name: &str) -> Option<String> {
    std::fs::read_to_string(golden_path(name)).ok()
}
