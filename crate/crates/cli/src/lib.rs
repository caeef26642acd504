//! Front end for `kaehler-core`: reads a workspace file, runs one command and
//! renders text or JSON. Exit codes: 0 success, 1 failed check, 2 bad input.

pub mod workspace;

use clap::{Parser, Subcommand};
use kaehler_core::descent::{bidual_descent_check, counterexample_suite, naive_descent_check, verify_cover};
use kaehler_core::kaehler::{equalizer_check, omega_p};
use kaehler_core::report::Report;
use kaehler_core::ring::RankStrategy;
use kaehler_core::transfer::{compose_cycles, transfer_cycle, verify_composition, verify_well_definedness};
use serde_json::json;

use crate::workspace::{Failure, InputError, Options, Res, Workspace};

#[derive(Parser, Debug)]
#[command(name = "kaehler", version, about = "Kähler differentials, Galois descent and transfers")]
pub struct Cli {
    /// Base field: `QQ` or a minimal polynomial such as `w^2 + w + 1`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long, global = true, value_parser = ["degrevlex", "lex"], default_value = "degrevlex")]
    pub order: String,
    /// Seed for random specializations.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Presentation of the p-forms of a variety.
    Omega {
        file: String,
        variety: String,
        p: isize,
        /// Relative to the base declared in the variety section.
        #[arg(long)]
        base: bool,
    },
    /// Transfer of a form along a correspondence.
    Transfer { file: String, correspondence: String, form: String },
    /// Composite cycle from a fiber witness.
    Compose { file: String, witness: String },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = ["cover", "descent", "compose", "welldef", "equalizer", "counterexample"])]
        kind: String,
        file: String,
        /// Section name; optional when the file has exactly one candidate.
        target: Option<String>,
        /// Form degree for `descent`.
        #[arg(long, default_value_t = 1)]
        degree: usize,
        /// Compare with the invariants of the forms themselves instead of the bidual.
        #[arg(long)]
        naive: bool,
    },
}

/// Rendered output and exit code.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Output {
    Text(Vec<String>, serde_json::Value),
    Report(Report),
}

pub fn run(cli: &Cli) -> Outcome {
    let result = execute(cli);
    match result {
        Ok(Output::Text(lines, value)) => {
            let stdout =
                if cli.json { format!("{}\n", value) } else { lines.iter().map(|l| format!("{}\n", l)).collect() };
            Outcome { stdout, stderr: String::new(), code: 0 }
        }
        Ok(Output::Report(r)) => {
            let code = if r.passed() { 0 } else { 1 };
            let stdout = if cli.json {
                let checks: Vec<_> =
                    r.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect();
                format!("{}\n", json!({"passed": r.passed(), "checks": checks}))
            } else {
                r.lines().iter().map(|l| format!("{}\n", l)).collect()
            };
            Outcome { stdout, stderr: String::new(), code }
        }
        Err(f) => {
            let code = match f {
                Failure::Input(_) => 2,
                Failure::Math(_) => 1,
            };
            let msg = format!("error: {}", f);
            if cli.json {
                Outcome {
                    stdout: format!("{}\n", json!({"error": f.to_string(), "exit": code})),
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome { stdout: String::new(), stderr: format!("{}\n", msg), code }
            }
        }
    }
}

fn load(cli: &Cli, file: &str) -> Res<Workspace> {
    let src = std::fs::read_to_string(file).map_err(|e| InputError(format!("{}: {}", file, e)))?;
    let opts = Options { field: cli.field.clone(), lex: cli.order == "lex" };
    Ok(Workspace::parse(&src, &opts).map_err(|e| InputError(format!("{}: {}", file, e)))?)
}

/// The named section, or the only one of its kind.
fn pick(ws: &Workspace, kind: &str, target: &Option<String>) -> Res<String> {
    if let Some(t) = target {
        return Ok(t.clone());
    }
    let names = ws.names(kind);
    match names.as_slice() {
        [one] => Ok(one.clone()),
        [] => Err(InputError(format!("no {} section", kind)).into()),
        _ => Err(InputError(format!("several {} sections; name one of {}", kind, names.join(", "))).into()),
    }
}

fn execute(cli: &Cli) -> Res<Output> {
    let strategy = RankStrategy::Random { seed: cli.seed };
    match &cli.command {
        Command::Omega { file, variety, p, base } => {
            let ws = load(cli, file)?;
            let v = ws.variety(variety)?;
            let hom = if *base { Some(ws.base_map(variety)?) } else { None };
            let om = omega_p(&v.ring, *p, hom.as_ref())?;
            let gens = om.module.labels.clone();
            let rels = om.module.format_relations();
            let show = |xs: &[String]| if xs.is_empty() { "none".to_string() } else { xs.join(", ") };
            let line = format!("generators: {}; relations: {}", show(&gens), show(&rels));
            Ok(Output::Text(vec![line], json!({"generators": gens, "relations": rels})))
        }
        Command::Transfer { file, correspondence, form } => {
            let ws = load(cli, file)?;
            let c = ws.correspondence(correspondence)?;
            let w = ws.form(form)?;
            if w.ring != c.target.ring {
                return Err(InputError(format!("form {} does not live on the target {}", form, c.target.name)).into());
            }
            let t = transfer_cycle(&c, &w)?;
            let text = t.format();
            Ok(Output::Text(vec![text.clone()], json!({"form": text, "degree": t.degree})))
        }
        Command::Compose { file, witness } => {
            let ws = load(cli, file)?;
            let (z, z2, wit, _, _) = ws.fiber_witness(witness)?;
            let cycle = compose_cycles(&z, &z2, &wit)?;
            let lines = cycle.lines();
            Ok(Output::Text(lines.clone(), json!({"components": lines})))
        }
        Command::Verify { kind, file, target, degree, naive } => {
            let ws = load(cli, file)?;
            let report = match kind.as_str() {
                "cover" => verify_cover(&ws.cover(&pick(&ws, "cover", target)?)?, strategy),
                "descent" => {
                    let d = ws.cover(&pick(&ws, "cover", target)?)?;
                    if *naive {
                        naive_descent_check(&d, *degree)?
                    } else {
                        bidual_descent_check(&d, *degree)?
                    }
                }
                "counterexample" => {
                    let name = pick(&ws, "cover", target)?;
                    let d = ws.cover(&name)?;
                    let (w, p) = ws.cover_extras(&name)?;
                    counterexample_suite(&d, &w, &p)?
                }
                "equalizer" => {
                    let d = ws.cover(&pick(&ws, "cover", target)?)?;
                    let mut r = Report::new();
                    match equalizer_check(&d.inclusion, &d.basis) {
                        Ok(e) => {
                            r.record("injective", e.injective, "", || {
                                kaehler_core::Error::CheckFailed("restriction is not injective".into())
                            });
                            r.record("exact", e.exact, "", || {
                                kaehler_core::Error::CheckFailed("equalizer is larger than the image".into())
                            });
                        }
                        Err(e) if e.is_check_failure() => r.fail("etale", e),
                        Err(e) => return Err(e.into()),
                    }
                    r
                }
                "compose" => {
                    let (z, z2, wit, comp, samples) = ws.fiber_witness(&pick(&ws, "fiberwitness", target)?)?;
                    verify_composition(&z, &z2, &wit, &comp, &samples)
                }
                "welldef" => {
                    let (c, alt, homs, f, samples) = ws.welldef(&pick(&ws, "welldef", target)?)?;
                    verify_well_definedness(&c, &alt, &homs, &f, &samples)
                }
                _ => unreachable!("restricted by clap"),
            };
            Ok(Output::Report(report))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome(args: &[&str]) -> Outcome {
        let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/workspaces/");
        let args: Vec<String> = args.iter().map(|a| a.replace("@", dir)).collect();
        run(&Cli::try_parse_from(std::iter::once("kaehler".to_string()).chain(args)).unwrap())
    }

    #[test]
    fn exit_codes_follow_the_failure_kind() {
        assert_eq!(outcome(&["transfer", "@graph.toml", "transpose", "tdt"]).code, 0);
        assert_eq!(outcome(&["verify", "equalizer", "@kummer.toml", "kummer"]).code, 1);
        assert_eq!(outcome(&["verify", "cover", "@kummer.toml"]).code, 2);
        assert_eq!(outcome(&["transfer", "@graph.toml", "transpose", "ds"]).code, 2);
    }

    #[test]
    fn json_is_one_object() {
        let o = outcome(&["--json", "verify", "descent", "@kummer.toml", "kummer"]);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["passed"], true);
        let o = outcome(&["--json", "omega", "@absent.toml", "X", "1"]);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["exit"], 2);
        assert!(o.stderr.is_empty());
    }

    #[test]
    fn field_override_changes_the_scalars() {
        let o = outcome(&["--field", "QQ", "verify", "cover", "@cone.toml"]);
        assert_ne!(o.code, 0);
    }
}
