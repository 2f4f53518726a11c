// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `media`: verify media, convert between families, token systems and
//! graphs, and generate examples. Prints a JSON report on stdout and a one
//! line summary on stderr. Exit status 0 means the property holds, 1 means
//! it fails, 2 means the input could not be used.

mod report;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use media_core::axioms::{
    build_graph, default_maxlen, find_reverse_pairing, is_medium, oracle_m1, oracle_m2,
    MediumVerdict,
};
use media_core::generate::{cycle, hypercube, path, random_wg_family};
use media_core::io::{
    export_dot, parse_edge_list, parse_family, parse_token_system, serialize_family,
    serialize_token_system,
};
use media_core::morphisms::{is_isomorphic, reduction};
use media_core::pcube::{check_mediatic, embed_hypercube, is_partial_cube};
use media_core::structure::content_of;
use media_core::wgfamily::{check_well_graded, is_connected_family, representing_token_system};
use media_core::{Error, Medium, ReversePairing, SetFamily, TokenSystem};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "media",
    version,
    about = "Token systems, media, well-graded families and partial cubes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Commands on token-system files.
    #[command(subcommand)]
    Medium(MediumCommand),
    /// Commands on set-family files.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Commands on edge-list graph files.
    #[command(subcommand)]
    Graphx(GraphCommand),
    /// Restrict a token system to a subset of its states.
    Reduce {
        file: PathBuf,
        /// Comma-separated state names. Commas inside braces belong to the
        /// name, so `{},{a,b}` lists two states.
        #[arg(long, required = true)]
        states: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether two media are isomorphic.
    Iso { first: PathBuf, second: PathBuf },
    /// Print a generated set family.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Subcommand)]
enum MediumCommand {
    /// Decide whether a token system is a medium.
    Verify {
        file: PathBuf,
        /// Also run the brute-force axiom checks.
        #[arg(long)]
        oracle: bool,
        /// Length bound for the closed-message search (default: twice the state count).
        #[arg(long)]
        maxlen: Option<usize>,
    },
    /// Write the graph of a token system as DOT.
    Graph {
        file: PathBuf,
        #[arg(long)]
        dot: PathBuf,
    },
    /// Print the hypercube embedding of a medium.
    Embed { file: PathBuf },
    /// Print the content of a state.
    Content {
        file: PathBuf,
        #[arg(long)]
        state: String,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Report connectivity and well-gradedness.
    Check { file: PathBuf },
    /// Write the representing token system of a family.
    Medium {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Decide whether a graph is a partial cube, by both methods.
    Pcube { file: PathBuf },
    /// Decide whether a graph is mediatic.
    Mediatic { file: PathBuf },
}

#[derive(Subcommand)]
enum GenCommand {
    /// All subsets of an n-element set.
    Hypercube {
        n: usize,
        #[arg(long)]
        system: bool,
    },
    /// A cycle with the given (even) number of states.
    Cycle {
        len: usize,
        #[arg(long)]
        system: bool,
    },
    /// A path with n states.
    Path {
        n: usize,
        #[arg(long)]
        system: bool,
    },
    /// A random well-graded family.
    RandomWg {
        #[arg(long)]
        ground: usize,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        system: bool,
    },
}

/// Result of a command: whether the property held, the report, a summary.
struct Outcome {
    holds: bool,
    report: Value,
    summary: String,
}

impl Outcome {
    fn new(holds: bool, report: Value, summary: impl Into<String>) -> Self {
        Outcome {
            holds,
            report,
            summary: summary.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            // a closed pipe on stdout is not an error worth reporting
            let _ = writeln!(
                io::stdout(),
                "{}",
                serde_json::to_string_pretty(&out.report).expect("json values serialize")
            );
            eprintln!("{}", out.summary);
            if out.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let _ = writeln!(io::stdout(), "{}", json!({ "error": e }));
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_system(path: &Path) -> Result<TokenSystem, String> {
    parse_token_system(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_family(path: &Path) -> Result<SetFamily, String> {
    parse_family(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_medium(path: &Path) -> Result<Result<Medium, Outcome>, String> {
    let sys = load_system(path)?;
    Ok(match is_medium(&sys) {
        MediumVerdict::Medium(m) => Ok(*m),
        MediumVerdict::NotMedium(v) => {
            let summary = format!("not a medium: {}", v.kind());
            Err(Outcome::new(
                false,
                json!({ "verdict": "NotMedium", "witness": report::violation(&sys, &v) }),
                summary,
            ))
        }
    })
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Medium(c) => run_medium(c),
        Command::Family(c) => run_family(c),
        Command::Graphx(c) => run_graph(c),
        Command::Reduce {
            file,
            states,
            output,
        } => run_reduce(&file, &states, output.as_deref()),
        Command::Iso { first, second } => run_iso(&first, &second),
        Command::Gen(c) => run_gen(c),
    }
}

fn run_medium(command: MediumCommand) -> Result<Outcome, String> {
    match command {
        MediumCommand::Verify {
            file,
            oracle,
            maxlen,
        } => {
            let sys = load_system(&file)?;
            let verdict = is_medium(&sys);
            let mut out = match &verdict {
                MediumVerdict::Medium(m) => Outcome::new(true, report::medium(m), "medium"),
                MediumVerdict::NotMedium(v) => Outcome::new(
                    false,
                    json!({ "verdict": "NotMedium", "witness": report::violation(&sys, v) }),
                    format!("not a medium: {}", v.kind()),
                ),
            };
            if oracle {
                let maxlen = maxlen.unwrap_or_else(|| default_maxlen(&sys));
                if maxlen < 2 {
                    return Err("--maxlen must be at least 2".into());
                }
                let p = ReversePairing::of_system(&sys);
                let m1 = match oracle_m1(&sys, &p) {
                    Ok(()) => json!({ "holds": true }),
                    Err((a, b)) => {
                        json!({ "holds": false, "unreachable": [sys.state_name(a), sys.state_name(b)] })
                    }
                };
                out.report["oracle"] = json!({ "m1": m1, "m2": report::m2_outcome(&sys, &oracle_m2(&sys, &p, maxlen)) });
            }
            Ok(out)
        }
        MediumCommand::Graph { file, dot } => {
            let sys = load_system(&file)?;
            let graph = find_reverse_pairing(&sys).and_then(|p| build_graph(&sys, &p));
            match graph {
                Ok(g) => {
                    write(&dot, &export_dot(&g))?;
                    let summary =
                        format!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
                    Ok(Outcome::new(
                        true,
                        json!({ "vertices": g.vertex_count(), "edges": g.edge_count() }),
                        summary,
                    ))
                }
                Err(v) => Ok(Outcome::new(
                    false,
                    json!({ "verdict": "NotMedium", "witness": report::violation(&sys, &v) }),
                    format!("no medium graph: {}", v.kind()),
                )),
            }
        }
        MediumCommand::Embed { file } => Ok(match load_medium(&file)? {
            Ok(m) => {
                let summary = format!("embedded in dimension {}", m.embedding().dimension);
                Outcome::new(
                    true,
                    report::embedding(m.graph(), m.embedding(), m.theta()),
                    summary,
                )
            }
            Err(out) => out,
        }),
        MediumCommand::Content { file, state } => Ok(match load_medium(&file)? {
            Ok(m) => {
                let s = m.system().state(&state).map_err(|e| e.to_string())?;
                let content = content_of(&m, s).map_err(|e| e.to_string())?;
                let names: Vec<&str> = content.iter().map(|&t| m.system().token_name(t)).collect();
                let summary = format!("content of {state}: {}", names.join(", "));
                Outcome::new(true, json!({ "state": state, "content": names }), summary)
            }
            Err(out) => out,
        }),
    }
}

fn run_family(command: FamilyCommand) -> Result<Outcome, String> {
    match command {
        FamilyCommand::Check { file } => {
            let f = load_family(&file)?;
            let connected = is_connected_family(&f);
            let graded = check_well_graded(&f);
            let witness = graded.as_ref().err().map(|v| report::grading(&f, v));
            let holds = graded.is_ok();
            let summary = if holds {
                "well-graded"
            } else if connected {
                "connected, not well-graded"
            } else {
                "not connected"
            };
            Ok(Outcome::new(
                holds,
                json!({ "connected": connected, "well_graded": holds, "witness": witness }),
                summary,
            ))
        }
        FamilyCommand::Medium { file, output } => {
            let f = load_family(&file)?;
            let sys = representing_token_system(&f).map_err(|e| e.to_string())?;
            write(&output, &serialize_token_system(&sys))?;
            let verdict = is_medium(&sys);
            let summary = format!(
                "{} states, {} tokens, medium: {}",
                sys.state_count(),
                sys.token_count(),
                verdict.is_medium()
            );
            let witness = verdict.violation().map(|v| report::violation(&sys, v));
            Ok(Outcome::new(
                verdict.is_medium(),
                json!({ "states": sys.state_count(), "tokens": sys.token_count(), "medium": verdict.is_medium(), "witness": witness }),
                summary,
            ))
        }
    }
}

fn load_graph(path: &Path) -> Result<media_core::LabeledGraph, String> {
    parse_edge_list(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn run_graph(command: GraphCommand) -> Result<Outcome, String> {
    match command {
        GraphCommand::Pcube { file } => {
            let g = load_graph(&file)?;
            let r = is_partial_cube(&g);
            if !r.methods_agree() {
                return Err("partial-cube recognition methods disagree".into());
            }
            let mut rep = json!({
                "partial_cube": r.holds(),
                "methods_agree": true,
                "theta": r.theta.as_ref().err().map(|w| report::not_partial_cube(&g, w)),
                "convexity": r.convexity.as_ref().err().map(|w| report::not_partial_cube(&g, w)),
            });
            if let Ok(theta) = &r.theta {
                rep["classes"] = json!(theta.class_count());
                if let Ok((emb, theta)) = embed_hypercube(&g) {
                    rep["embedding"] = report::embedding(&g, &emb, &theta);
                }
            }
            let summary = if r.holds() {
                "partial cube"
            } else {
                "not a partial cube"
            };
            Ok(Outcome::new(r.holds(), rep, summary))
        }
        GraphCommand::Mediatic { file } => {
            let g = load_graph(&file)?;
            let r = check_mediatic(&g);
            let witness = r.as_ref().err().map(|w| report::not_mediatic(&g, w));
            let summary = if r.is_ok() {
                "mediatic"
            } else {
                "not mediatic"
            };
            Ok(Outcome::new(
                r.is_ok(),
                json!({ "mediatic": r.is_ok(), "witness": witness }),
                summary,
            ))
        }
    }
}

/// Splits on commas outside `{}` and `[]`.
fn split_states(list: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in list.chars() {
        match c {
            '{' | '[' => depth += 1,
            '}' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur.trim().to_string());
    out
}

fn run_reduce(file: &Path, states: &str, output: Option<&Path>) -> Result<Outcome, String> {
    let sys = load_system(file)?;
    let states = split_states(states);
    let q = states
        .iter()
        .map(|s| sys.state(s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    match reduction(&sys, &q) {
        Ok(r) => {
            if let Some(out) = output {
                write(out, &serialize_token_system(&r.system))?;
            }
            let merged: serde_json::Map<String, Value> = r
                .tokens
                .iter()
                .enumerate()
                .map(|(i, origin)| {
                    let names: Vec<&str> = origin.iter().map(|&t| sys.token_name(t)).collect();
                    (
                        r.system.token_name(media_core::TokenId(i)).to_string(),
                        json!(names),
                    )
                })
                .collect();
            let medium = is_medium(&r.system).is_medium();
            let summary = format!("{} tokens, medium: {medium}", r.system.token_count());
            Ok(Outcome::new(
                true,
                json!({ "states": r.system.state_names(), "tokens": merged, "medium": medium }),
                summary,
            ))
        }
        Err(e @ Error::EmptyReduction(_)) => Ok(Outcome::new(
            false,
            json!({ "error": "EmptyReduction", "message": e.to_string() }),
            e.to_string(),
        )),
        Err(e) => Err(e.to_string()),
    }
}

fn run_iso(first: &Path, second: &Path) -> Result<Outcome, String> {
    let a = match load_medium(first)? {
        Ok(m) => m,
        Err(_) => return Err(format!("{}: not a medium", first.display())),
    };
    let b = match load_medium(second)? {
        Ok(m) => m,
        Err(_) => return Err(format!("{}: not a medium", second.display())),
    };
    Ok(match is_isomorphic(&a, &b) {
        Some(map) => {
            let (sa, sb) = (a.system(), b.system());
            let states: serde_json::Map<String, Value> = sa
                .states()
                .map(|s| {
                    (
                        sa.state_name(s).to_string(),
                        json!(sb.state_name(map.states[s.0])),
                    )
                })
                .collect();
            let tokens: serde_json::Map<String, Value> = sa
                .tokens()
                .map(|t| {
                    (
                        sa.token_name(t).to_string(),
                        json!(sb.token_name(map.tokens[t.0])),
                    )
                })
                .collect();
            Outcome::new(
                true,
                json!({ "isomorphic": true, "states": states, "tokens": tokens }),
                "isomorphic",
            )
        }
        None => Outcome::new(false, json!({ "isomorphic": false }), "not isomorphic"),
    })
}

fn run_gen(command: GenCommand) -> Result<Outcome, String> {
    let (family, system) = match command {
        GenCommand::Hypercube { n, system } => (hypercube(n), system),
        GenCommand::Cycle { len, system } => (cycle(len), system),
        GenCommand::Path { n, system } => (path(n), system),
        GenCommand::RandomWg {
            ground,
            size,
            seed,
            system,
        } => (
            random_wg_family(ground, size, &mut ChaCha8Rng::seed_from_u64(seed)),
            system,
        ),
    };
    let family = family.map_err(|e| e.to_string())?;
    let summary = format!(
        "{} members over {} elements",
        family.len(),
        family.ground().len()
    );
    let report: Value = if system {
        let sys = representing_token_system(&family).map_err(|e| e.to_string())?;
        serde_json::from_str(&serialize_token_system(&sys)).expect("serializer emits json")
    } else {
        serde_json::from_str(&serialize_family(&family)).expect("serializer emits json")
    };
    Ok(Outcome::new(true, report, summary))
}

#[cfg(test)]
mod tests {
    use super::split_states;

    #[test]
    fn state_lists() {
        assert_eq!(split_states("{},{a,b}"), ["{}", "{a,b}"]);
        assert_eq!(split_states("A, B,C"), ["A", "B", "C"]);
        assert_eq!(split_states("x"), ["x"]);
    }
}
