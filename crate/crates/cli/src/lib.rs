//! Library half of the `casson` command: expression parsing and command
//! execution, kept separate from argument handling so both can be tested
//! without spawning a process.

mod parser;

use std::fmt::Write as _;
use std::path::PathBuf;

use casson_core::oracle::verify_closed_form;
use casson_core::splice::{non_additivity_demo, ConditionCheck, KRange};
use casson_core::{Evaluator, KnotDescriptor, KnotStore, LambdaCertificate, Status, Verdict};
use serde::Serialize;
use thiserror::Error;

pub use parser::{demo_expression, parse_expression, parse_knot, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNVERIFIED: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    Eval(String),
    Check { knot1: String, knot2: String },
    Verify { max_product: u64 },
    Demo,
    LoadProbe(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Command {
    pub action: Action,
    pub format: Format,
    pub data_files: Vec<PathBuf>,
    /// Overrides the per-pair default range for condition checks.
    pub krange: Option<KRange>,
}

impl Command {
    pub fn new(action: Action) -> Self {
        Self {
            action,
            format: Format::Text,
            data_files: Vec::new(),
            krange: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub exit_code: i32,
    pub output: String,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("{path}: {source}")]
    Load {
        path: String,
        source: casson_core::knots::LoadError,
    },
    #[error(transparent)]
    Splice(#[from] casson_core::splice::SpliceError),
    #[error(transparent)]
    Casson(#[from] casson_core::CassonError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Parses `A..B` into an inclusive range.
pub fn parse_krange(s: &str) -> Result<KRange, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let a: i64 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad lower bound `{a}`"))?;
    let b: i64 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad upper bound `{b}`"))?;
    KRange::new(a, b).map_err(|e| e.to_string())
}

pub fn status_exit_code(status: Status) -> i32 {
    match status {
        Status::Computed | Status::VanishesByCorollary | Status::AdditivityApplied => EXIT_OK,
        Status::ConditionsUnverified | Status::NonAdditiveWarning => EXIT_UNVERIFIED,
        Status::Unsupported => EXIT_UNSUPPORTED,
    }
}

pub fn run(cmd: &Command) -> RunOutput {
    match execute(cmd) {
        Ok((exit_code, output)) => RunOutput { exit_code, output },
        Err(e) => RunOutput {
            exit_code: EXIT_ERROR,
            output: format!("error: {e}\n"),
        },
    }
}

fn load_store(files: &[PathBuf]) -> Result<KnotStore, CliError> {
    let mut store = KnotStore::new();
    for f in files {
        store
            .load_invariant_file(f)
            .map_err(|source| CliError::Load {
                path: f.display().to_string(),
                source,
            })?;
    }
    Ok(store)
}

fn json<T: Serialize>(v: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn execute(cmd: &Command) -> Result<(i32, String), CliError> {
    let store = load_store(&cmd.data_files)?;
    let mut ev = Evaluator::new(&store);
    if let Some(r) = cmd.krange {
        ev = ev.with_krange(r);
    }
    match &cmd.action {
        Action::Eval(src) => {
            let expr = parse_expression(src)?;
            let cert = ev.lambda(&expr)?;
            Ok((
                status_exit_code(cert.status()),
                render_certificate(&expr.to_string(), &cert, cmd.format)?,
            ))
        }
        Action::Check { knot1, knot2 } => {
            let (k1, k2) = (parse_knot(knot1)?, parse_knot(knot2)?);
            let (krange, forward, backward) = ev.check_conditions(&k1, &k2)?;
            let all_pass = forward
                .iter()
                .chain(&backward)
                .all(|c| c.verdict == Verdict::Pass);
            let code = if all_pass { EXIT_OK } else { EXIT_UNVERIFIED };
            Ok((
                code,
                render_check(&k1, &k2, krange, &forward, &backward, cmd.format)?,
            ))
        }
        Action::Verify { max_product } => {
            let report = verify_closed_form(*max_product)?;
            let code = if report.passed() { EXIT_OK } else { EXIT_ERROR };
            let out = match cmd.format {
                Format::Json => json(&VerifyJson {
                    passed: report.passed(),
                    report: &report,
                })?,
                Format::Text => {
                    let mut s = String::new();
                    for m in &report.mismatches {
                        writeln!(
                            s,
                            "MISMATCH {}: oracle {} vs closed form {}",
                            m.triple, m.oracle, m.closed_form
                        )
                        .unwrap();
                    }
                    let verdict = if report.passed() { "PASS" } else { "FAIL" };
                    writeln!(
                        s,
                        "{verdict}: oracle count equals (a1-1)(a2-1)(a3-1)/4 on {} of {} triples with a1a2a3 <= {}",
                        report.triples_checked - report.mismatches.len(),
                        report.triples_checked,
                        report.max_product
                    )
                    .unwrap();
                    s
                }
            };
            Ok((code, out))
        }
        Action::Demo => {
            let report = non_additivity_demo();
            let out = match cmd.format {
                Format::Json => json(&report)?,
                Format::Text => {
                    let mut s = String::new();
                    writeln!(s, "{}", report.configuration).unwrap();
                    writeln!(s, "expression: {}", report.splice_expression).unwrap();
                    writeln!(s, "λ({}) = {}", report.manifold, report.lhs).unwrap();
                    let terms: Vec<String> = report
                        .summands
                        .iter()
                        .map(|(n, v)| format!("λ({n}) = {v}"))
                        .collect();
                    writeln!(s, "{}; sum {}", terms.join(", "), report.rhs).unwrap();
                    let rel = if report.equal { "=" } else { "≠" };
                    writeln!(s, "{} {rel} {}", report.lhs, report.rhs).unwrap();
                    s
                }
            };
            Ok((EXIT_OK, out))
        }
        Action::LoadProbe(path) => {
            let probe = load_store(std::slice::from_ref(path))?;
            let names: Vec<&str> = probe.names().collect();
            let out = match cmd.format {
                Format::Json => json(&LoadJson {
                    path: path.display().to_string(),
                    records: names.len(),
                    names: &names,
                })?,
                Format::Text => format!(
                    "{}: {} record(s): {}\n",
                    path.display(),
                    names.len(),
                    names.join(", ")
                ),
            };
            Ok((EXIT_OK, out))
        }
    }
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    passed: bool,
    #[serde(flatten)]
    report: &'a casson_core::oracle::VerifyReport,
}

#[derive(Serialize)]
struct LoadJson<'a> {
    path: String,
    records: usize,
    names: &'a [&'a str],
}

#[derive(Serialize)]
struct CheckRow {
    k: i64,
    verdict: Verdict,
    witness: String,
}

#[derive(Serialize)]
struct CheckDirection {
    a_polynomial_of: String,
    alexander_of: String,
    checks: Vec<CheckRow>,
}

#[derive(Serialize)]
struct CheckJson {
    knot1: String,
    knot2: String,
    krange: String,
    all_pass: bool,
    directions: Vec<CheckDirection>,
}

fn render_certificate(
    expr: &str,
    cert: &LambdaCertificate,
    format: Format,
) -> Result<String, CliError> {
    match format {
        Format::Json => json(cert),
        Format::Text => Ok(format!("expression: {expr}\n{}", cert.to_text())),
    }
}

fn render_check(
    k1: &KnotDescriptor,
    k2: &KnotDescriptor,
    krange: KRange,
    forward: &[ConditionCheck],
    backward: &[ConditionCheck],
    format: Format,
) -> Result<String, CliError> {
    let directions = [(k1, k2, forward), (k2, k1, backward)];
    match format {
        Format::Json => {
            let directions = directions
                .iter()
                .map(|(a, d, cs)| CheckDirection {
                    a_polynomial_of: a.to_string(),
                    alexander_of: d.to_string(),
                    checks: cs
                        .iter()
                        .map(|c| CheckRow {
                            k: c.k,
                            verdict: c.verdict,
                            witness: c.witness.to_string(),
                        })
                        .collect(),
                })
                .collect();
            json(&CheckJson {
                knot1: k1.to_string(),
                knot2: k2.to_string(),
                krange: krange.to_string(),
                all_pass: forward
                    .iter()
                    .chain(backward)
                    .all(|c| c.verdict == Verdict::Pass),
                directions,
            })
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(
                s,
                "splice conditions for {k1} and {k2}, k in {krange} (k = 0 skipped)"
            )
            .unwrap();
            for (a, d, cs) in directions {
                writeln!(s, "A({a}) vs Δ({d}):").unwrap();
                writeln!(s, "  {:>4}  {:<7}  witness", "k", "verdict").unwrap();
                for c in cs {
                    writeln!(
                        s,
                        "  {:>4}  {:<7}  {}",
                        c.k,
                        c.verdict.to_string(),
                        c.witness
                    )
                    .unwrap();
                }
            }
            Ok(s)
        }
    }
}
