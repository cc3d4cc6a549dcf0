use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use num_bigint::BigInt;
use thiserror::Error;

use super::{check_alexander, normalize_alexander, KnotInvariantRecord, SlopeInfo};
use crate::{IntPolynomial, TwoVarPolynomial};

/// Words that cannot be used as knot names because the expression grammar
/// reserves them.
pub const RESERVED_NAMES: &[&str] = &[
    "unknot",
    "torus",
    "twist",
    "S3",
    "brieskorn",
    "catalog",
    "surgery",
    "splice",
    "ksplice",
    "sigma4demo",
];

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("knot `{knot}` fails invariant {invariant}")]
    Validation { knot: String, invariant: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Invariant records for named knots.
///
/// Populated once during setup through the `load_*` methods, then shared
/// read-only (it is `Sync`) by the evaluators.
#[derive(Debug, Clone, Default)]
pub struct KnotStore {
    records: BTreeMap<String, KnotInvariantRecord>,
}

impl KnotStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &str) -> Option<&KnotInvariantRecord> {
        self.records.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.records.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn load_invariant_file(&mut self, path: impl AsRef<Path>) -> Result<usize, LoadError> {
        let file = File::open(path)?;
        self.load_reader(BufReader::new(file))
    }

    pub fn load_str(&mut self, src: &str) -> Result<usize, LoadError> {
        self.load_reader(src.as_bytes())
    }

    /// Parses and validates every record first; the store is only modified
    /// when the whole input is accepted. Returns the number of records added.
    pub fn load_reader(&mut self, reader: impl BufRead) -> Result<usize, LoadError> {
        let mut parsed: Vec<(String, KnotInvariantRecord)> = Vec::new();
        let mut open: Option<(usize, PartialRecord)> = None;

        for (idx, line) in reader.lines().enumerate() {
            let lineno = idx + 1;
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut words = line.split_whitespace();
            let key = words.next().unwrap();
            let args: Vec<&str> = words.collect();
            let perr = |message: String| LoadError::Parse {
                line: lineno,
                message,
            };

            if key == "knot" {
                if open.is_some() {
                    return Err(perr("`knot` inside an open record (missing `end`)".into()));
                }
                let [name] = args[..] else {
                    return Err(perr("`knot` takes exactly one name".into()));
                };
                validate_name(name).map_err(perr)?;
                if self.records.contains_key(name) || parsed.iter().any(|(n, _)| n == name) {
                    return Err(perr(format!("duplicate knot `{name}`")));
                }
                open = Some((lineno, PartialRecord::new(name)));
                continue;
            }

            let Some((_, rec)) = open.as_mut() else {
                return Err(perr(format!("`{key}` outside of a knot record")));
            };
            match key {
                "alexander" => {
                    if rec.alexander.is_some() {
                        return Err(perr("repeated `alexander`".into()));
                    }
                    let coeffs = parse_ints(&args).map_err(perr)?;
                    if coeffs.is_empty() {
                        return Err(perr("`alexander` needs at least one coefficient".into()));
                    }
                    rec.alexander = Some(IntPolynomial::from_coeffs(coeffs));
                }
                "apoly" => {
                    if !args.is_empty() {
                        return Err(perr("`apoly` takes no arguments".into()));
                    }
                    if rec.apoly.is_some() {
                        return Err(perr("repeated `apoly`".into()));
                    }
                    rec.apoly = Some(Vec::new());
                }
                "term" => {
                    let Some(terms) = rec.apoly.as_mut() else {
                        return Err(perr("`term` before `apoly`".into()));
                    };
                    let [c, m, l] = args[..] else {
                        return Err(perr("`term` takes <coeff> <degM> <degL>".into()));
                    };
                    let c: BigInt = c
                        .parse()
                        .map_err(|_| perr(format!("bad coefficient `{c}`")))?;
                    let m: u32 = m.parse().map_err(|_| perr(format!("bad M-degree `{m}`")))?;
                    let l: u32 = l.parse().map_err(|_| perr(format!("bad L-degree `{l}`")))?;
                    terms.push((c, m, l));
                }
                "slopes" => {
                    if rec.slopes.is_some() {
                        return Err(perr("repeated `slopes`".into()));
                    }
                    rec.slopes = Some(match args[..] {
                        ["even-only"] => SlopeInfo::EvenOnly,
                        _ => {
                            let v = args
                                .iter()
                                .map(|s| s.parse::<i64>().map_err(|_| format!("bad slope `{s}`")))
                                .collect::<Result<Vec<_>, _>>()
                                .map_err(perr)?;
                            if v.is_empty() {
                                return Err(perr("`slopes` needs values or `even-only`".into()));
                            }
                            SlopeInfo::Explicit(v)
                        }
                    });
                }
                "small" => {
                    if !args.is_empty() {
                        return Err(perr("`small` takes no arguments".into()));
                    }
                    rec.small = true;
                }
                "end" => {
                    let (start, rec) = open.take().unwrap();
                    parsed.push(rec.finish(start)?);
                }
                other => return Err(perr(format!("unknown key `{other}`"))),
            }
        }
        if let Some((start, rec)) = open {
            return Err(LoadError::Parse {
                line: start,
                message: format!("record `{}` is never closed with `end`", rec.name),
            });
        }

        let n = parsed.len();
        self.records.extend(parsed);
        Ok(n)
    }
}

fn validate_name(name: &str) -> Result<(), String> {
    let ok_chars = name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !ok_chars || name.chars().all(|c| c.is_ascii_digit()) {
        return Err(format!(
            "invalid knot name `{name}` (use letters, digits and `_`)"
        ));
    }
    if RESERVED_NAMES.contains(&name) {
        return Err(format!("`{name}` is a reserved word"));
    }
    Ok(())
}

fn parse_ints(args: &[&str]) -> Result<Vec<BigInt>, String> {
    args.iter()
        .map(|s| s.parse().map_err(|_| format!("bad integer `{s}`")))
        .collect()
}

struct PartialRecord {
    name: String,
    alexander: Option<IntPolynomial>,
    apoly: Option<Vec<(BigInt, u32, u32)>>,
    slopes: Option<SlopeInfo>,
    small: bool,
}

impl PartialRecord {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            alexander: None,
            apoly: None,
            slopes: None,
            small: false,
        }
    }

    fn finish(self, start: usize) -> Result<(String, KnotInvariantRecord), LoadError> {
        let Some(alex) = self.alexander else {
            return Err(LoadError::Parse {
                line: start,
                message: format!("record `{}` has no `alexander` line", self.name),
            });
        };
        let alexander = normalize_alexander(&alex);
        check_alexander(&alexander).map_err(|d| LoadError::Validation {
            knot: self.name.clone(),
            invariant: d.to_string(),
        })?;
        let a_polynomial = match self.apoly {
            None => None,
            Some(terms) => {
                let a = TwoVarPolynomial::from_terms(terms);
                if a.is_zero() {
                    return Err(LoadError::Validation {
                        knot: self.name,
                        invariant: "A-polynomial is nonzero".into(),
                    });
                }
                Some(a)
            }
        };
        Ok((
            self.name,
            KnotInvariantRecord {
                alexander,
                a_polynomial,
                slopes: self.slopes,
                small: self.small,
            },
        ))
    }
}
