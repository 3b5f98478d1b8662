//! `verify` and `identities`: one record per check, then a summary line.

use std::io::{self, Write};

use polyseq::check::{IdentityCheck, Status};
use polyseq::conjectures::{self, ConjectureReport, Verdict};
use polyseq::suite::identity_checks;
use polyseq::PSequence;
use serde_json::{json, Value};

use crate::output::{EXIT_IO, EXIT_OK, EXIT_REFUTED};

pub enum Target {
    All,
    Identities,
    Conjecture(u8),
    Identity(String),
}

pub struct Config {
    pub n_max: usize,
    pub k_max: i64,
    pub divisor_cap: u64,
    pub json: bool,
}

/// Large enough that every check, including the fits, produces a record.
const LISTING_N: usize = 24;
const LISTING_K: i64 = 4;

fn catalogue() -> Vec<IdentityCheck> {
    identity_checks(LISTING_N, LISTING_K).expect("the small listing run cannot fail")
}

pub fn known_identity(id: &str) -> bool {
    catalogue().iter().any(|c| c.id == id)
}

pub fn list() -> u8 {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut seen = Vec::new();
    for c in catalogue() {
        if !seen.contains(&(c.id.clone(), c.description.clone())) {
            if writeln!(out, "{:<18} {}", c.id, c.description).is_err() {
                return EXIT_IO;
            }
            seen.push((c.id, c.description));
        }
    }
    EXIT_OK
}

enum Record {
    Identity(IdentityCheck),
    Conjecture(ConjectureReport),
    Error { source: String, message: String },
}

#[derive(Default)]
struct Tally {
    checks: u64,
    passed: u64,
    refuted: u64,
    inconclusive: u64,
    errors: u64,
}

impl Tally {
    fn add(&mut self, r: &Record) {
        self.checks += 1;
        match r {
            Record::Identity(c) if c.status == Status::Pass => self.passed += 1,
            Record::Identity(_) => self.refuted += 1,
            Record::Conjecture(c) => match c.status {
                Verdict::Verified => self.passed += 1,
                Verdict::Refuted => self.refuted += 1,
                Verdict::Inconclusive => self.inconclusive += 1,
            },
            Record::Error { .. } => self.errors += 1,
        }
    }

    fn exit_code(&self) -> u8 {
        if self.refuted > 0 || self.errors > 0 {
            EXIT_REFUTED
        } else {
            EXIT_OK
        }
    }
}

fn range(r: Option<(i64, i64)>) -> String {
    match r {
        None => "-".into(),
        Some((a, b)) if a == b => a.to_string(),
        Some((a, b)) => format!("{a}..{b}"),
    }
}

fn tagged(kind: &str, v: Value) -> Value {
    let mut v = v;
    if let Value::Object(map) = &mut v {
        map.insert("kind".into(), kind.into());
    }
    v
}

fn json_line(r: &Record) -> Value {
    match r {
        Record::Identity(c) => tagged("identity", serde_json::to_value(c).expect("serializable")),
        Record::Conjecture(c) => tagged("conjecture", serde_json::to_value(c).expect("serializable")),
        Record::Error { source, message } => json!({"kind": "error", "source": source, "message": message}),
    }
}

fn text_line(r: &Record) -> String {
    match r {
        Record::Identity(c) => {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            let mut line = format!("{status:<12} {:<18} n={}", c.id, range(c.n_range));
            if c.k_range.is_some() {
                line.push_str(&format!(" k={}", range(c.k_range)));
            }
            line.push_str(&format!(" cases={}  {}", c.cases, c.description));
            if let Some(ce) = &c.counterexample {
                let at = match ce.k {
                    Some(k) => format!("n={}, k={k}", ce.n),
                    None => format!("n={}", ce.n),
                };
                line.push_str(&format!("\n    counterexample at {at}: {} vs {}", ce.lhs, ce.rhs));
            }
            line
        }
        Record::Conjecture(c) => {
            let status = match c.status {
                Verdict::Verified => "verified",
                Verdict::Refuted => "REFUTED",
                Verdict::Inconclusive => "inconclusive",
            };
            let id = format!("conjecture {}", c.conjecture);
            format!("{status:<12} {id:<18} n={}  {}", range(c.n_range), c.details)
        }
        Record::Error { source, message } => format!("{:<12} {source:<18} {message}", "ERROR"),
    }
}

fn collect(target: &Target, cfg: &Config) -> Vec<Record> {
    let mut out = Vec::new();
    if matches!(target, Target::All | Target::Identities | Target::Identity(_)) {
        match identity_checks(cfg.n_max, cfg.k_max) {
            Ok(checks) => out.extend(
                checks
                    .into_iter()
                    .filter(|c| match target {
                        Target::Identity(id) => &c.id == id,
                        _ => true,
                    })
                    .map(Record::Identity),
            ),
            Err(e) => out.push(Record::Error {
                source: "identities".into(),
                message: e.to_string(),
            }),
        }
    }
    if matches!(target, Target::All | Target::Conjecture(_)) {
        match PSequence::generate(cfg.n_max) {
            Ok(seq) => match target {
                Target::Conjecture(c) => out.extend(
                    conjectures::check_range(*c, &seq, cfg.divisor_cap)
                        .into_iter()
                        .map(Record::Conjecture),
                ),
                _ => out.extend(
                    conjectures::run_all(&seq, cfg.divisor_cap)
                        .into_iter()
                        .map(Record::Conjecture),
                ),
            },
            Err(e) => out.push(Record::Error {
                source: "sequence".into(),
                message: e.to_string(),
            }),
        }
    }
    out
}

pub fn run(target: &Target, cfg: &Config) -> u8 {
    let records = collect(target, cfg);
    let mut tally = Tally::default();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for r in &records {
        tally.add(r);
        let line = if cfg.json {
            json_line(r).to_string()
        } else {
            text_line(r)
        };
        if writeln!(out, "{line}").is_err() {
            return EXIT_IO;
        }
    }
    let summary = if cfg.json {
        json!({
            "kind": "summary",
            "checks": tally.checks,
            "passed": tally.passed,
            "refuted": tally.refuted,
            "inconclusive": tally.inconclusive,
            "errors": tally.errors,
        })
        .to_string()
    } else {
        format!(
            "summary: {} checks, {} passed, {} refuted, {} inconclusive, {} errors",
            tally.checks, tally.passed, tally.refuted, tally.inconclusive, tally.errors
        )
    };
    if writeln!(out, "{summary}").is_err() {
        return EXIT_IO;
    }
    tally.exit_code()
}
