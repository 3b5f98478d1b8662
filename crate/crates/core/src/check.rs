//! Structured pass/fail records for exhaustive identity checks.

use std::fmt::Display;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// First point at which the two sides of a check differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one identity over a parameter grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub id: String,
    pub description: String,
    /// Inclusive range of `n` actually evaluated; `None` if no case applied.
    pub n_range: Option<(i64, i64)>,
    pub k_range: Option<(i64, i64)>,
    pub cases: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates cases for one [`IdentityCheck`].
#[derive(Debug)]
pub struct Checker {
    id: String,
    description: String,
    n_range: Option<(i64, i64)>,
    k_range: Option<(i64, i64)>,
    cases: u64,
    counterexample: Option<Counterexample>,
}

fn widen(range: &mut Option<(i64, i64)>, v: i64) {
    *range = Some(match *range {
        None => (v, v),
        Some((lo, hi)) => (lo.min(v), hi.max(v)),
    });
}

impl Checker {
    pub fn new(id: impl Into<String>, description: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            description: description.into(),
            n_range: None,
            k_range: None,
            cases: 0,
            counterexample: None,
        }
    }

    pub fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    /// Record `lhs == rhs` at `(n, k)`. Only the first mismatch is kept.
    pub fn case<T: PartialEq + Display>(&mut self, n: i64, k: Option<i64>, lhs: &T, rhs: &T) -> bool {
        self.cases += 1;
        widen(&mut self.n_range, n);
        if let Some(k) = k {
            widen(&mut self.k_range, k);
        }
        let ok = lhs == rhs;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                n,
                k,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        ok
    }

    /// Record a boolean condition; `detail` is stored as the left side on failure.
    pub fn holds(&mut self, n: i64, k: Option<i64>, ok: bool, detail: impl FnOnce() -> String) -> bool {
        self.cases += 1;
        widen(&mut self.n_range, n);
        if let Some(k) = k {
            widen(&mut self.k_range, k);
        }
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                n,
                k,
                lhs: detail(),
                rhs: "true".into(),
            });
        }
        ok
    }

    pub fn finish(self) -> IdentityCheck {
        IdentityCheck {
            status: if self.counterexample.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            id: self.id,
            description: self.description,
            n_range: self.n_range,
            k_range: self.k_range,
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}
