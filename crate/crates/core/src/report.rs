//! Structured pass/fail records for one check at one parameter point.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

/// `expected` and `actual` are multisets rendered as strings. For
/// condition-style checks they hold condition names; a violated condition
/// shows up in `actual` with the location of the first counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub expected: Vec<String>,
    pub actual: Vec<String>,
    pub millis: u64,
}

pub type Params = BTreeMap<String, String>;

/// Builds a parameter record from `(name, value)` pairs.
pub fn params<const N: usize>(pairs: [(&str, String); N]) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Sorts and renders a multiset.
pub fn multiset<T: Ord + fmt::Display>(mut values: Vec<T>) -> Vec<String> {
    values.sort();
    values.iter().map(ToString::to_string).collect()
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Runs `body`, which returns `(expected, actual)`, and times it. Status
    /// is pass exactly when the two lists agree; an `Err` becomes an error
    /// report carrying the message.
    pub fn run(
        check: &str,
        params: Params,
        body: impl FnOnce() -> Result<(Vec<String>, Vec<String>), Error>,
    ) -> Self {
        let start = Instant::now();
        let outcome = body();
        let millis = start.elapsed().as_millis() as u64;
        let (status, expected, actual) = match outcome {
            Ok((e, a)) => (if e == a { Status::Pass } else { Status::Fail }, e, a),
            Err(err) => (Status::Error, Vec::new(), vec![err.to_string()]),
        };
        VerificationReport { check: check.to_string(), params, status, expected, actual, millis }
    }

    fn params_text(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for VerificationReport {
    /// `PASS check k=v ... (12 ms)`, with expected and actual appended when
    /// the check did not pass.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} ({} ms)", self.status, self.check, self.params_text(), self.millis)?;
        if !self.passed() {
            write!(f, " expected=[{}] actual=[{}]", self.expected.join(","), self.actual.join(","))?;
        }
        Ok(())
    }
}

/// Tracks named conditions for a lemma-style check: each condition starts as
/// holding and records the first counterexample when it fails.
#[derive(Debug, Default)]
pub struct Conditions {
    names: Vec<String>,
    failures: BTreeMap<usize, String>,
}

impl Conditions {
    pub fn new(names: &[&str]) -> Self {
        Conditions { names: names.iter().map(ToString::to_string).collect(), failures: BTreeMap::new() }
    }

    pub fn fail(&mut self, index: usize, at: impl FnOnce() -> String) {
        self.failures.entry(index).or_insert_with(|| format!("{} FAILED at {}", self.names[index], at()));
    }

    pub fn check(&mut self, index: usize, ok: bool, at: impl FnOnce() -> String) {
        if !ok {
            self.fail(index, at);
        }
    }

    pub fn into_lists(self) -> (Vec<String>, Vec<String>) {
        let actual = self
            .names
            .iter()
            .enumerate()
            .map(|(i, n)| self.failures.get(&i).cloned().unwrap_or_else(|| n.clone()))
            .collect();
        (self.names, actual)
    }
}
