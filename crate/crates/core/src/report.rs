//! Check outcomes and suite reports.
//!
//! A failing check always carries a concrete counterexample. Reports are
//! deterministic for fixed inputs; elapsed times are kept on the struct but
//! excluded from the JSON form so serialization stays stable.

use std::time::{Duration, Instant};

use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    pub fn new(
        inputs: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) -> Counterexample {
        Counterexample {
            inputs: inputs.into(),
            expected: expected.into(),
            actual: actual.into(),
        }
    }
}

/// Result of one check body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Counterexample),
    Skip(String),
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub skipped: Option<String>,
    pub counterexample: Option<Counterexample>,
    pub elapsed: Duration,
}

impl Check {
    pub fn run(name: &str, body: impl FnOnce() -> Outcome) -> Check {
        let start = Instant::now();
        let outcome = body();
        let elapsed = start.elapsed();
        match outcome {
            Outcome::Pass => Check {
                name: name.into(),
                pass: true,
                skipped: None,
                counterexample: None,
                elapsed,
            },
            Outcome::Skip(reason) => Check {
                name: name.into(),
                pass: true,
                skipped: Some(reason),
                counterexample: None,
                elapsed,
            },
            Outcome::Fail(ce) => Check {
                name: name.into(),
                pass: false,
                skipped: None,
                counterexample: Some(ce),
                elapsed,
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub suite: String,
    pub q: u64,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// `{suite, q, checks: [{name, pass, skipped?, counterexample?}]}`.
    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut obj = json!({ "name": c.name, "pass": c.pass });
                if let Some(reason) = &c.skipped {
                    obj["skipped"] = json!(reason);
                }
                if let Some(ce) = &c.counterexample {
                    obj["counterexample"] = json!({
                        "inputs": ce.inputs,
                        "expected": ce.expected,
                        "actual": ce.actual,
                    });
                }
                obj
            })
            .collect();
        json!({ "suite": self.suite, "q": self.q, "checks": checks })
    }
}
