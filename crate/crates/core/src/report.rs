//! Deterministic verification reports.
//!
//! A report is a tree of suites, each holding flat records with a stable
//! identifier, the inputs that produced the check, expected and actual
//! values, a scaled residual, and a verdict.  Some records also carry a
//! short derivation-index label under `eq` so external tooling can map
//! them back to a write-up.  Serialization order is fixed — struct fields
//! in declaration order, maps sorted by key — so the same seed always
//! produces byte-identical output.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::metric::scaled_err;

/// Schema identifier stamped into every report.
pub const SCHEMA: &str = "cp-report/1";

/// Environment variable that overrides the report seed.
pub const SEED_ENV: &str = "CP_SEED";

/// One verified claim.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eq: Option<String>,
    pub inputs: BTreeMap<String, Value>,
    pub expected: Value,
    pub actual: Value,
    pub residual: f64,
    pub pass: bool,
}

impl Record {
    /// Two floats compared under the scaled discrepancy.
    pub fn close(id: impl Into<String>, expected: f64, actual: f64, tol: f64) -> Record {
        let residual = scaled_err(expected, actual);
        Record {
            id: id.into(),
            eq: None,
            inputs: BTreeMap::new(),
            expected: json_f64(expected),
            actual: json_f64(actual),
            residual,
            pass: residual <= tol,
        }
    }

    /// A residual that should vanish to within `tol`.
    pub fn vanishes(id: impl Into<String>, residual: f64, tol: f64) -> Record {
        Record {
            id: id.into(),
            eq: None,
            inputs: BTreeMap::new(),
            expected: Value::from(0.0),
            actual: json_f64(residual),
            residual: residual.abs(),
            pass: residual.abs() <= tol,
        }
    }

    /// Exact integer agreement.
    pub fn exact_int(id: impl Into<String>, expected: i64, actual: i64) -> Record {
        Record {
            id: id.into(),
            eq: None,
            inputs: BTreeMap::new(),
            expected: Value::from(expected),
            actual: Value::from(actual),
            residual: (expected - actual).abs() as f64,
            pass: expected == actual,
        }
    }

    /// Structural agreement already serialized to values.
    pub fn matches(id: impl Into<String>, expected: Value, actual: Value) -> Record {
        let pass = expected == actual;
        Record {
            id: id.into(),
            eq: None,
            inputs: BTreeMap::new(),
            expected,
            actual,
            residual: if pass { 0.0 } else { 1.0 },
            pass,
        }
    }

    /// Attach a derivation-index label.
    pub fn eq(mut self, tag: &str) -> Record {
        self.eq = Some(tag.to_string());
        self
    }

    /// Attach one named input.
    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Record {
        self.inputs.insert(key.to_string(), value.into());
        self
    }
}

fn json_f64(x: f64) -> Value {
    // Keep non-finite values representable: JSON numbers cannot hold
    // them, so fall back to strings.
    if x.is_finite() {
        Value::from(x)
    } else {
        Value::from(format!("{x}"))
    }
}

/// Named group of records.
#[derive(Clone, Debug, Serialize)]
pub struct Suite {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub records: Vec<Record>,
}

impl Suite {
    pub fn new(name: impl Into<String>) -> Suite {
        Suite {
            name: name.into(),
            passed: 0,
            failed: 0,
            records: Vec::new(),
        }
    }

    pub fn push(&mut self, record: Record) {
        if record.pass {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.records.push(record);
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

/// Full report over every suite that ran.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: String,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub suites: Vec<Suite>,
}

impl Report {
    pub fn new(seed: u64) -> Report {
        Report {
            schema: SCHEMA.to_string(),
            seed,
            passed: 0,
            failed: 0,
            suites: Vec::new(),
        }
    }

    pub fn push(&mut self, suite: Suite) {
        self.passed += suite.passed;
        self.failed += suite.failed;
        self.suites.push(suite);
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    /// Deterministic pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serialization");
        out.push('\n');
        out
    }
}

/// Report seed: the override variable when set and parseable, otherwise
/// the given default.
pub fn seed_from_env(default: u64) -> u64 {
    match std::env::var(SEED_ENV) {
        Ok(text) => text.trim().parse().unwrap_or(default),
        Err(_) => default,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_carry_their_verdicts() {
        let r = Record::close("check", 1.0, 1.0 + 1e-12, 1e-9);
        assert!(r.pass);
        assert!(r.residual < 1e-9);
        let r = Record::close("check", 1.0, 1.1, 1e-9);
        assert!(!r.pass);
        let r = Record::vanishes("zero", 1e-12, 1e-9);
        assert!(r.pass);
        let r = Record::exact_int("int", 4, 5);
        assert!(!r.pass);
        assert_eq!(r.residual, 1.0);
    }

    #[test]
    fn suites_and_reports_tally_their_records() {
        let mut suite = Suite::new("demo");
        suite.push(Record::exact_int("a", 1, 1));
        suite.push(Record::exact_int("b", 1, 2));
        assert_eq!((suite.passed, suite.failed), (1, 1));
        let mut report = Report::new(7);
        report.push(suite);
        assert!(!report.all_pass());
        assert_eq!(report.failed, 1);
    }

    #[test]
    fn serialization_is_stable_across_runs() {
        let build = || {
            let mut suite = Suite::new("demo");
            suite.push(
                Record::close("pi", std::f64::consts::PI, 3.14159, 1e-3)
                    .eq("1.1")
                    .input("dim", 4)
                    .input("angle", 0.25),
            );
            let mut report = Report::new(99);
            report.push(suite);
            report.to_json()
        };
        let a = build();
        let b = build();
        assert_eq!(a, b);
        // Inputs serialize in key order regardless of insertion order.
        assert!(a.find("\"angle\"").unwrap() < a.find("\"dim\"").unwrap());
        assert!(a.contains("\"schema\": \"cp-report/1\""));
    }

    #[test]
    fn seed_override_parses_or_falls_back() {
        // The variable is unset in the test environment.
        std::env::remove_var(SEED_ENV);
        assert_eq!(seed_from_env(17), 17);
        std::env::set_var(SEED_ENV, "123");
        assert_eq!(seed_from_env(17), 123);
        std::env::set_var(SEED_ENV, "not-a-number");
        assert_eq!(seed_from_env(17), 17);
        std::env::remove_var(SEED_ENV);
    }
}
