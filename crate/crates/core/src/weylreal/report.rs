use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub equal: bool,
}

/// Outcome of one verification case. `equal` holds iff every check holds.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub theorem: String,
    pub parameters: BTreeMap<String, Value>,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub equal: bool,
    pub dims: BTreeMap<String, usize>,
    /// Wall-clock time; `None` once stripped for reproducible output.
    pub elapsed_ms: Option<u64>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(theorem: &str) -> Report {
        Report {
            theorem: theorem.to_string(),
            parameters: BTreeMap::new(),
            lhs_terms: 0,
            rhs_terms: 0,
            equal: true,
            dims: BTreeMap::new(),
            elapsed_ms: None,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, v: impl Into<Value>) -> Report {
        self.parameters.insert(key.to_string(), v.into());
        self
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.equal &= ok;
        self.checks.push(Check {
            name: name.into(),
            equal: ok,
        });
    }

    pub fn dim(&mut self, key: impl Into<String>, d: usize) {
        self.dims.insert(key.into(), d);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn terms(&mut self, lhs: usize, rhs: usize) {
        self.lhs_terms = self.lhs_terms.max(lhs);
        self.rhs_terms = self.rhs_terms.max(rhs);
    }

    pub fn finish(mut self, start: Instant) -> Report {
        self.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        self
    }

    /// Names of the failed checks.
    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.equal)
            .map(|c| c.name.as_str())
            .collect()
    }
}
