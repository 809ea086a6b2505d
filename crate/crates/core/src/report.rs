//! Machine-checked witness reports shared by the demos and the CLI.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub residual: f64,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, residual: f64) -> Self {
        Self {
            name: name.into(),
            pass,
            residual,
        }
    }

    /// A yes/no check; residual 0 on pass, 1 on failure.
    pub fn boolean(name: impl Into<String>, pass: bool) -> Self {
        Self::new(name, pass, if pass { 0.0 } else { 1.0 })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub claim: String,
    pub witnesses: Vec<Value>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(claim: impl Into<String>) -> Self {
        Self {
            claim: claim.into(),
            witnesses: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn witness(mut self, value: impl Serialize) -> Self {
        self.witnesses
            .push(serde_json::to_value(value).unwrap_or(Value::Null));
        self
    }

    pub fn check(mut self, check: Check) -> Self {
        self.checks.push(check);
        self
    }

    pub fn push_check(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "claim: {}", self.claim);
        for w in &self.witnesses {
            let _ = writeln!(out, "witness: {w}");
        }
        for c in &self.checks {
            let _ = writeln!(
                out,
                "[{}] {} (residual {:e})",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.residual
            );
        }
        let _ = write!(out, "result: {}", if self.passed() { "pass" } else { "fail" });
        out
    }
}
