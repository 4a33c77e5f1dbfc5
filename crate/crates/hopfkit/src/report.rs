//! Pass/fail ledgers produced by validators and pipelines.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: impl Into<String>, witness: Option<String>) {
        self.checks.push(Check { name: name.into(), passed: witness.is_none(), witness });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.record(name, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.record(name, Some(witness.into()));
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, witness());
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn passed(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }

    /// Appends another report with every name prefixed.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.checks.push(Check { name: format!("{prefix}{}", c.name), ..c });
        }
    }

    /// Turns the first failure into an error.
    pub fn ensure(&self, context: &str) -> Result<()> {
        match self.failures().first() {
            None => Ok(()),
            Some(c) => Err(Error::Verification(format!(
                "{context}: {} ({})",
                c.name,
                c.witness.clone().unwrap_or_default()
            ))),
        }
    }

    pub fn lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| match &c.witness {
                None => format!("pass {}", c.name),
                Some(w) => format!("FAIL {} [{w}]", c.name),
            })
            .collect()
    }
}
