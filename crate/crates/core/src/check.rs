//! Structured pass/fail results returned by the verification operations.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    /// A bounded search ran out before deciding.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubCheck {
    pub label: String,
    pub status: Status,
    pub detail: String,
}

/// Outcome of a multi-part verification; the overall status is the worst
/// sub-status (fail beats inconclusive beats pass).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub items: Vec<SubCheck>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), items: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.items.push(SubCheck { label: label.into(), status, detail: detail.into() });
    }

    pub fn check(&mut self, label: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push(label, if ok { Status::Pass } else { Status::Fail }, detail);
    }

    pub fn status(&self) -> Status {
        if self.items.iter().any(|i| i.status == Status::Fail) {
            Status::Fail
        } else if self.items.iter().any(|i| i.status == Status::Inconclusive) {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    /// Label of the first sub-check that did not pass.
    pub fn first_failure(&self) -> Option<&SubCheck> {
        self.items.iter().find(|i| i.status != Status::Pass)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {:?}", self.name, self.status())?;
        for i in &self.items {
            writeln!(f, "  [{:?}] {}: {}", i.status, i.label, i.detail)?;
        }
        Ok(())
    }
}
