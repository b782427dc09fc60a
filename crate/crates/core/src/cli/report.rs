//! Deterministic reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::glue::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub item: String,
    pub kind: String,
    pub checks: Vec<CheckEntry>,
    /// Named presentations supporting the checks.
    pub witnesses: BTreeMap<String, String>,
    /// Set when the computation stopped with an error.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

impl Report {
    pub fn new(item: impl Into<String>, kind: impl Into<String>) -> Self {
        Report { item: item.into(), kind: kind.into(), checks: Vec::new(), witnesses: BTreeMap::new(), error: None }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        let status = if passed { Status::Pass } else { Status::Fail };
        self.checks.push(CheckEntry { name: name.into(), status, detail: detail.into() });
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.checks.push(CheckEntry { name: name.into(), status: Status::Skipped, detail: reason.into() });
    }

    /// Adds checks under a common prefix, e.g. `"thm5.1"`.
    pub fn extend(&mut self, prefix: &str, checks: &[Check]) {
        for c in checks {
            self.push(format!("{prefix}: {}", c.name), c.passed, c.detail.clone());
        }
    }

    pub fn witness(&mut self, key: impl Into<String>, value: impl ToString) {
        self.witnesses.insert(key.into(), value.to_string());
    }

    pub fn matching<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a CheckEntry> + 'a {
        self.checks.iter().filter(move |c| c.name.starts_with(prefix))
    }

    /// Every non-skipped check passed.
    pub fn all_passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// Every check under each `expected` prefix passed (and at least one exists), and
    /// some check under each `failures` prefix failed.
    pub fn meets(&self, expected: &[String], failures: &[String]) -> bool {
        if self.error.is_some() {
            return false;
        }
        if expected.is_empty() && failures.is_empty() {
            return self.all_passed();
        }
        let ok = expected.iter().all(|p| {
            let v: Vec<_> = self.matching(p).collect();
            !v.is_empty() && v.iter().all(|c| c.status == Status::Pass)
        });
        let bad = failures.iter().all(|p| self.matching(p).any(|c| c.status == Status::Fail));
        ok && bad
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} ({})", self.item, self.kind);
        for c in &self.checks {
            let _ = write!(s, "  [{}] {}", c.status.as_str(), c.name);
            if !c.detail.is_empty() {
                let _ = write!(s, " -- {}", c.detail);
            }
            s.push('\n');
        }
        for (k, v) in &self.witnesses {
            let _ = writeln!(s, "  {k}: {v}");
        }
        if let Some(e) = &self.error {
            let _ = writeln!(s, "  error: {e}");
        }
        s
    }
}
