//! Verification reports and their JSON and text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::error::SuiteError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub witness: String,
    pub elapsed_ms: u64,
    /// The statement being checked.
    pub anchor: String,
    /// Set for steps taken as given rather than machine-checked.
    pub imported: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub overall: Status,
    pub version: String,
    pub config: BTreeMap<String, String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(SuiteError::Config(format!("unknown format '{s}'"))),
        }
    }
}

impl VerificationReport {
    /// Checks are ordered by id so concurrent runs report identically.
    pub fn new(suite: &str, mut checks: Vec<CheckResult>, config: BTreeMap<String, String>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let overall = if checks.iter().all(|c| c.status == Status::Pass) {
            Status::Pass
        } else if checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Error
        };
        Self { suite: suite.into(), checks, overall, version: env!("CARGO_PKG_VERSION").into(), config }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Pretty JSON with keys sorted.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite:   {}", self.suite);
        let _ = writeln!(out, "version: {}", self.version);
        for (k, v) in &self.config {
            let _ = writeln!(out, "config:  {k} = {v}");
        }
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            let tag = if c.imported { " [imported]" } else { "" };
            let _ =
                writeln!(out, "{:<5} {:<width$} {:>6} ms  {}{}", c.status.label(), c.id, c.elapsed_ms, c.anchor, tag);
            if c.status != Status::Pass || !c.witness.is_empty() {
                let _ = writeln!(out, "      {:<width$}            {}", "", c.witness);
            }
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        let _ = writeln!(out, "overall: {} ({passed}/{} checks passed)", self.overall.label(), self.checks.len());
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }

    pub fn emit(&self, path: &Path, format: Format) -> Result<(), SuiteError> {
        std::fs::write(path, self.render(format))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(status: Status) -> VerificationReport {
        let check = CheckResult {
            id: "a".into(),
            status,
            witness: "0".into(),
            elapsed_ms: 0,
            anchor: "zero is zero".into(),
            imported: false,
        };
        VerificationReport::new("demo", vec![check], BTreeMap::new())
    }

    #[test]
    fn overall_follows_checks() {
        assert!(sample(Status::Pass).passed());
        assert_eq!(sample(Status::Fail).overall, Status::Fail);
        assert_eq!(sample(Status::Error).overall, Status::Error);
    }

    #[test]
    fn json_keys_are_sorted() {
        let json = sample(Status::Pass).to_json();
        let checks = json.find("\"checks\"").unwrap();
        let overall = json.find("\"overall\"").unwrap();
        let version = json.find("\"version\"").unwrap();
        assert!(checks < overall && overall < version);
        assert_eq!(json, sample(Status::Pass).to_json());
    }
}
