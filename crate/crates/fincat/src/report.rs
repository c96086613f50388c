//! Deterministic check reports. The structured rendering is JSON with
//! a fixed field order (struct declaration order); timings are only
//! attached when explicitly requested so that structured output is
//! byte-stable across runs.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// A constructed-object summary with nothing to pass or fail.
    Info,
}

/// One key-value pair of supporting data, ordered as inserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Detail {
    pub key: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<Detail>,
    /// Present exactly when the verdict is Fail: what went wrong, on
    /// which object, with component names.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>) -> CheckResult {
        CheckResult {
            name: name.into(),
            verdict: Verdict::Pass,
            details: Vec::new(),
            witness: None,
            timing_ms: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> CheckResult {
        CheckResult {
            name: name.into(),
            verdict: Verdict::Fail,
            details: Vec::new(),
            witness: Some(witness.into()),
            timing_ms: None,
        }
    }

    pub fn info(name: impl Into<String>) -> CheckResult {
        CheckResult {
            name: name.into(),
            verdict: Verdict::Info,
            details: Vec::new(),
            witness: None,
            timing_ms: None,
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl ToString) -> CheckResult {
        self.details.push(Detail {
            key: key.into(),
            value: value.to_string(),
        });
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<CheckResult>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    /// Exit code contract: 0 all pass, 1 some check failed. Input
    /// errors exit 2 before a report exists.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.passed())
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = format!("{}\n", self.command);
                for c in &self.checks {
                    let tag = match c.verdict {
                        Verdict::Pass => "pass",
                        Verdict::Fail => "FAIL",
                        Verdict::Info => "info",
                    };
                    out.push_str(&format!("  [{tag}] {}\n", c.name));
                    for d in &c.details {
                        out.push_str(&format!("      {} = {}\n", d.key, d.value));
                    }
                    if let Some(w) = &c.witness {
                        out.push_str(&format!("      witness: {w}\n"));
                    }
                    if let Some(t) = c.timing_ms {
                        out.push_str(&format!("      timing_ms: {t}\n"));
                    }
                }
                out
            }
        }
    }
}
