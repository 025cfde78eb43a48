//! The report emitted by every command.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

/// SHA-256 of one input's text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub source: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub results: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, inputs: Vec<InputDigest>, results: Value) -> Self {
        Self { schema: SCHEMA, command: command.to_string(), inputs, results, checks: Vec::new() }
    }

    pub fn check(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), status: Status::from_bool(ok), detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    /// The PASS/FAIL lines of the human-readable output.
    pub fn check_lines(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                if c.detail.is_empty() {
                    format!("{} {}\n", c.status.as_str(), c.name)
                } else {
                    format!("{} {}: {}\n", c.status.as_str(), c.name, c.detail)
                }
            })
            .collect()
    }
}
