//! The on-disk description of a knot complex (`.kfc.json`).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// A generator with its Alexander grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorData {
    pub id: String,
    pub s: i64,
}

/// Coefficient one of `to` in `d^{a,b}(from)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiffEntryData {
    pub from: String,
    pub to: String,
    pub a: u32,
    pub b: u32,
}

/// Unvalidated complex as read from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexData {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<u32>,
    pub name: String,
    pub generators: Vec<GeneratorData>,
    pub diff: Vec<DiffEntryData>,
    pub involution: BTreeMap<String, String>,
}

impl ComplexData {
    /// Parses the JSON format. Unknown fields are rejected.
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Pretty JSON in the input format.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("complex data serializes")
    }
}
