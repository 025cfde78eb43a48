//! Loading knot complexes from files or the bundled fixtures.

use std::path::Path;

use sha2::{Digest, Sha256};

use knotcx::{fixtures, ComplexData, KnotComplex, ValidationReport};

use crate::report::{self, InputDigest};
use crate::CliError;

/// Raw input text with its origin.
#[derive(Clone, Debug)]
pub struct Source {
    pub name: String,
    pub origin: &'static str,
    pub text: String,
}

impl Source {
    pub fn fixture(name: &str) -> Result<Self, CliError> {
        let text = fixtures::source(name).ok_or_else(|| CliError::UnknownFixture(name.to_string()))?;
        Ok(Self { name: name.to_string(), origin: "fixture", text: text.to_string() })
    }

    pub fn file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
        Ok(Self { name: path.display().to_string(), origin: "file", text })
    }

    pub fn digest(&self) -> InputDigest {
        InputDigest {
            name: self.name.clone(),
            source: self.origin.to_string(),
            sha256: hex::encode(Sha256::digest(self.text.as_bytes())),
        }
    }

    pub fn data(&self) -> Result<ComplexData, CliError> {
        let data = ComplexData::from_json(&self.text)
            .map_err(|e| CliError::Parse { name: self.name.clone(), message: e.to_string() })?;
        match data.schema {
            Some(version) if version != report::SCHEMA => Err(CliError::Parse {
                name: self.name.clone(),
                message: format!("unsupported schema version {version} (expected {})", report::SCHEMA),
            }),
            _ => Ok(data),
        }
    }

    /// Parses and validates; validation failures carry the full report.
    pub fn knot(&self) -> Result<KnotComplex, CliError> {
        let data = self.data()?;
        let report = knotcx::validate(&data);
        if !report.is_valid() {
            return Err(CliError::Invalid { name: self.name.clone(), report });
        }
        KnotComplex::new(&data).map_err(|e| CliError::Parse { name: self.name.clone(), message: e.to_string() })
    }
}

/// Resolves the inputs of a command: fixtures first, then files.
pub fn sources(fixtures: &[String], files: &[std::path::PathBuf]) -> Result<Vec<Source>, CliError> {
    let mut out = Vec::new();
    for name in fixtures {
        out.push(Source::fixture(name)?);
    }
    for path in files {
        out.push(Source::file(path)?);
    }
    Ok(out)
}

pub fn invalid_report_json(report: &ValidationReport) -> serde_json::Value {
    serde_json::to_value(&report.violations).expect("violations serialize")
}
