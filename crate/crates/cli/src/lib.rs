//! Library side of the `kfc` command-line tool: input loading, reports, the
//! subcommands and the self-test harness.

pub mod commands;
pub mod input;
pub mod report;
pub mod selftest;

use f2linalg::F2Matrix;
use thiserror::Error;

use knotcx::ValidationReport;

pub use report::{Check, InputDigest, Report, Status};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("unknown fixture {0} (known: UNKNOT, TREF_A, TREF_B, FIG8)")]
    UnknownFixture(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("cannot parse {name}: {message}")]
    Parse { name: String, message: String },
    #[error("{name} is not a valid complex: {report}")]
    Invalid { name: String, report: ValidationReport },
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid { .. } => 1,
            CliError::Usage(_) | CliError::UnknownFixture(_) | CliError::Io { .. } | CliError::Parse { .. } => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<bypass::BypassError> for CliError {
    fn from(e: bypass::BypassError) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<blocks::BlockError> for CliError {
    fn from(e: blocks::BlockError) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<splice::SpliceError> for CliError {
    fn from(e: splice::SpliceError) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<cfd::CfdError> for CliError {
    fn from(e: cfd::CfdError) -> Self {
        CliError::Internal(e.to_string())
    }
}

/// A finished command: its report and the human-readable rendering.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub text: String,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.report.passed() {
            0
        } else {
            1
        }
    }
}

/// Rows of a matrix as strings of `0`/`1`.
pub fn matrix_rows(matrix: &F2Matrix) -> Vec<String> {
    (0..matrix.rows()).map(|r| (0..matrix.cols()).map(|c| if matrix.get(r, c) { '1' } else { '0' }).collect()).collect()
}

/// JSON form of a matrix: shape plus rows.
pub fn matrix_json(matrix: &F2Matrix) -> serde_json::Value {
    serde_json::json!({ "rows": matrix.rows(), "cols": matrix.cols(), "entries": matrix_rows(matrix) })
}
