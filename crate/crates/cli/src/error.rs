use std::fmt;

use torsor_core::{Error, ErrorKind};

/// A failure reported as `{"error": ..., "kind": ...}` on stderr.
#[derive(Debug)]
pub struct CliError {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: i32,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::InvalidInput.as_str(), message: message.into(), exit_code: 1 }
    }

    pub fn resource(message: impl Into<String>) -> Self {
        CliError { kind: ErrorKind::Resource.as_str(), message: message.into(), exit_code: 2 }
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": self.message, "kind": self.kind }).to_string()
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = e.kind();
        CliError {
            kind: kind.as_str(),
            message: e.to_string(),
            exit_code: if kind == ErrorKind::Resource { 2 } else { 1 },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}
