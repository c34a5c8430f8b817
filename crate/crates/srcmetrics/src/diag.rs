//! Diagnostics emitted while scanning. These go to the error stream, never
//! into report output.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Severity {
    Warning,
    Error,
}

/// One scan diagnostic, attached to a file and optionally a line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub path: String,
    pub line: Option<u32>,
    pub message: String,
}

impl Diagnostic {
    pub fn warning(message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            path: String::new(),
            line: None,
            message: message.into(),
        }
    }

    pub fn warning_at(line: u32, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            path: String::new(),
            line: Some(line),
            message: message.into(),
        }
    }

    pub fn with_path(mut self, path: impl Into<String>) -> Self {
        self.path = path.into();
        self
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Warning => "warning",
            Severity::Error => "error",
        };
        match (self.path.is_empty(), self.line) {
            (false, Some(line)) => write!(f, "{sev}: {}:{line}: {}", self.path, self.message),
            (false, None) => write!(f, "{sev}: {}: {}", self.path, self.message),
            (true, Some(line)) => write!(f, "{sev}: line {line}: {}", self.message),
            (true, None) => write!(f, "{sev}: {}", self.message),
        }
    }
}
