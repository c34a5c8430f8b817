//! Run configuration: admission rules, output selection, cap/weight
//! overrides, and the flat key = value config file.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::quality::{CapTable, Weights};
use crate::report::OutputFormat;

/// Extensions admitted by default.
pub const DEFAULT_EXTENSIONS: &[&str] = &[".cc", ".cpp", ".cxx", ".hh", ".hpp", ".h", ".icc"];

/// Worker-pool size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Jobs {
    Auto,
    Count(usize),
}

impl FromStr for Jobs {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s == "auto" {
            return Ok(Jobs::Auto);
        }
        match s.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Jobs::Count(n)),
            _ => Err(format!("jobs must be a positive integer or \"auto\", got {s:?}")),
        }
    }
}

impl fmt::Display for Jobs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Jobs::Auto => f.write_str("auto"),
            Jobs::Count(n) => write!(f, "{n}"),
        }
    }
}

/// Everything one run needs to know.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub roots: Vec<PathBuf>,
    /// Admitted file suffixes, each with its leading dot.
    pub extensions: Vec<String>,
    /// Glob patterns excluded after extension filtering.
    pub excludes: Vec<String>,
    pub format: OutputFormat,
    /// Report destination; standard output when absent.
    pub out: Option<PathBuf>,
    pub label: String,
    /// Weight each declared method as 1 in WMC instead of its MCC.
    pub wmc_unit: bool,
    pub caps: CapTable,
    pub weights: Weights,
    pub jobs: Jobs,
    pub per_file: bool,
    pub per_class: bool,
    pub per_function: bool,
    pub quiet: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            roots: Vec::new(),
            extensions: DEFAULT_EXTENSIONS.iter().map(|s| s.to_string()).collect(),
            excludes: Vec::new(),
            format: OutputFormat::Table,
            out: None,
            label: "snapshot".to_string(),
            wmc_unit: false,
            caps: CapTable::default(),
            weights: Weights::default(),
            jobs: Jobs::Auto,
            per_file: false,
            per_class: false,
            per_function: false,
            quiet: false,
        }
    }
}

impl RunConfig {
    /// Normalize a user-supplied extension list entry to `.ext` form.
    pub fn normalize_extension(ext: &str) -> String {
        let trimmed = ext.trim();
        if trimmed.starts_with('.') {
            trimmed.to_string()
        } else {
            format!(".{trimmed}")
        }
    }
}

/// Apply a config file to `config`. Flat INI-style sections:
///
/// ```text
/// [caps]
/// LOC = 1000
/// [weights]
/// inverse = 1
/// strong_inverse = 2
/// [admission]
/// extensions = .cc, .hh
/// exclude = **/test/**, **/build/**
/// ```
///
/// Command-line flags override anything set here.
pub fn apply_config_file(config: &mut RunConfig, path: &Path) -> Result<()> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut section = String::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with(';') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            section = name.trim().to_string();
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Config(format!(
                "{}:{}: expected `key = value`, got {line:?}",
                path.display(),
                lineno + 1
            )));
        };
        let key = key.trim();
        let value = value.trim();
        match section.as_str() {
            "caps" => {
                let metric = key.parse().map_err(Error::Config)?;
                let cap: f64 = value.parse().map_err(|_| {
                    Error::Config(format!("cap for {key} must be a number, got {value:?}"))
                })?;
                if cap <= 0.0 {
                    return Err(Error::Config(format!(
                        "cap for {key} must be positive, got {value}"
                    )));
                }
                config.caps.set(metric, cap);
            }
            "weights" => {
                let weight: f64 = value.parse().map_err(|_| {
                    Error::Config(format!("weight {key} must be a number, got {value:?}"))
                })?;
                match key {
                    "inverse" => config.weights.inverse = weight,
                    "strong_inverse" => config.weights.strong_inverse = weight,
                    other => {
                        return Err(Error::Config(format!(
                            "unknown weight key {other:?} (expected inverse or strong_inverse)"
                        )))
                    }
                }
            }
            "admission" => match key {
                "extensions" => {
                    config.extensions = value
                        .split(',')
                        .filter(|s| !s.trim().is_empty())
                        .map(RunConfig::normalize_extension)
                        .collect();
                }
                "exclude" => {
                    config.excludes = value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(str::to_string)
                        .collect();
                }
                other => {
                    return Err(Error::Config(format!(
                        "unknown admission key {other:?}"
                    )))
                }
            },
            other => {
                return Err(Error::Config(format!(
                    "unknown config section [{other}]"
                )))
            }
        }
    }
    if config.extensions.is_empty() {
        return Err(Error::Config(
            "admission extensions must not be empty".to_string(),
        ));
    }
    Ok(())
}

/// Stable hash of everything that affects metric values, so reports from
/// incompatible runs are detectable in comparisons.
pub fn fingerprint(config: &RunConfig) -> String {
    let mut canon = String::new();
    canon.push_str("extensions=");
    let mut exts = config.extensions.clone();
    exts.sort();
    canon.push_str(&exts.join(","));
    canon.push_str(";excludes=");
    let mut excludes = config.excludes.clone();
    excludes.sort();
    canon.push_str(&excludes.join(","));
    canon.push_str(&format!(";wmc_unit={}", config.wmc_unit));
    canon.push_str(";caps=");
    for (metric, cap) in &config.caps.0 {
        canon.push_str(&format!("{metric}:{cap},"));
    }
    canon.push_str(&format!(
        ";weights={},{}",
        config.weights.inverse, config.weights.strong_inverse
    ));
    let digest = Sha256::digest(canon.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    hex[..16].to_string()
}
