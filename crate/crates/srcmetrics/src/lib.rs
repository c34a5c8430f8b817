//! Static source-code metrics for C-family object-oriented trees.
//!
//! `srcmetrics` tokenizes source files without compiling them and computes
//! program-size, code-distribution, control-flow-complexity and
//! object-orientation metrics, aggregates them into maintainability
//! criterion scores, and compares snapshots across releases.
//!
//! The library is the primary interface; the `srcmetrics` binary is a thin
//! wrapper over [`cli`]. Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p srcmetrics --example tokenize_and_count
//! cargo run -p srcmetrics --example cyclomatic_complexity
//! cargo run -p srcmetrics --example class_graph_metrics
//! cargo run -p srcmetrics --example maintainability_scores
//! cargo run -p srcmetrics --example snapshot_report
//! cargo run -p srcmetrics --example compare_releases
//! ```

pub mod cli;
pub mod config;
pub mod diag;
pub mod error;
pub mod metrics;
pub mod quality;
pub mod report;
pub mod scan;
pub mod source;

pub use diag::{Diagnostic, Severity};
pub use error::{Error, Result};
pub use metrics::{ClassMetrics, Metric, MetricVector};
pub use quality::{
    CapTable, Criterion, MaintainabilityReport, RelationMatrix, RelationStrength, Weights,
};
pub use report::{AggregateStats, OutputFormat, ReleaseDelta, SnapshotReport, Trend};
pub use scan::ScanOutcome;
pub use source::{
    ClassGraph, ClassRecord, FunctionRecord, LineClass, SourceFileRecord, Token, TokenKind,
};

/// Version stamp embedded in reports.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
