//! Snapshot reports: aggregate per-entity metrics into Table-style
//! statistics, compare two releases, and serialize the results.

mod render;

use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::metrics::{
    class_metrics, file_mcc, file_size_metrics, ClassMetrics, Metric, MetricVector,
};
use crate::quality::{package_report, MaintainabilityReport, RelationMatrix};
use crate::scan::ScanOutcome;
use crate::source::FunctionRecord;

pub use render::{render_deltas, render_report};

/// Serialization formats for reports and comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "table" => Ok(OutputFormat::Table),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Min/max/mean/total statistics of one metric over a population.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateStats {
    pub metric: String,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub total: f64,
    pub count: u64,
}

/// Exact aggregate statistics of a non-empty value list.
pub fn aggregate(values: &[f64], metric: impl Into<String>) -> Result<AggregateStats> {
    let metric = metric.into();
    if values.is_empty() {
        return Err(Error::NoEntities(metric));
    }
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut total = 0.0;
    for &v in values {
        min = min.min(v);
        max = max.max(v);
        total += v;
    }
    Ok(AggregateStats {
        metric,
        min,
        max,
        mean: total / values.len() as f64,
        total,
        count: values.len() as u64,
    })
}

/// Per-file metric detail (emitted with `--per-file`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FileDetail {
    pub path: String,
    pub metrics: MetricVector,
}

/// Per-function detail (emitted with `--per-function`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionDetail {
    pub path: String,
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub owner_class: Option<String>,
    pub start_line: u32,
    pub end_line: u32,
    pub loc: u64,
    pub mcc_traditional: u64,
    pub mcc_modified: u64,
}

impl FunctionDetail {
    fn new(path: &str, f: &FunctionRecord) -> Self {
        FunctionDetail {
            path: path.to_string(),
            name: f.name.clone(),
            owner_class: f.owner_class.clone(),
            start_line: f.start_line,
            end_line: f.end_line,
            loc: f.loc,
            mcc_traditional: f.mcc_traditional,
            mcc_modified: f.mcc_modified,
        }
    }
}

/// One analyzed source tree, aggregated and labeled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SnapshotReport {
    pub label: String,
    pub files: u64,
    /// LOC/BLOC/CLOC statistics over files.
    pub size: Vec<AggregateStats>,
    /// Methods/Statements statistics over files.
    pub distribution: Vec<AggregateStats>,
    /// MCC statistics over per-file sums.
    pub complexity_per_file: Vec<AggregateStats>,
    /// MCC statistics over individual function bodies.
    pub complexity_per_function: Vec<AggregateStats>,
    /// CK suite statistics over defined classes.
    pub oo: Vec<AggregateStats>,
    pub maintainability: MaintainabilityReport,
    /// Number of diagnostics emitted during the scan.
    pub diagnostics: u64,
    pub config_fingerprint: String,
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub per_file: Option<Vec<FileDetail>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub per_class: Option<Vec<ClassMetrics>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub per_function: Option<Vec<FunctionDetail>>,
}

/// Aggregate a completed scan into a snapshot report. Deterministic for a
/// fixed tree and configuration.
pub fn build_snapshot_report(outcome: &ScanOutcome, config: &RunConfig) -> Result<SnapshotReport> {
    if outcome.files.is_empty() {
        return Err(Error::EmptyCorpus);
    }

    let file_vectors: Vec<MetricVector> = outcome
        .files
        .iter()
        .map(|f| {
            let mut v = file_size_metrics(f);
            let (mcc_t, mcc_m) = file_mcc(&f.functions);
            v.set(Metric::MccTraditional, mcc_t as f64)
                .set(Metric::MccModified, mcc_m as f64);
            v
        })
        .collect();

    let column = |metric: Metric| -> Vec<f64> {
        file_vectors
            .iter()
            .filter_map(|v| v.get(metric))
            .collect()
    };

    let size = vec![
        aggregate(&column(Metric::Loc), "LOC")?,
        aggregate(&column(Metric::Bloc), "BLOC")?,
        aggregate(&column(Metric::Cloc), "CLOC")?,
    ];
    let distribution = vec![
        aggregate(&column(Metric::Methods), "Methods")?,
        aggregate(&column(Metric::Statements), "Statements")?,
    ];
    let complexity_per_file = vec![
        aggregate(&column(Metric::MccTraditional), "MCC_traditional")?,
        aggregate(&column(Metric::MccModified), "MCC_modified")?,
    ];

    let mut per_function_t = Vec::new();
    let mut per_function_m = Vec::new();
    for file in &outcome.files {
        for f in &file.functions {
            per_function_t.push(f.mcc_traditional as f64);
            per_function_m.push(f.mcc_modified as f64);
        }
    }
    let complexity_per_function = if per_function_t.is_empty() {
        Vec::new()
    } else {
        vec![
            aggregate(&per_function_t, "MCC_traditional")?,
            aggregate(&per_function_m, "MCC_modified")?,
        ]
    };

    let classes = class_metrics(&outcome.graph, config.wmc_unit);
    let class_vectors: Vec<MetricVector> = classes.iter().map(|c| c.to_vector()).collect();
    let oo = if classes.is_empty() {
        Vec::new()
    } else {
        let class_column = |metric: Metric| -> Vec<f64> {
            class_vectors
                .iter()
                .filter_map(|v| v.get(metric))
                .collect()
        };
        vec![
            aggregate(&class_column(Metric::Cbo), "CBO")?,
            aggregate(&class_column(Metric::Dit), "DIT")?,
            aggregate(&class_column(Metric::Lcom), "LCOM")?,
            aggregate(&class_column(Metric::Noc), "NOC")?,
            aggregate(&class_column(Metric::Rfc), "RFC")?,
            aggregate(&class_column(Metric::Wmc), "WMC")?,
            aggregate(&class_column(Metric::Methods), "Methods")?,
        ]
    };

    let matrix = RelationMatrix::default();
    let mut all_vectors = file_vectors.clone();
    all_vectors.extend(class_vectors);
    let maintainability =
        package_report(&all_vectors, &matrix, &config.caps, &config.weights)?;

    let per_file = config.per_file.then(|| {
        outcome
            .files
            .iter()
            .zip(&file_vectors)
            .map(|(f, v)| FileDetail {
                path: f.path.clone(),
                metrics: v.clone(),
            })
            .collect()
    });
    let per_class = config.per_class.then(|| classes.clone());
    let per_function = config.per_function.then(|| {
        outcome
            .files
            .iter()
            .flat_map(|file| {
                file.functions
                    .iter()
                    .map(|f| FunctionDetail::new(&file.path, f))
            })
            .collect()
    });

    Ok(SnapshotReport {
        label: config.label.clone(),
        files: outcome.files.len() as u64,
        size,
        distribution,
        complexity_per_file,
        complexity_per_function,
        oo,
        maintainability,
        diagnostics: outcome.diagnostics.len() as u64,
        config_fingerprint: crate::config::fingerprint(config),
        tool_version: crate::TOOL_VERSION.to_string(),
        per_file,
        per_class,
        per_function,
    })
}

/// Direction of a metric change between releases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Trend {
    Increasing,
    Decreasing,
    Flat,
}

/// Change of one statistic between two snapshots.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReleaseDelta {
    pub metric: String,
    pub value_before: f64,
    pub value_after: f64,
    pub delta: f64,
    /// Percent change relative to the before value; absent when the before
    /// value is zero.
    pub percent: Option<f64>,
    pub trend: Trend,
}

/// Flatten a report into (name, value) pairs in a fixed order.
fn flatten(report: &SnapshotReport) -> Vec<(String, f64)> {
    let mut out = vec![("files".to_string(), report.files as f64)];
    let sections: [(&str, &[AggregateStats]); 5] = [
        ("size", &report.size),
        ("distribution", &report.distribution),
        ("complexity_per_file", &report.complexity_per_file),
        ("complexity_per_function", &report.complexity_per_function),
        ("oo", &report.oo),
    ];
    for (section, stats) in sections {
        for s in stats {
            out.push((format!("{section}.{}.min", s.metric), s.min));
            out.push((format!("{section}.{}.max", s.metric), s.max));
            out.push((format!("{section}.{}.mean", s.metric), s.mean));
            out.push((format!("{section}.{}.total", s.metric), s.total));
            out.push((format!("{section}.{}.count", s.metric), s.count as f64));
        }
    }
    let m = &report.maintainability;
    out.push(("maintainability.analyzability".to_string(), m.analyzability));
    out.push(("maintainability.changeability".to_string(), m.changeability));
    out.push(("maintainability.stability".to_string(), m.stability));
    out.push(("maintainability.testability".to_string(), m.testability));
    out.push(("maintainability.overall".to_string(), m.overall));
    out
}

/// One delta per statistic shared by both reports, in report order.
pub fn compare_snapshots(
    before: &SnapshotReport,
    after: &SnapshotReport,
) -> Result<Vec<ReleaseDelta>> {
    let after_map: std::collections::BTreeMap<String, f64> =
        flatten(after).into_iter().collect();
    let mut deltas = Vec::new();
    for (name, value_before) in flatten(before) {
        let Some(&value_after) = after_map.get(&name) else {
            continue;
        };
        let delta = value_after - value_before;
        let percent = if value_before != 0.0 {
            Some(delta / value_before * 100.0)
        } else {
            None
        };
        let trend = if delta < 0.0 {
            Trend::Decreasing
        } else if delta > 0.0 {
            Trend::Increasing
        } else {
            Trend::Flat
        };
        deltas.push(ReleaseDelta {
            metric: name,
            value_before,
            value_after,
            delta,
            percent,
            trend,
        });
    }
    if deltas.is_empty() {
        return Err(Error::DisjointReports);
    }
    Ok(deltas)
}
