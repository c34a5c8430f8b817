//! Report serialization: json (stable key order), csv (one row per
//! entity-kind/metric/statistic), and a fixed-width table with metrics as
//! columns and statistics as rows.

use crate::error::Result;
use crate::quality::Criterion;
use crate::report::{AggregateStats, OutputFormat, ReleaseDelta, SnapshotReport};

pub fn render_report(report: &SnapshotReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => Ok(to_json(report)?),
        OutputFormat::Csv => report_csv(report),
        OutputFormat::Table => Ok(report_table(report)),
    }
}

pub fn render_deltas(deltas: &[ReleaseDelta], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => Ok(to_json(&deltas)?),
        OutputFormat::Csv => deltas_csv(deltas),
        OutputFormat::Table => Ok(deltas_table(deltas)),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Integer-valued statistics print without decimals; means always carry
/// two (the display precision the aggregate tables use).
fn stat_value(value: f64, is_mean: bool) -> String {
    if is_mean {
        format!("{value:.2}")
    } else if value.fract() == 0.0 {
        format!("{value:.0}")
    } else {
        format!("{value:.2}")
    }
}

const STATISTICS: [&str; 5] = ["min", "max", "mean", "total", "count"];

fn stat_of(s: &AggregateStats, stat: &str) -> f64 {
    match stat {
        "min" => s.min,
        "max" => s.max,
        "mean" => s.mean,
        "total" => s.total,
        _ => s.count as f64,
    }
}

fn sections(report: &SnapshotReport) -> [(&'static str, &'static str, &[AggregateStats]); 5] {
    [
        ("file", "Program size (per file)", &report.size),
        (
            "file",
            "Code distribution (per file)",
            &report.distribution,
        ),
        (
            "file",
            "Control flow complexity (per-file totals)",
            &report.complexity_per_file,
        ),
        (
            "function",
            "Control flow complexity (per function)",
            &report.complexity_per_function,
        ),
        ("class", "Object orientation (per class)", &report.oo),
    ]
}

fn report_csv(report: &SnapshotReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["entity_kind", "metric", "statistic", "value"])?;
    w.write_record(["snapshot", "Files", "total", &stat_value(report.files as f64, false)])?;
    for (kind, _, stats) in sections(report) {
        for s in stats {
            for stat in STATISTICS {
                w.write_record([
                    kind,
                    s.metric.as_str(),
                    stat,
                    &stat_value(stat_of(s, stat), stat == "mean"),
                ])?;
            }
        }
    }
    let m = &report.maintainability;
    for c in Criterion::ALL {
        w.write_record([
            "snapshot",
            &format!("maintainability.{c}"),
            "score",
            &format!("{:.4}", m.score(c)),
        ])?;
    }
    w.write_record(["snapshot", "maintainability.overall", "score", &format!("{:.4}", m.overall)])?;

    // Entity detail rows: the statistic column holds the entity identity.
    if let Some(files) = &report.per_file {
        for f in files {
            for (metric, value) in f.metrics.iter() {
                w.write_record(["file", metric.name(), &f.path, &stat_value(value, false)])?;
            }
        }
    }
    if let Some(classes) = &report.per_class {
        for c in classes {
            for (metric, value) in c.to_vector().iter() {
                w.write_record(["class", metric.name(), &c.name, &stat_value(value, false)])?;
            }
        }
    }
    if let Some(functions) = &report.per_function {
        for f in functions {
            let id = format!("{}:{}:{}", f.path, f.start_line, f.name);
            w.write_record([
                "function",
                "MCC_traditional",
                &id,
                &stat_value(f.mcc_traditional as f64, false),
            ])?;
            w.write_record([
                "function",
                "MCC_modified",
                &id,
                &stat_value(f.mcc_modified as f64, false),
            ])?;
        }
    }
    let bytes = w.into_inner().expect("csv writer over Vec cannot fail");
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn report_table(report: &SnapshotReport) -> String {
    let mut out = String::new();
    let push_kv = |out: &mut String, key: &str, value: &str| {
        out.push_str(&format!("{key:<16}: {value}\n"));
    };
    push_kv(&mut out, "Release label", &report.label);
    push_kv(&mut out, "Files", &report.files.to_string());
    push_kv(&mut out, "Diagnostics", &report.diagnostics.to_string());
    push_kv(&mut out, "Tool version", &report.tool_version);
    push_kv(&mut out, "Config", &report.config_fingerprint);

    for (_, title, stats) in sections(report) {
        out.push('\n');
        out.push_str(title);
        out.push('\n');
        if stats.is_empty() {
            out.push_str("  (no entities)\n");
            continue;
        }
        out.push_str(&stats_block(stats));
    }

    out.push('\n');
    out.push_str("Maintainability\n");
    let m = &report.maintainability;
    for c in Criterion::ALL {
        let label = capitalized(c.name());
        out.push_str(&format!("  {label:<14} {:>7.4}\n", m.score(c)));
    }
    out.push_str(&format!("  {:<14} {:>7.4}\n", "Overall", m.overall));

    if let Some(files) = &report.per_file {
        out.push('\n');
        out.push_str("Per-file detail\n");
        for f in files {
            let cells: Vec<String> = f
                .metrics
                .iter()
                .map(|(m, v)| format!("{}={}", m.name(), stat_value(v, false)))
                .collect();
            out.push_str(&format!("  {}  {}\n", f.path, cells.join(" ")));
        }
    }
    if let Some(classes) = &report.per_class {
        out.push('\n');
        out.push_str("Per-class detail\n");
        for c in classes {
            out.push_str(&format!(
                "  {}  CBO={} DIT={} LCOM={} NOC={} RFC={} WMC={} Methods={}\n",
                c.name, c.cbo, c.dit, c.lcom, c.noc, c.rfc, c.wmc, c.methods
            ));
        }
    }
    if let Some(functions) = &report.per_function {
        out.push('\n');
        out.push_str("Per-function detail\n");
        for f in functions {
            let owner = f
                .owner_class
                .as_deref()
                .map(|o| format!("{o}::"))
                .unwrap_or_default();
            out.push_str(&format!(
                "  {}:{}  {}{}  loc={} mcc={}/{}\n",
                f.path, f.start_line, owner, f.name, f.loc, f.mcc_traditional, f.mcc_modified
            ));
        }
    }
    out
}

/// One fixed-width block: metric columns, statistic rows.
fn stats_block(stats: &[AggregateStats]) -> String {
    let labels = ["Min", "Max", "Mean", "Total", "Count"];
    let mut widths: Vec<usize> = Vec::new();
    let mut cells: Vec<Vec<String>> = Vec::new(); // [metric][stat]
    for s in stats {
        let column: Vec<String> = STATISTICS
            .iter()
            .map(|stat| stat_value(stat_of(s, stat), *stat == "mean"))
            .collect();
        let width = column
            .iter()
            .map(String::len)
            .chain(std::iter::once(s.metric.len()))
            .max()
            .unwrap_or(0);
        widths.push(width.max(6));
        cells.push(column);
    }

    let mut out = String::new();
    out.push_str(&format!("  {:<10}", "Statistic"));
    for (s, w) in stats.iter().zip(&widths) {
        out.push_str(&format!("  {:>w$}", s.metric, w = w));
    }
    out.push('\n');
    for (row, label) in labels.iter().enumerate() {
        out.push_str(&format!("  {label:<10}"));
        for (col, w) in cells.iter().zip(&widths) {
            out.push_str(&format!("  {:>w$}", col[row], w = w));
        }
        out.push('\n');
    }
    out
}

fn capitalized(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

fn deltas_csv(deltas: &[ReleaseDelta]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["metric", "before", "after", "delta", "percent", "trend"])?;
    for d in deltas {
        w.write_record([
            d.metric.as_str(),
            &format!("{}", d.value_before),
            &format!("{}", d.value_after),
            &format!("{}", d.delta),
            &d.percent.map(|p| format!("{p:.2}")).unwrap_or_default(),
            trend_name(d.trend),
        ])?;
    }
    let bytes = w.into_inner().expect("csv writer over Vec cannot fail");
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn deltas_table(deltas: &[ReleaseDelta]) -> String {
    let name_width = deltas
        .iter()
        .map(|d| d.metric.len())
        .max()
        .unwrap_or(6)
        .max(6);
    let mut out = String::new();
    out.push_str(&format!(
        "{:<name_width$}  {:>12}  {:>12}  {:>12}  {:>8}  {}\n",
        "Metric", "Before", "After", "Delta", "%", "Trend"
    ));
    for d in deltas {
        out.push_str(&format!(
            "{:<name_width$}  {:>12}  {:>12}  {:>12}  {:>8}  {}\n",
            d.metric,
            stat_value(d.value_before, false),
            stat_value(d.value_after, false),
            stat_value(d.delta, false),
            d.percent
                .map(|p| format!("{p:.2}"))
                .unwrap_or_else(|| "-".to_string()),
            trend_name(d.trend),
        ));
    }
    out
}

fn trend_name(t: crate::report::Trend) -> &'static str {
    match t {
        crate::report::Trend::Increasing => "Increasing",
        crate::report::Trend::Decreasing => "Decreasing",
        crate::report::Trend::Flat => "Flat",
    }
}
