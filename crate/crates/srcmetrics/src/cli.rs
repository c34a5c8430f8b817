//! Command-line interface. Exit codes: 0 success, 1 corpus/IO errors,
//! 2 usage errors. Reports go to standard output (or `--out`); diagnostics
//! go to standard error, never mixed into report output.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{apply_config_file, Jobs, RunConfig};
use crate::error::{Error, Result};
use crate::report::{
    build_snapshot_report, compare_snapshots, render_deltas, render_report, OutputFormat,
    SnapshotReport,
};
use crate::scan::analyze_tree;

#[derive(Parser)]
#[command(
    name = "srcmetrics",
    version,
    about = "Source-code metrics for C-family trees: size, complexity, CK suite, maintainability"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one or more source trees and write a snapshot report
    Analyze(AnalyzeArgs),
    /// Compare two json snapshot reports release-over-release
    Compare(CompareArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Root directories to scan
    #[arg(required = true, value_name = "DIR")]
    dirs: Vec<PathBuf>,
    /// Output format
    #[arg(long, value_parser = parse_format, value_name = "json|csv|table")]
    format: Option<OutputFormat>,
    /// Write the report here instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Release label embedded in the report
    #[arg(long, value_name = "STRING")]
    label: Option<String>,
    /// Comma-separated list of admitted extensions (default .cc,.cpp,.cxx,.hh,.hpp,.h,.icc)
    #[arg(long, value_name = "CSV-LIST")]
    ext: Option<String>,
    /// Glob pattern to exclude (repeatable)
    #[arg(long, value_name = "GLOB")]
    exclude: Vec<String>,
    /// Weight each declared method as 1 in WMC instead of its MCC
    #[arg(long)]
    wmc_unit: bool,
    /// Config file with [caps], [weights] and [admission] sections
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Worker count, or "auto" for one per core
    #[arg(long, value_parser = parse_jobs, value_name = "N|auto")]
    jobs: Option<Jobs>,
    /// Include per-file metric vectors in the report
    #[arg(long)]
    per_file: bool,
    /// Include per-class CK metrics in the report
    #[arg(long)]
    per_class: bool,
    /// Include per-function complexity in the report
    #[arg(long)]
    per_function: bool,
    /// Suppress diagnostics on standard error
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct CompareArgs {
    /// Baseline json report
    #[arg(value_name = "REPORT-A")]
    report_a: PathBuf,
    /// Newer json report
    #[arg(value_name = "REPORT-B")]
    report_b: PathBuf,
    /// Output format
    #[arg(long, value_parser = parse_format, value_name = "json|csv|table")]
    format: Option<OutputFormat>,
    /// Write the comparison here instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Suppress diagnostics on standard error
    #[arg(long)]
    quiet: bool,
}

fn parse_format(s: &str) -> std::result::Result<OutputFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_jobs(s: &str) -> std::result::Result<Jobs, String> {
    s.parse()
}

/// Parse argv and run. Returns the process exit code.
pub fn run_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders help/version on stdout (exit 0) and usage
            // errors on stderr (exit 2).
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Analyze(args) => run_analyze(args),
        Command::Compare(args) => run_compare(args),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn run_analyze(args: AnalyzeArgs) -> Result<()> {
    let mut config = RunConfig::default();
    if let Some(path) = &args.config {
        apply_config_file(&mut config, path)?;
    }
    config.roots = args.dirs;
    if let Some(format) = args.format {
        config.format = format;
    }
    if let Some(out) = args.out {
        config.out = Some(out);
    }
    if let Some(label) = args.label {
        config.label = label;
    }
    if let Some(ext) = &args.ext {
        config.extensions = ext
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(RunConfig::normalize_extension)
            .collect();
        if config.extensions.is_empty() {
            return Err(Error::Config("--ext must name at least one extension".into()));
        }
    }
    if !args.exclude.is_empty() {
        config.excludes = args.exclude;
    }
    if args.wmc_unit {
        config.wmc_unit = true;
    }
    if let Some(jobs) = args.jobs {
        config.jobs = jobs;
    }
    config.per_file = args.per_file;
    config.per_class = args.per_class;
    config.per_function = args.per_function;
    config.quiet = args.quiet;

    let outcome = analyze_tree(&config)?;
    if !config.quiet {
        for d in &outcome.diagnostics {
            eprintln!("{d}");
        }
    }
    let report = build_snapshot_report(&outcome, &config)?;
    let rendered = render_report(&report, config.format)?;
    write_output(&rendered, config.out.as_deref())
}

fn run_compare(args: CompareArgs) -> Result<()> {
    let before = load_report(&args.report_a)?;
    let after = load_report(&args.report_b)?;
    if before.config_fingerprint != after.config_fingerprint && !args.quiet {
        eprintln!(
            "warning: reports were produced with different configurations ({} vs {}); deltas may not be comparable",
            before.config_fingerprint, after.config_fingerprint
        );
    }
    let deltas = compare_snapshots(&before, &after)?;
    let rendered = render_deltas(&deltas, args.format.unwrap_or(OutputFormat::Table))?;
    write_output(&rendered, args.out.as_deref())
}

fn load_report(path: &std::path::Path) -> Result<SnapshotReport> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidReport {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn write_output(rendered: &str, out: Option<&std::path::Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, rendered).map_err(|e| Error::io(path, e)),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(rendered.as_bytes())
                .map_err(|e| Error::io("<stdout>", e))
        }
    }
}
