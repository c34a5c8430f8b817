//! Directory walking, file admission, and the parallel scan that turns a
//! tree into per-file records plus a merged class graph.
//!
//! Per-file analysis is pure and runs on a bounded worker pool; results are
//! collected in path order and merged serially, so the outcome is byte-
//! identical for any worker count.

use std::path::PathBuf;

use globset::{Glob, GlobSet, GlobSetBuilder};
use rayon::prelude::*;

use crate::config::{Jobs, RunConfig};
use crate::diag::Diagnostic;
use crate::error::{Error, Result};
use crate::source::{analyze_source, build_class_graph, ClassGraph, SourceFileRecord};

/// One admitted file: where to read it and how reports name it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmittedFile {
    pub absolute: PathBuf,
    pub display: String,
}

/// Result of scanning one tree.
#[derive(Debug, Clone)]
pub struct ScanOutcome {
    /// Per-file records in display-path order.
    pub files: Vec<SourceFileRecord>,
    pub graph: ClassGraph,
    pub diagnostics: Vec<Diagnostic>,
}

/// Walk the configured roots and admit files by extension, then apply the
/// exclusion globs. The returned list is sorted by display path; symlinks
/// are not followed.
pub fn walk_and_admit(config: &RunConfig) -> Result<(Vec<AdmittedFile>, Vec<Diagnostic>)> {
    let exclusions = build_globset(&config.excludes)?;
    let mut admitted = Vec::new();
    let mut diagnostics = Vec::new();

    for root in &config.roots {
        root.metadata().map_err(|e| Error::io(root, e))?;
        for entry in walkdir::WalkDir::new(root).follow_links(false) {
            let entry = match entry {
                Ok(e) => e,
                Err(e) => {
                    diagnostics.push(Diagnostic::warning(format!(
                        "unreadable entry skipped: {e}"
                    )));
                    continue;
                }
            };
            if !entry.file_type().is_file() {
                continue;
            }
            let name = entry.file_name().to_string_lossy();
            if !config.extensions.iter().any(|ext| name.ends_with(ext)) {
                continue;
            }
            let rel = entry
                .path()
                .strip_prefix(root)
                .unwrap_or(entry.path())
                .to_string_lossy()
                .replace('\\', "/");
            let display = if config.roots.len() == 1 {
                rel
            } else {
                format!("{}/{rel}", root.display())
            };
            if exclusions.is_match(&display) {
                continue;
            }
            admitted.push(AdmittedFile {
                absolute: entry.path().to_path_buf(),
                display,
            });
        }
    }

    admitted.sort_by(|a, b| a.display.cmp(&b.display));
    admitted.dedup_by(|a, b| a.display == b.display);
    if admitted.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    Ok((admitted, diagnostics))
}

fn build_globset(patterns: &[String]) -> Result<GlobSet> {
    let mut builder = GlobSetBuilder::new();
    for pattern in patterns {
        let glob = Glob::new(pattern)
            .map_err(|e| Error::Config(format!("invalid exclude pattern {pattern:?}: {e}")))?;
        builder.add(glob);
    }
    builder
        .build()
        .map_err(|e| Error::Config(format!("exclude patterns: {e}")))
}

/// Analyze admitted files on a pool of `jobs` workers and merge the class
/// graph. Unreadable files are skipped with a diagnostic.
pub fn analyze_files(files: &[AdmittedFile], jobs: Jobs) -> Result<ScanOutcome> {
    let threads = match jobs {
        Jobs::Auto => 0, // rayon default
        Jobs::Count(n) => n,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Config(format!("worker pool: {e}")))?;

    let results: Vec<(Option<SourceFileRecord>, Vec<Diagnostic>)> = pool.install(|| {
        files
            .par_iter()
            .map(|file| match std::fs::read(&file.absolute) {
                Err(e) => (
                    None,
                    vec![Diagnostic::warning(format!("skipped unreadable file: {e}"))
                        .with_path(file.display.clone())],
                ),
                Ok(bytes) => {
                    let mut diags = Vec::new();
                    let text = match String::from_utf8(bytes) {
                        Ok(s) => s,
                        Err(e) => {
                            diags.push(
                                Diagnostic::warning(
                                    "invalid UTF-8 bytes replaced with U+FFFD",
                                )
                                .with_path(file.display.clone()),
                            );
                            String::from_utf8_lossy(e.as_bytes()).into_owned()
                        }
                    };
                    let (record, mut file_diags) = analyze_source(&file.display, &text);
                    diags.append(&mut file_diags);
                    (Some(record), diags)
                }
            })
            .collect()
    });

    let mut records = Vec::with_capacity(files.len());
    let mut diagnostics = Vec::new();
    for (record, diags) in results {
        diagnostics.extend(diags);
        if let Some(r) = record {
            records.push(r);
        }
    }

    let (graph, graph_diags) = build_class_graph(
        records
            .iter()
            .map(|r| (r.path.as_str(), r.classes.as_slice())),
    )?;
    diagnostics.extend(graph_diags);

    Ok(ScanOutcome {
        files: records,
        graph,
        diagnostics,
    })
}

/// Full pipeline: walk, admit, analyze, merge.
pub fn analyze_tree(config: &RunConfig) -> Result<ScanOutcome> {
    let (admitted, walk_diags) = walk_and_admit(config)?;
    let mut outcome = analyze_files(&admitted, config.jobs)?;
    let mut diagnostics = walk_diags;
    diagnostics.append(&mut outcome.diagnostics);
    outcome.diagnostics = diagnostics;
    Ok(outcome)
}
