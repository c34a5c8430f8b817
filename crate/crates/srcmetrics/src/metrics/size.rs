//! Program-size and code-distribution metrics, per file and per snapshot.

use crate::error::{Error, Result};
use crate::metrics::{Metric, MetricVector};
use crate::source::SourceFileRecord;

/// Size and distribution metrics of one file. File-level vectors never
/// carry OO metrics; `Methods` counts every function definition with a
/// body, free functions included.
pub fn file_size_metrics(record: &SourceFileRecord) -> MetricVector {
    let mut v = MetricVector::new();
    v.set(Metric::Loc, record.loc as f64)
        .set(Metric::Bloc, record.bloc as f64)
        .set(Metric::Cloc, record.cloc_comment as f64)
        .set(Metric::Statements, record.statements as f64)
        .set(Metric::Methods, record.functions.len() as f64);
    v
}

/// Snapshot totals: `Files` plus sums of the per-file metrics.
pub fn snapshot_distribution(records: &[SourceFileRecord]) -> Result<MetricVector> {
    if records.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut loc = 0u64;
    let mut bloc = 0u64;
    let mut cloc = 0u64;
    let mut statements = 0u64;
    let mut methods = 0u64;
    for r in records {
        loc += r.loc;
        bloc += r.bloc;
        cloc += r.cloc_comment;
        statements += r.statements;
        methods += r.functions.len() as u64;
    }
    let mut v = MetricVector::new();
    v.set(Metric::Files, records.len() as f64)
        .set(Metric::Loc, loc as f64)
        .set(Metric::Bloc, bloc as f64)
        .set(Metric::Cloc, cloc as f64)
        .set(Metric::Statements, statements as f64)
        .set(Metric::Methods, methods as f64);
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::analyze_source;

    fn record(path: &str, text: &str) -> SourceFileRecord {
        analyze_source(path, text).0
    }

    #[test]
    fn empty_file_is_all_zero() {
        let v = file_size_metrics(&record("e.cc", ""));
        for m in [
            Metric::Loc,
            Metric::Bloc,
            Metric::Cloc,
            Metric::Statements,
            Metric::Methods,
        ] {
            assert_eq!(v.get(m), Some(0.0), "{m}");
        }
        assert_eq!(v.get(Metric::Files), None);
    }

    #[test]
    fn counts_match_hand_classification() {
        let v = file_size_metrics(&record("t.cc", "int x;\n\n// note\n"));
        assert_eq!(v.get(Metric::Loc), Some(1.0));
        assert_eq!(v.get(Metric::Bloc), Some(1.0));
        assert_eq!(v.get(Metric::Cloc), Some(1.0));
    }

    #[test]
    fn block_comment_file_is_all_cloc() {
        let text = "/*\n1\n2\n3\n4\n5\n6\n7\n8\n*/";
        let v = file_size_metrics(&record("c.cc", text));
        assert_eq!(v.get(Metric::Cloc), Some(10.0));
        assert_eq!(v.get(Metric::Loc), Some(0.0));
    }

    #[test]
    fn snapshot_sums_and_counts_files() {
        let records = vec![
            record("a.cc", "int a;\nint b;\nint c;\n"),
            record("b.cc", "int d;\nint e;\nint f;\nint g;\n"),
        ];
        let v = snapshot_distribution(&records).unwrap();
        assert_eq!(v.get(Metric::Files), Some(2.0));
        assert_eq!(v.get(Metric::Loc), Some(7.0));
    }

    #[test]
    fn empty_corpus_is_an_error() {
        assert!(matches!(
            snapshot_distribution(&[]),
            Err(Error::EmptyCorpus)
        ));
    }

    #[test]
    fn additivity_and_permutation_invariance() {
        let a = record("a.cc", "int a;\nvoid f() { if (x) y(); }\n");
        let b = record("b.cc", "// doc\nint b;\n");
        let c = record("c.cc", "\n\nint c;\n");
        let fwd = snapshot_distribution(&[a.clone(), b.clone(), c.clone()]).unwrap();
        let rev = snapshot_distribution(&[c, b, a]).unwrap();
        assert_eq!(fwd, rev);
    }
}
