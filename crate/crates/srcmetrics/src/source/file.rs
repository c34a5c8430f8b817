//! Per-file analysis: one pass from raw text to a complete record.

use serde::{Deserialize, Serialize};

use crate::diag::Diagnostic;
use crate::source::lexer::tokenize;
use crate::source::lines::{classify_lines, line_counts};
use crate::source::statements::count_statements;
use crate::source::structure::{scan_structure, ClassRecord, FunctionRecord};
use crate::source::token::LineClass;

/// Everything measured about one source file.
///
/// The line counts partition the file: `loc + bloc + cloc_comment ==
/// total_lines`. `functions` holds every definition with a body, free
/// functions and methods alike. `classes` holds the definitions found in
/// the file plus carrier records for out-of-line methods whose class body
/// lives elsewhere; the corpus merge unifies them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceFileRecord {
    pub path: String,
    pub total_lines: u64,
    pub bloc: u64,
    pub cloc_comment: u64,
    pub loc: u64,
    pub statements: u64,
    pub functions: Vec<FunctionRecord>,
    pub classes: Vec<ClassRecord>,
}

/// Analyze one file's contents. Pure: equal inputs give equal records.
pub fn analyze_source(path: &str, text: &str) -> (SourceFileRecord, Vec<Diagnostic>) {
    let mut diagnostics = Vec::new();

    let (tokens, lex_diags) = tokenize(text);
    diagnostics.extend(lex_diags);

    let total_lines = text.lines().count();
    let line_classes = classify_lines(&tokens, total_lines);
    let (loc, bloc, cloc_comment) = line_counts(&line_classes);

    let (statements, stmt_diags) = count_statements(&tokens);
    diagnostics.extend(stmt_diags);

    let mut scan = scan_structure(&tokens);
    diagnostics.append(&mut scan.diagnostics);

    for f in &mut scan.functions {
        f.loc = span_code_lines(&line_classes, f.start_line, f.end_line);
    }
    for class in &mut scan.classes {
        for m in &mut class.methods {
            m.loc = span_code_lines(&line_classes, m.start_line, m.end_line);
        }
    }

    // Out-of-line definitions (`C::m`) ride along in carrier records until
    // the corpus merge finds their class.
    let mut classes = scan.classes;
    for f in &scan.functions {
        if let Some(owner) = &f.owner_class {
            if classes.iter().any(|c| &c.name == owner && !c.has_definition) {
                let carrier = classes
                    .iter_mut()
                    .find(|c| &c.name == owner && !c.has_definition)
                    .unwrap();
                carrier.methods.push(f.clone());
                carrier.method_names.insert(f.name.clone());
            } else if !classes
                .iter()
                .any(|c| &c.name == owner && c.methods.iter().any(|m| m == f))
            {
                let mut carrier = ClassRecord::new_carrier(owner.clone());
                carrier.method_names.insert(f.name.clone());
                carrier.methods.push(f.clone());
                classes.push(carrier);
            }
        }
    }

    for d in &mut diagnostics {
        if d.path.is_empty() {
            d.path = path.to_string();
        }
    }

    let record = SourceFileRecord {
        path: path.to_string(),
        total_lines: total_lines as u64,
        bloc,
        cloc_comment,
        loc,
        statements,
        functions: scan.functions,
        classes,
    };
    (record, diagnostics)
}

/// Code lines within an inclusive 1-based line span.
fn span_code_lines(line_classes: &[LineClass], start: u32, end: u32) -> u64 {
    let start = (start.max(1) - 1) as usize;
    let end = (end as usize).min(line_classes.len());
    line_classes[start.min(end)..end]
        .iter()
        .filter(|c| **c == LineClass::Code)
        .count() as u64
}
