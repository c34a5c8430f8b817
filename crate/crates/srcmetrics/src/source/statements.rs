//! Statement counting.
//!
//! A statement is either a `;` terminator outside the parenthesized header
//! of a `for`, or a braced control/compound construct headed by one of
//! `if`, `else`, `for`, `while`, `do`, `switch`.

use crate::diag::Diagnostic;
use crate::source::token::{Token, TokenKind};

const BLOCK_KEYWORDS: &[&str] = &["if", "else", "for", "while", "do", "switch"];

/// Count statements in a tokenized file. Returns the count plus any
/// diagnostics (unbalanced braces still yield a count).
pub fn count_statements(tokens: &[Token]) -> (u64, Vec<Diagnostic>) {
    let sig: Vec<&Token> = tokens
        .iter()
        .filter(|t| {
            !matches!(
                t.kind,
                TokenKind::CommentSpan | TokenKind::PreprocessorLine
            )
        })
        .collect();

    // Mark semicolons inside for-headers so they are not counted.
    let mut in_for_header = vec![false; sig.len()];
    for (i, tok) in sig.iter().enumerate() {
        if tok.is_keyword("for") && sig.get(i + 1).is_some_and(|t| t.is_punct("(")) {
            if let Some(close) = matching_paren(&sig, i + 1) {
                for slot in in_for_header.iter_mut().take(close).skip(i + 2) {
                    *slot = true;
                }
            }
        }
    }

    let mut count = 0u64;
    let mut brace_depth = 0i64;
    let mut unbalanced = false;
    for (i, tok) in sig.iter().enumerate() {
        match tok.kind {
            TokenKind::Punctuator => match tok.text.as_str() {
                ";" if !in_for_header[i] => count += 1,
                "{" => brace_depth += 1,
                "}" => {
                    brace_depth -= 1;
                    if brace_depth < 0 {
                        unbalanced = true;
                        brace_depth = 0;
                    }
                }
                _ => {}
            },
            TokenKind::Keyword if BLOCK_KEYWORDS.contains(&tok.text.as_str()) => {
                if braced_construct(&sig, i) {
                    count += 1;
                }
            }
            _ => {}
        }
    }
    if brace_depth != 0 {
        unbalanced = true;
    }

    let mut diagnostics = Vec::new();
    if unbalanced {
        diagnostics.push(Diagnostic::warning(
            "unbalanced braces; statement count may be approximate",
        ));
    }
    (count, diagnostics)
}

/// Does the control keyword at `i` head a `{`-introduced construct?
/// Skips one parenthesized header when present (`if`, `for`, `while`,
/// `switch`); `else` and `do` must be followed directly by `{`.
fn braced_construct(sig: &[&Token], i: usize) -> bool {
    let mut j = i + 1;
    if matches!(sig[i].text.as_str(), "if" | "for" | "while" | "switch")
        && sig.get(j).is_some_and(|t| t.is_punct("("))
    {
        match matching_paren(sig, j) {
            Some(close) => j = close + 1,
            None => return false,
        }
    }
    sig.get(j).is_some_and(|t| t.is_punct("{"))
}

/// Index of the `)` matching the `(` at `open`, if the parens balance
/// before the end of input.
fn matching_paren(sig: &[&Token], open: usize) -> Option<usize> {
    let mut depth = 0i64;
    for (i, tok) in sig.iter().enumerate().skip(open) {
        if tok.is_punct("(") {
            depth += 1;
        } else if tok.is_punct(")") {
            depth -= 1;
            if depth == 0 {
                return Some(i);
            }
        }
    }
    None
}
