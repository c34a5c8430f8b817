//! McCabe cyclomatic complexity, computed by token counting.
//!
//! Both variants add 1 for the entire structure. The traditional variant
//! counts each occurrence of `for`, `if`, `while`, `case`, `&&`, `||` and
//! `?`; the modified variant counts `switch` instead of `case`. No other
//! token contributes (`else`, `do`, `default`, `catch` and `goto` add
//! nothing).

use crate::source::token::{Token, TokenKind};
use crate::source::FunctionRecord;

fn decision_count(body_tokens: &[Token], branch_keyword: &str) -> u64 {
    let mut count = 0;
    for tok in body_tokens {
        match tok.kind {
            TokenKind::Keyword => {
                if matches!(tok.text.as_str(), "for" | "if" | "while")
                    || tok.text == branch_keyword
                {
                    count += 1;
                }
            }
            TokenKind::Punctuator => {
                if matches!(tok.text.as_str(), "&&" | "||" | "?") {
                    count += 1;
                }
            }
            _ => {}
        }
    }
    count
}

/// Traditional MCC over one function body: 1 + for/if/while/case + &&/||/?.
pub fn mcc_traditional(body_tokens: &[Token]) -> u64 {
    1 + decision_count(body_tokens, "case")
}

/// Modified MCC over one function body: counts `switch` rather than `case`.
pub fn mcc_modified(body_tokens: &[Token]) -> u64 {
    1 + decision_count(body_tokens, "switch")
}

/// Per-file MCC totals over the file's function bodies; (0, 0) when the
/// file defines no functions.
pub fn file_mcc(functions: &[FunctionRecord]) -> (u64, u64) {
    functions.iter().fold((0, 0), |(t, m), f| {
        (t + f.mcc_traditional, m + f.mcc_modified)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::lexer::tokenize;

    fn both(body: &str) -> (u64, u64) {
        let toks = tokenize(body).0;
        (mcc_traditional(&toks), mcc_modified(&toks))
    }

    #[test]
    fn empty_body_floor() {
        assert_eq!(both("{}"), (1, 1));
    }

    #[test]
    fn if_with_logical_and() {
        assert_eq!(both("{ if (a && b) x(); }"), (3, 3));
    }

    #[test]
    fn switch_counts_cases_traditionally() {
        let (t, m) = both("{ switch(k){ case 1: case 2: case 3: break; } }");
        assert_eq!(t, 4); // 1 + three case labels
        assert_eq!(m, 2); // 1 + one switch
    }

    #[test]
    fn while_with_logical_or() {
        assert_eq!(both("{ while (p || q) {} }"), (3, 3));
    }

    #[test]
    fn ternary_counts_once() {
        assert_eq!(both("{ x = a ? b : c; }"), (2, 2));
    }

    #[test]
    fn do_while_contributes_one_decision() {
        // The `while` token of a do-while is the single decision; `do`
        // itself adds nothing.
        assert_eq!(both("{ do { x(); } while (c); }"), (2, 2));
    }

    #[test]
    fn else_adds_nothing_else_if_counts_once() {
        assert_eq!(both("{ if (a) x(); else y(); }"), (2, 2));
        assert_eq!(both("{ if (a) x(); else if (b) y(); }"), (3, 3));
    }

    #[test]
    fn keywords_in_strings_and_comments_are_inert() {
        let plain = both("{ x = 1; }");
        assert_eq!(both("{ x = 1; /* if while case && */ }"), plain);
        assert_eq!(both("{ x = 1; s = \"if (a && b)\"; }"), plain);
    }

    #[test]
    fn difference_law_on_mixed_body() {
        let body = "{ switch(a){ case 1: case 2: break; } if (b) { switch(c){ case 3: break; } } }";
        let toks = tokenize(body).0;
        let cases = toks.iter().filter(|t| t.is_keyword("case")).count() as i64;
        let switches = toks.iter().filter(|t| t.is_keyword("switch")).count() as i64;
        let (t, m) = both(body);
        assert_eq!(t as i64 - m as i64, cases - switches);
    }
}
