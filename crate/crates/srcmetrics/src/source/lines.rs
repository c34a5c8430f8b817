//! Physical-line classification: every line is exactly one of Blank,
//! Comment, or Code.
//!
//! A line is Blank when it holds only whitespace, Comment when all of its
//! non-whitespace characters lie inside comment spans, and Code otherwise.
//! Mixed code+comment lines are Code. Preprocessor directives are ordinary
//! non-comment tokens, so their lines classify as Code.

use crate::source::token::{LineClass, Token, TokenKind};

/// Classify each physical line of the file the tokens came from.
///
/// Relies on the lexer property that every non-whitespace character belongs
/// to exactly one token, so per-line content can be reconstructed by
/// replaying token texts from their start positions.
pub fn classify_lines(tokens: &[Token], total_lines: usize) -> Vec<LineClass> {
    // 0 = nothing seen, 1 = comment content, 2 = code content.
    let mut marks = vec![0u8; total_lines];
    for token in tokens {
        let weight = if token.kind == TokenKind::CommentSpan {
            1
        } else {
            2
        };
        let mut line = token.line as usize;
        for c in token.text.chars() {
            if c == '\n' {
                line += 1;
            } else if !c.is_whitespace() {
                if let Some(mark) = marks.get_mut(line - 1) {
                    *mark = (*mark).max(weight);
                }
            }
        }
    }
    marks
        .into_iter()
        .map(|m| match m {
            0 => LineClass::Blank,
            1 => LineClass::Comment,
            _ => LineClass::Code,
        })
        .collect()
}

/// (code, blank, comment) counts for a classified file.
pub fn line_counts(classes: &[LineClass]) -> (u64, u64, u64) {
    let mut loc = 0;
    let mut bloc = 0;
    let mut cloc = 0;
    for class in classes {
        match class {
            LineClass::Code => loc += 1,
            LineClass::Blank => bloc += 1,
            LineClass::Comment => cloc += 1,
        }
    }
    (loc, bloc, cloc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::lexer::tokenize;

    fn classify(text: &str) -> Vec<LineClass> {
        let (tokens, _) = tokenize(text);
        classify_lines(&tokens, text.lines().count())
    }

    fn counts(text: &str) -> (u64, u64, u64) {
        line_counts(&classify(text))
    }

    #[test]
    fn empty_file() {
        assert_eq!(counts(""), (0, 0, 0));
    }

    #[test]
    fn code_blank_comment() {
        assert_eq!(counts("int x;\n\n// note\n"), (1, 1, 1));
    }

    #[test]
    fn mixed_line_is_code() {
        assert_eq!(classify("int x; // set x"), vec![LineClass::Code]);
    }

    #[test]
    fn block_comment_lines_are_comment() {
        let text = "/* one\n two\n three */";
        assert_eq!(
            classify(text),
            vec![LineClass::Comment, LineClass::Comment, LineClass::Comment]
        );
    }

    #[test]
    fn whitespace_only_line_inside_block_comment_is_blank() {
        let text = "/* a\n\nb */";
        assert_eq!(
            classify(text),
            vec![LineClass::Comment, LineClass::Blank, LineClass::Comment]
        );
    }

    #[test]
    fn preprocessor_lines_are_code() {
        let text = "#define N 10\n#define SUM(a, b) \\\n  ((a) + (b))\n";
        assert_eq!(
            classify(text),
            vec![LineClass::Code, LineClass::Code, LineClass::Code]
        );
    }

    #[test]
    fn string_with_comment_marker_is_code() {
        assert_eq!(classify("s = \"// not a comment\";"), vec![LineClass::Code]);
    }

    #[test]
    fn partition_always_holds() {
        for text in [
            "",
            "\n",
            "int x;",
            "int x;\n/* c */\n\n",
            "// only\n// comments",
            "#if FOO\nint a;\n#endif\n",
        ] {
            let total = text.lines().count() as u64;
            let (loc, bloc, cloc) = counts(text);
            assert_eq!(loc + bloc + cloc, total, "partition failed for {text:?}");
        }
    }
}
