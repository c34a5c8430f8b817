//! Lexical scanner for C-family source text.
//!
//! This is a counting lexer, not a compiler front end: no preprocessing, no
//! macro expansion, no template instantiation. Comments, string/char literals
//! and preprocessor directives become single opaque spans, so keyword text
//! inside them can never leak into any metric.
//!
//! Span rules:
//! - `//` runs to the end of the line; `/*` runs to the matching `*/`.
//! - A `#` preceded only by whitespace on its line opens a preprocessor
//!   directive that runs to the end of the line, honoring `\` continuations.
//!   The whole directive is one token; nothing inside it is recognized.
//! - String and char literals honor `\` escapes (which also lets them
//!   continue across an escaped newline) and implicitly close at an
//!   unescaped end of line.

use crate::diag::Diagnostic;
use crate::source::token::{is_keyword, Token, TokenKind};

const PUNCT3: &[&str] = &["<<=", ">>=", "...", "->*"];
const PUNCT2: &[&str] = &[
    "::", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||", "+=", "-=", "*=",
    "/=", "%=", "&=", "|=", "^=", ".*", "##",
];

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    line: u32,
    column: u32,
    /// True once the current line has seen any non-whitespace character;
    /// gates preprocessor recognition to `#` after leading whitespace only.
    line_has_content: bool,
    tokens: Vec<Token>,
    diagnostics: Vec<Diagnostic>,
}

/// Tokenize `text` into an ordered, non-overlapping token list.
///
/// Unterminated block comments or literals at end of file produce a
/// diagnostic and the remainder of the file becomes the open span.
pub fn tokenize(text: &str) -> (Vec<Token>, Vec<Diagnostic>) {
    let mut lx = Lexer {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        column: 1,
        line_has_content: false,
        tokens: Vec::new(),
        diagnostics: Vec::new(),
    };
    lx.run();
    (lx.tokens, lx.diagnostics)
}

impl Lexer {
    fn peek(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn starts_with(&self, s: &str) -> bool {
        s.chars()
            .enumerate()
            .all(|(i, c)| self.peek(i) == Some(c))
    }

    /// Consume one char, updating the position counters.
    fn bump(&mut self) -> char {
        let c = self.chars[self.pos];
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
            self.line_has_content = false;
        } else {
            self.column += 1;
        }
        c
    }

    fn push(&mut self, kind: TokenKind, text: String, line: u32, column: u32) {
        self.tokens.push(Token {
            kind,
            text,
            line,
            column,
        });
    }

    fn run(&mut self) {
        while let Some(c) = self.peek(0) {
            if c.is_whitespace() {
                self.bump();
                continue;
            }
            let (line, column) = (self.line, self.column);
            if self.starts_with("//") {
                self.line_comment(line, column);
            } else if self.starts_with("/*") {
                self.block_comment(line, column);
            } else if c == '#' && !self.line_has_content {
                self.preprocessor(line, column);
            } else if c == '"' {
                self.quoted(TokenKind::StringLiteral, '"', line, column);
            } else if c == '\'' {
                self.quoted(TokenKind::CharLiteral, '\'', line, column);
            } else if c.is_ascii_digit()
                || (c == '.' && self.peek(1).is_some_and(|d| d.is_ascii_digit()))
            {
                self.number(line, column);
            } else if c == '_' || c.is_alphabetic() {
                self.identifier(line, column);
            } else {
                self.punctuator(line, column);
            }
            self.line_has_content = true;
        }
    }

    fn line_comment(&mut self, line: u32, column: u32) {
        let mut text = String::new();
        while let Some(c) = self.peek(0) {
            if c == '\n' {
                break;
            }
            text.push(self.bump());
        }
        self.push(TokenKind::CommentSpan, text, line, column);
    }

    fn block_comment(&mut self, line: u32, column: u32) {
        let mut text = String::new();
        text.push(self.bump()); // '/'
        text.push(self.bump()); // '*'
        let mut closed = false;
        while self.peek(0).is_some() {
            if self.starts_with("*/") {
                text.push(self.bump());
                text.push(self.bump());
                closed = true;
                break;
            }
            text.push(self.bump());
        }
        if !closed {
            self.diagnostics.push(Diagnostic::warning_at(
                line,
                "unterminated block comment; rest of file treated as comment",
            ));
        }
        self.push(TokenKind::CommentSpan, text, line, column);
    }

    fn preprocessor(&mut self, line: u32, column: u32) {
        let mut text = String::new();
        while let Some(c) = self.peek(0) {
            if c == '\\' {
                // Line continuation: keep the backslash and newline in the
                // token so the span covers every continued line.
                if self.peek(1) == Some('\n') {
                    text.push(self.bump());
                    text.push(self.bump());
                    continue;
                }
                if self.peek(1) == Some('\r') && self.peek(2) == Some('\n') {
                    text.push(self.bump());
                    text.push(self.bump());
                    text.push(self.bump());
                    continue;
                }
            }
            if c == '\n' {
                break;
            }
            text.push(self.bump());
        }
        self.push(TokenKind::PreprocessorLine, text, line, column);
    }

    fn quoted(&mut self, kind: TokenKind, quote: char, line: u32, column: u32) {
        let mut text = String::new();
        text.push(self.bump()); // opening quote
        let mut closed = false;
        while let Some(c) = self.peek(0) {
            if c == '\\' && self.peek(1).is_some() {
                text.push(self.bump());
                text.push(self.bump());
                continue;
            }
            if c == '\n' {
                // Literals do not span physical lines; close implicitly.
                closed = true;
                break;
            }
            text.push(self.bump());
            if c == quote {
                closed = true;
                break;
            }
        }
        if !closed {
            let what = if kind == TokenKind::StringLiteral {
                "string"
            } else {
                "char"
            };
            self.diagnostics.push(Diagnostic::warning_at(
                line,
                format!("unterminated {what} literal at end of file"),
            ));
        }
        self.push(kind, text, line, column);
    }

    fn number(&mut self, line: u32, column: u32) {
        let mut text = String::new();
        while let Some(c) = self.peek(0) {
            if c.is_ascii_alphanumeric() || c == '_' || c == '.' {
                text.push(self.bump());
                // Exponent sign is part of the literal: 1e+9, 0x1p-3.
                if matches!(text.chars().last(), Some('e' | 'E' | 'p' | 'P'))
                    && matches!(self.peek(0), Some('+' | '-'))
                {
                    text.push(self.bump());
                }
            } else {
                break;
            }
        }
        self.push(TokenKind::NumberLiteral, text, line, column);
    }

    fn identifier(&mut self, line: u32, column: u32) {
        let mut text = String::new();
        while let Some(c) = self.peek(0) {
            if c == '_' || c.is_alphanumeric() {
                text.push(self.bump());
            } else {
                break;
            }
        }
        let kind = if is_keyword(&text) {
            TokenKind::Keyword
        } else {
            TokenKind::Identifier
        };
        self.push(kind, text, line, column);
    }

    fn punctuator(&mut self, line: u32, column: u32) {
        for p in PUNCT3 {
            if self.starts_with(p) {
                let text: String = (0..3).map(|_| self.bump()).collect();
                self.push(TokenKind::Punctuator, text, line, column);
                return;
            }
        }
        for p in PUNCT2 {
            if self.starts_with(p) {
                let text: String = (0..2).map(|_| self.bump()).collect();
                self.push(TokenKind::Punctuator, text, line, column);
                return;
            }
        }
        let text = self.bump().to_string();
        self.push(TokenKind::Punctuator, text, line, column);
    }
}
