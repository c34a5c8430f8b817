//! Token and line-class vocabulary shared by the lexer and every metric.

use serde::{Deserialize, Serialize};

/// Classification of one physical source line.
///
/// Every line of a file maps to exactly one variant: `Blank` when it holds
/// only whitespace, `Comment` when all of its non-whitespace content lies
/// inside comment spans, `Code` otherwise (mixed code+comment lines are
/// `Code`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LineClass {
    Blank,
    Comment,
    Code,
}

/// Lexical category of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TokenKind {
    Identifier,
    Keyword,
    Punctuator,
    StringLiteral,
    CharLiteral,
    NumberLiteral,
    /// One comment, `//` to end of line or `/*` to the matching `*/`.
    /// The span may cover several lines; its contents are opaque.
    CommentSpan,
    /// One preprocessor directive, `#` through the end of line including
    /// `\` continuations. Opaque: contributes no keywords or statements.
    PreprocessorLine,
}

/// One lexical token with its 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub line: u32,
    pub column: u32,
}

impl Token {
    pub fn is_keyword(&self, kw: &str) -> bool {
        self.kind == TokenKind::Keyword && self.text == kw
    }

    pub fn is_punct(&self, p: &str) -> bool {
        self.kind == TokenKind::Punctuator && self.text == p
    }
}

/// C-family keyword set recognized by the lexer. Identifiers matching one of
/// these become `TokenKind::Keyword`; everything the metrics count (`for`,
/// `if`, `while`, `case`, `switch`) is in here.
pub const KEYWORDS: &[&str] = &[
    "alignas", "alignof", "asm", "auto", "bool", "break", "case", "catch", "char", "class",
    "const", "const_cast", "constexpr", "continue", "decltype", "default", "delete", "do",
    "double", "dynamic_cast", "else", "enum", "explicit", "export", "extern", "false", "final",
    "float", "for", "friend", "goto", "if", "inline", "int", "long", "mutable", "namespace",
    "new", "noexcept", "nullptr", "operator", "override", "private", "protected", "public",
    "register", "reinterpret_cast", "return", "short", "signed", "sizeof", "static",
    "static_assert", "static_cast", "struct", "switch", "template", "this", "throw", "true",
    "try", "typedef", "typeid", "typename", "union", "unsigned", "using", "virtual", "void",
    "volatile", "wchar_t", "while",
];

pub fn is_keyword(text: &str) -> bool {
    KEYWORDS.binary_search(&text).is_ok()
}
