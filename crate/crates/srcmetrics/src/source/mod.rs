//! Source model: tokenize files without compiling them, classify every
//! physical line, and extract the functions, classes, inheritance links and
//! call sites that every metric consumes.
//!
//! The analyzer is lexical by design. It never preprocesses, expands
//! macros, instantiates templates or resolves overloads; both branches of
//! conditional compilation are scanned as text. That keeps the pipeline
//! self-contained and deterministic without build flags, at the cost of
//! the usual imprecision of line-counting tools.

pub mod file;
pub mod graph;
pub mod lexer;
pub mod lines;
pub mod statements;
pub mod structure;
pub mod token;

pub use file::{analyze_source, SourceFileRecord};
pub use graph::{build_class_graph, ClassGraph};
pub use lexer::tokenize;
pub use lines::{classify_lines, line_counts};
pub use statements::count_statements;
pub use structure::{extract_classes, extract_functions, ClassRecord, FunctionRecord};
pub use token::{LineClass, Token, TokenKind};
