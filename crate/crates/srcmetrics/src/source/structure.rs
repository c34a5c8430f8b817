//! Structural extraction of function and class records from a token stream.
//!
//! This is a fuzzy, single-pass scanner in the tradition of lexical metric
//! tools: it recognizes definitions by shape (name, balanced parameter
//! list, `{` body) without resolving names or expanding macros. Function
//! bodies are consumed wholesale and never scanned for nested definitions.
//! Attribute-use and callee detection inside bodies are plain identifier
//! matches; locals shadowing members over-count, which is accepted.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::diag::Diagnostic;
use crate::metrics::complexity::{mcc_modified, mcc_traditional};
use crate::source::token::{Token, TokenKind};

/// One function or method definition with a body.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionRecord {
    pub name: String,
    /// Qualified name of the owning class: set for in-class definitions and
    /// for out-of-line `C::m` definitions, `None` for free functions.
    pub owner_class: Option<String>,
    pub start_line: u32,
    pub end_line: u32,
    /// Code lines inside the span; filled in once lines are classified.
    pub loc: u64,
    pub mcc_traditional: u64,
    pub mcc_modified: u64,
    /// Identifiers appearing in the signature (return type and parameters).
    #[serde(skip)]
    pub signature_idents: BTreeSet<String>,
    /// All identifiers appearing in the body.
    #[serde(skip)]
    pub body_idents: BTreeSet<String>,
    /// Identifiers directly followed by `(` in the body.
    #[serde(skip)]
    pub callees: BTreeSet<String>,
}

/// One class or struct definition (or, when `has_definition` is false, a
/// carrier for out-of-line methods whose class body lives elsewhere).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    /// Name qualified with enclosing namespaces and classes (`A::B`).
    pub name: String,
    /// Base-specifier names as written, template arguments stripped.
    pub base_names: Vec<String>,
    pub attribute_names: BTreeSet<String>,
    pub method_names: BTreeSet<String>,
    /// Method bodies found so far (in-class here; out-of-line ones join
    /// during the corpus merge).
    pub methods: Vec<FunctionRecord>,
    pub attribute_uses_per_method: BTreeMap<String, BTreeSet<String>>,
    pub callee_names_per_method: BTreeMap<String, BTreeSet<String>>,
    /// Identifiers used in attribute types and method signatures.
    pub referenced_type_names: BTreeSet<String>,
    /// True when a class body was seen; false for method carriers.
    pub has_definition: bool,
}

impl ClassRecord {
    /// Carrier record for out-of-line methods of a class whose body lives
    /// in another file (or outside the corpus).
    pub fn new_carrier(name: String) -> Self {
        ClassRecord::new(name, false)
    }

    fn new(name: String, has_definition: bool) -> Self {
        ClassRecord {
            name,
            base_names: Vec::new(),
            attribute_names: BTreeSet::new(),
            method_names: BTreeSet::new(),
            methods: Vec::new(),
            attribute_uses_per_method: BTreeMap::new(),
            callee_names_per_method: BTreeMap::new(),
            referenced_type_names: BTreeSet::new(),
            has_definition,
        }
    }
}

/// Everything the structural pass produces for one file.
#[derive(Debug, Clone, Default)]
pub struct StructureScan {
    /// All function definitions with bodies, free functions and methods alike.
    pub functions: Vec<FunctionRecord>,
    /// Class definitions found in the file.
    pub classes: Vec<ClassRecord>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Run the structural pass over a tokenized file.
pub fn scan_structure(tokens: &[Token]) -> StructureScan {
    let sig: Vec<&Token> = tokens
        .iter()
        .filter(|t| {
            !matches!(
                t.kind,
                TokenKind::CommentSpan | TokenKind::PreprocessorLine
            )
        })
        .collect();
    let mut scanner = Scanner {
        sig,
        pos: 0,
        scope: Vec::new(),
        out: StructureScan::default(),
    };
    scanner.scan_scope(None, false);
    scanner.out
}

/// Function definitions with bodies, in source order.
pub fn extract_functions(tokens: &[Token]) -> Vec<FunctionRecord> {
    scan_structure(tokens).functions
}

/// Class definitions, in source order.
pub fn extract_classes(tokens: &[Token]) -> Vec<ClassRecord> {
    scan_structure(tokens).classes
}

struct Scanner<'a> {
    sig: Vec<&'a Token>,
    pos: usize,
    /// Enclosing named scopes (namespaces and classes).
    scope: Vec<String>,
    out: StructureScan,
}

impl<'a> Scanner<'a> {
    fn cur(&self) -> Option<&'a Token> {
        self.sig.get(self.pos).copied()
    }

    fn peek(&self, offset: usize) -> Option<&'a Token> {
        self.sig.get(self.pos + offset).copied()
    }

    fn qualified(&self, name: &str) -> String {
        if self.scope.is_empty() {
            name.to_string()
        } else {
            format!("{}::{}", self.scope.join("::"), name)
        }
    }

    /// Scan one scope. `class_idx` points at the class record under
    /// construction when this is a class body; `braced` scopes end at the
    /// matching `}`.
    fn scan_scope(&mut self, class_idx: Option<usize>, braced: bool) {
        // Indices (into sig) of the statement accumulated so far.
        let mut stmt: Vec<usize> = Vec::new();
        loop {
            let Some(tok) = self.cur() else {
                if braced {
                    self.out.out_diag(Diagnostic::warning(
                        "unexpected end of file inside a braced scope",
                    ));
                }
                return;
            };
            match (tok.kind, tok.text.as_str()) {
                (TokenKind::Punctuator, "}") => {
                    self.pos += 1;
                    if braced {
                        if let Some(idx) = class_idx {
                            self.finish_statement(&stmt, Some(idx));
                        }
                        return;
                    }
                    // Stray close at file scope; drop and resynchronize.
                    stmt.clear();
                }
                (TokenKind::Punctuator, ";") => {
                    self.pos += 1;
                    self.finish_statement(&stmt, class_idx);
                    stmt.clear();
                }
                (TokenKind::Keyword, "namespace") if stmt.is_empty() => {
                    self.handle_namespace();
                }
                (TokenKind::Keyword, "extern") if stmt.is_empty() => {
                    self.pos += 1;
                    if self.cur().is_some_and(|t| t.kind == TokenKind::StringLiteral) {
                        self.pos += 1;
                        if self.cur().is_some_and(|t| t.is_punct("{")) {
                            self.pos += 1;
                            self.scan_scope(class_idx, true);
                        }
                    }
                }
                (TokenKind::Keyword, "class" | "struct" | "union") if stmt.is_empty() => {
                    if !self.handle_class() {
                        // Elaborated type specifier, not a definition; the
                        // keyword is part of an ordinary statement.
                        stmt.push(self.pos);
                        self.pos += 1;
                    }
                }
                (TokenKind::Keyword, "enum") if stmt.is_empty() => {
                    self.handle_enum();
                }
                (TokenKind::Keyword, "typedef" | "using" | "friend") if stmt.is_empty() => {
                    self.skip_statement();
                }
                (TokenKind::Keyword, "template") => {
                    self.pos += 1;
                    if self.cur().is_some_and(|t| t.is_punct("<")) {
                        self.skip_angles();
                    }
                }
                (TokenKind::Keyword, "public" | "protected" | "private")
                    if stmt.is_empty() && self.peek(1).is_some_and(|t| t.is_punct(":")) =>
                {
                    self.pos += 2;
                }
                (TokenKind::Punctuator, "{") => {
                    if stmt.is_empty() {
                        // Anonymous brace block at declaration scope; skip.
                        self.skip_braces();
                    } else if let Some(head) = parse_function_head(&self.sig, &stmt) {
                        self.finish_function(&stmt, head, class_idx);
                        stmt.clear();
                    } else if brace_continues_statement(&self.sig, &stmt) {
                        // Aggregate or member-brace initializer: the braces
                        // belong to the statement still being collected.
                        let start = self.pos;
                        self.skip_braces();
                        stmt.extend(start..self.pos);
                    } else {
                        // Unrecognized brace (macro body and the like).
                        self.skip_braces();
                        stmt.clear();
                    }
                }
                _ => {
                    stmt.push(self.pos);
                    self.pos += 1;
                }
            }
        }
    }

    fn handle_namespace(&mut self) {
        self.pos += 1; // namespace
        if self.cur().is_some_and(|t| t.is_keyword("inline")) {
            self.pos += 1;
        }
        let mut parts: Vec<String> = Vec::new();
        while let Some(t) = self.cur() {
            if t.kind == TokenKind::Identifier {
                parts.push(t.text.clone());
                self.pos += 1;
                if self.cur().is_some_and(|t| t.is_punct("::")) {
                    self.pos += 1;
                    continue;
                }
            }
            break;
        }
        match self.cur() {
            Some(t) if t.is_punct("{") => {
                self.pos += 1;
                let depth = parts.len();
                self.scope.extend(parts);
                self.scan_scope(None, true);
                self.scope.truncate(self.scope.len() - depth);
            }
            Some(t) if t.is_punct("=") => {
                // Namespace alias; no scope of its own.
                self.skip_statement();
            }
            _ => {}
        }
    }

    /// Parse a class/struct construct. Returns false when the keyword turns
    /// out to be an elaborated type specifier rather than a definition or
    /// forward declaration.
    fn handle_class(&mut self) -> bool {
        let start = self.pos;
        self.pos += 1; // class / struct / union
        let mut name: Option<String> = None;
        loop {
            match self.cur() {
                Some(t) if t.kind == TokenKind::Identifier => {
                    name = Some(t.text.clone());
                    self.pos += 1;
                    if self.cur().is_some_and(|t| t.is_punct("<")) {
                        // Specialization arguments reduce to the primary name.
                        self.skip_angles();
                    }
                }
                Some(t) if t.is_punct("::") => {
                    // Qualified definition head; keep the last component.
                    self.pos += 1;
                }
                Some(t) if t.is_punct(";") => {
                    // Forward declaration.
                    self.pos += 1;
                    return true;
                }
                Some(t) if t.is_punct(":") => {
                    return self.class_body(start, name, true);
                }
                Some(t) if t.is_punct("{") => {
                    return self.class_body(start, name, false);
                }
                _ => {
                    // `class A* p;`, macro noise, end of file: not a
                    // definition here.
                    self.pos = start;
                    return false;
                }
            }
        }
    }

    fn class_body(&mut self, start: usize, name: Option<String>, has_bases: bool) -> bool {
        let mut bases = Vec::new();
        if has_bases {
            self.pos += 1; // ':'
            if !self.parse_base_list(&mut bases) {
                self.pos = start;
                return false;
            }
        }
        // Now positioned at `{`.
        let Some(name) = name else {
            self.out.out_diag(Diagnostic::warning_at(
                self.cur().map_or(0, |t| t.line),
                "anonymous class skipped",
            ));
            self.skip_braces();
            return true;
        };
        self.pos += 1; // '{'
        let mut record = ClassRecord::new(self.qualified(&name), true);
        record.base_names = bases;
        self.out.classes.push(record);
        let idx = self.out.classes.len() - 1;
        self.scope.push(name);
        self.scan_scope(Some(idx), true);
        self.scope.pop();
        // Attributes may be declared after the methods that use them, so
        // the per-method maps are filled once the whole body has been seen.
        let class = &mut self.out.classes[idx];
        let method_info: Vec<(String, BTreeSet<String>, BTreeSet<String>)> = class
            .methods
            .iter()
            .map(|m| {
                let uses = m
                    .body_idents
                    .intersection(&class.attribute_names)
                    .cloned()
                    .collect();
                (m.name.clone(), uses, m.callees.clone())
            })
            .collect();
        for (name, uses, callees) in method_info {
            class
                .attribute_uses_per_method
                .entry(name.clone())
                .or_default()
                .extend(uses);
            class
                .callee_names_per_method
                .entry(name)
                .or_default()
                .extend(callees);
        }
        true
    }

    /// Base-specifier list between `:` and the body `{`. Access keywords are
    /// stripped; template arguments reduce to the primary name.
    fn parse_base_list(&mut self, bases: &mut Vec<String>) -> bool {
        let mut current = String::new();
        loop {
            let Some(t) = self.cur() else { return false };
            match (t.kind, t.text.as_str()) {
                (TokenKind::Punctuator, "{") => {
                    if !current.is_empty() {
                        bases.push(current);
                    }
                    return true;
                }
                (TokenKind::Punctuator, ",") => {
                    if !current.is_empty() {
                        bases.push(std::mem::take(&mut current));
                    }
                    self.pos += 1;
                }
                (TokenKind::Keyword, "public" | "protected" | "private" | "virtual") => {
                    self.pos += 1;
                }
                (TokenKind::Identifier, _) => {
                    if !current.is_empty() {
                        current.push_str("::");
                    }
                    current.push_str(&t.text);
                    self.pos += 1;
                    if self.cur().is_some_and(|t| t.is_punct("<")) {
                        self.skip_angles();
                    }
                }
                (TokenKind::Punctuator, "::") => {
                    self.pos += 1;
                }
                _ => return false, // `;` or anything unexpected: not a class head
            }
        }
    }

    fn handle_enum(&mut self) {
        self.pos += 1; // enum
        if self
            .cur()
            .is_some_and(|t| t.is_keyword("class") || t.is_keyword("struct"))
        {
            self.pos += 1;
        }
        if self.cur().is_some_and(|t| t.kind == TokenKind::Identifier) {
            self.pos += 1;
        }
        if self.cur().is_some_and(|t| t.is_punct(":")) {
            // Underlying type tokens up to `{` or `;`.
            self.pos += 1;
            while let Some(t) = self.cur() {
                if t.is_punct("{") || t.is_punct(";") {
                    break;
                }
                self.pos += 1;
            }
        }
        if self.cur().is_some_and(|t| t.is_punct("{")) {
            self.skip_braces();
        }
        // Trailing declarators (if any) accumulate as an ordinary statement.
    }

    /// Member statement ended by `;` (or by the class body closing). At
    /// class scope this classifies method declarations and attributes; at
    /// file scope it is discarded.
    fn finish_statement(&mut self, stmt: &[usize], class_idx: Option<usize>) {
        let Some(idx) = class_idx else { return };
        if stmt.is_empty() {
            return;
        }
        let toks: Vec<&Token> = stmt.iter().map(|&i| self.sig[i]).collect();
        if let Some(decl) = parse_method_decl(&toks) {
            let class = &mut self.out.classes[idx];
            class.method_names.insert(decl.name);
            class.referenced_type_names.extend(decl.signature_idents);
            return;
        }
        // Attribute declarator extraction: split on top-level commas, take
        // the last depth-0 identifier of each chunk before `=`, `[` or `:`.
        let class = &mut self.out.classes[idx];
        let mut declared: Vec<String> = Vec::new();
        for chunk in split_top_level(&toks, ",") {
            if let Some(name) = declarator_name(&chunk) {
                declared.push(name);
            }
        }
        if declared.is_empty() {
            return;
        }
        for t in &toks {
            if t.kind == TokenKind::Identifier && !declared.iter().any(|d| d == &t.text) {
                class.referenced_type_names.insert(t.text.clone());
            }
        }
        class.attribute_names.extend(declared);
    }

    /// A function head followed by `{`: consume the body, build the record,
    /// and attach it to the enclosing class when applicable.
    fn finish_function(&mut self, stmt: &[usize], head: FunctionHead, class_idx: Option<usize>) {
        let body_start = self.pos;
        let open_tok = self.sig[body_start];
        if !self.skip_braces() {
            self.out.out_diag(Diagnostic::warning_at(
                open_tok.line,
                format!("unmatched braces in `{}`; candidate discarded", head.name),
            ));
            return;
        }
        let body: Vec<Token> = self.sig[body_start..self.pos]
            .iter()
            .map(|t| (*t).clone())
            .collect();

        let mut body_idents = BTreeSet::new();
        let mut callees = BTreeSet::new();
        for (i, t) in body.iter().enumerate() {
            if t.kind == TokenKind::Identifier {
                body_idents.insert(t.text.clone());
                if body.get(i + 1).is_some_and(|n| n.is_punct("(")) {
                    callees.insert(t.text.clone());
                }
            }
        }

        let owner = if head.qualifiers.is_empty() {
            class_idx.map(|idx| self.out.classes[idx].name.clone())
        } else {
            Some(self.qualified(&head.qualifiers.join("::")))
        };
        let start_line = self.sig[stmt[0]].line;
        let end_line = self.sig[self.pos - 1].line;
        let record = FunctionRecord {
            name: head.name,
            owner_class: owner,
            start_line,
            end_line,
            loc: 0,
            mcc_traditional: mcc_traditional(&body),
            mcc_modified: mcc_modified(&body),
            signature_idents: head.signature_idents,
            body_idents,
            callees,
        };

        // In-class definition: record the method on the class as well.
        if head.qualifiers.is_empty() {
            if let Some(idx) = class_idx {
                let class = &mut self.out.classes[idx];
                class.method_names.insert(record.name.clone());
                class
                    .referenced_type_names
                    .extend(record.signature_idents.iter().cloned());
                class.methods.push(record.clone());
            }
        }
        self.out.functions.push(record);
    }

    /// Skip a balanced `{ ... }` group starting at the current `{`.
    /// Returns false when the input ends first.
    fn skip_braces(&mut self) -> bool {
        let mut depth = 0i64;
        while let Some(t) = self.cur() {
            if t.is_punct("{") {
                depth += 1;
            } else if t.is_punct("}") {
                depth -= 1;
                if depth == 0 {
                    self.pos += 1;
                    return true;
                }
            }
            self.pos += 1;
        }
        false
    }

    /// Skip a balanced `< ... >` group starting at the current `<`. Angles
    /// are only counted outside parens; `>>` closes two levels. Bails out
    /// (without consuming the stopper) on `;` or `{`.
    fn skip_angles(&mut self) {
        let mut angle = 0i64;
        let mut paren = 0i64;
        while let Some(t) = self.cur() {
            if t.kind == TokenKind::Punctuator {
                match t.text.as_str() {
                    "(" | "[" => paren += 1,
                    ")" | "]" => paren -= 1,
                    "<" if paren == 0 => angle += 1,
                    ">" if paren == 0 => angle -= 1,
                    ">>" if paren == 0 => angle -= 2,
                    ";" | "{" if paren <= 0 => return,
                    _ => {}
                }
            }
            self.pos += 1;
            if angle <= 0 {
                return;
            }
        }
    }

    /// Skip to and through the next `;` at top level, balancing all bracket
    /// kinds on the way (handles `typedef struct { ... } T;`).
    fn skip_statement(&mut self) {
        let mut depth = 0i64;
        while let Some(t) = self.cur() {
            if t.kind == TokenKind::Punctuator {
                match t.text.as_str() {
                    "(" | "[" | "{" => depth += 1,
                    ")" | "]" | "}" => depth -= 1,
                    ";" if depth <= 0 => {
                        self.pos += 1;
                        return;
                    }
                    _ => {}
                }
            }
            self.pos += 1;
        }
    }
}

impl StructureScan {
    fn out_diag(&mut self, d: Diagnostic) {
        self.diagnostics.push(d);
    }
}

struct FunctionHead {
    name: String,
    /// Qualifier chain written before the name (`C` in `C::m`).
    qualifiers: Vec<String>,
    signature_idents: BTreeSet<String>,
}

struct MethodDecl {
    name: String,
    signature_idents: BTreeSet<String>,
}

/// Decide whether the statement tokens collected before a `{` form a
/// function-definition head, and pull the name and qualifiers out if so.
fn parse_function_head(sig: &[&Token], stmt: &[usize]) -> Option<FunctionHead> {
    let toks: Vec<&Token> = stmt.iter().map(|&i| sig[i]).collect();
    let shape = match_callable(&toks)?;
    // The tail after the parameter list must consist of specifiers and at
    // most one ctor-initializer, ending at the body brace.
    if !valid_definition_tail(&toks, shape.params_end + 1) {
        return None;
    }
    Some(FunctionHead {
        name: shape.name,
        qualifiers: shape.qualifiers,
        signature_idents: shape.signature_idents,
    })
}

/// Method declaration inside a class body: callable shape whose tail (up to
/// the terminating `;`) holds only specifiers or `= 0|default|delete`.
fn parse_method_decl(toks: &[&Token]) -> Option<MethodDecl> {
    let shape = match_callable(toks)?;
    if !valid_declaration_tail(toks, shape.params_end + 1) {
        return None;
    }
    Some(MethodDecl {
        name: shape.name,
        signature_idents: shape.signature_idents,
    })
}

struct CallableShape {
    name: String,
    qualifiers: Vec<String>,
    /// Index (within the statement) of the `)` closing the parameter list.
    params_end: usize,
    signature_idents: BTreeSet<String>,
}

/// Match `qualified-name ( params )` inside a statement, handling operator
/// functions and destructors. Returns None when no callable shape exists.
fn match_callable(toks: &[&Token]) -> Option<CallableShape> {
    let params_open = find_params_open(toks)?;
    let params_end = matching_close(toks, params_open, "(", ")")?;

    // Name and qualifier chain, scanned backward from the `(`.
    let (name, name_start, qualifiers) = scan_name_chain(toks, params_open)?;

    let mut signature_idents = BTreeSet::new();
    for t in toks[..name_start]
        .iter()
        .chain(&toks[params_open + 1..params_end])
    {
        if t.kind == TokenKind::Identifier {
            signature_idents.insert(t.text.clone());
        }
    }
    Some(CallableShape {
        name,
        qualifiers,
        params_end,
        signature_idents,
    })
}

/// Index of the `(` opening the parameter list: the first top-level `(`
/// preceded by an identifier (or by an operator name), with no top-level
/// `=` anywhere before it.
fn find_params_open(toks: &[&Token]) -> Option<usize> {
    // Operator functions carry their own naming rules.
    if let Some(op) = toks.iter().position(|t| t.is_keyword("operator")) {
        return operator_params_open(toks, op);
    }
    let mut depth = 0i64;
    for (i, t) in toks.iter().enumerate() {
        if t.kind != TokenKind::Punctuator {
            continue;
        }
        match t.text.as_str() {
            "=" if depth == 0 => return None, // initializer, not a definition
            "(" => {
                if depth == 0 && i > 0 && toks[i - 1].kind == TokenKind::Identifier {
                    return Some(i);
                }
                depth += 1;
            }
            "[" | "{" => depth += 1,
            ")" | "]" | "}" => depth -= 1,
            _ => {}
        }
    }
    None
}

/// Parameter-list `(` for an `operator` function. `operator()` is the one
/// case where the symbol itself is a paren pair.
fn operator_params_open(toks: &[&Token], op: usize) -> Option<usize> {
    let mut i = op + 1;
    if toks.get(i).is_some_and(|t| t.is_punct("(")) && toks.get(i + 1).is_some_and(|t| t.is_punct(")"))
    {
        i += 2; // the call-operator symbol
    } else {
        while i < toks.len() && !toks[i].is_punct("(") {
            i += 1;
        }
    }
    toks.get(i).filter(|t| t.is_punct("(")).map(|_| i)
}

/// Backward scan of the `[~] name (:: [~] name)*` chain ending right
/// before the parameter list. Returns (name, chain start index, qualifiers).
fn scan_name_chain(toks: &[&Token], params_open: usize) -> Option<(String, usize, Vec<String>)> {
    // Operator functions: name is `operator` plus its symbol tokens.
    if let Some(op) = toks.iter().position(|t| t.is_keyword("operator")) {
        let sym_toks = &toks[op + 1..params_open];
        let wordy = sym_toks
            .iter()
            .any(|t| matches!(t.kind, TokenKind::Keyword | TokenKind::Identifier));
        let name = if wordy {
            // Conversion operator: `operator unsigned int`, `operator T`.
            let words: Vec<&str> = sym_toks.iter().map(|t| t.text.as_str()).collect();
            format!("operator {}", words.join(" "))
        } else {
            let syms: String = sym_toks.iter().map(|t| t.text.as_str()).collect();
            format!("operator{syms}")
        };
        let mut qualifiers = Vec::new();
        let mut start = op;
        while start >= 2
            && toks[start - 1].is_punct("::")
            && toks[start - 2].kind == TokenKind::Identifier
        {
            qualifiers.insert(0, toks[start - 2].text.clone());
            start -= 2;
        }
        return Some((name, start, qualifiers));
    }

    let name_tok = toks.get(params_open.checked_sub(1)?)?;
    if name_tok.kind != TokenKind::Identifier {
        return None;
    }
    let mut name = name_tok.text.clone();
    let mut start = params_open - 1;
    if start >= 1 && toks[start - 1].is_punct("~") {
        name = format!("~{name}");
        start -= 1;
    }
    let mut qualifiers = Vec::new();
    while start >= 2 && toks[start - 1].is_punct("::") {
        let mut q = start - 2;
        // Skip backward over template arguments on the qualifier.
        if toks[q].is_punct(">") {
            let mut depth = 0i64;
            loop {
                match toks[q].text.as_str() {
                    ">" => depth += 1,
                    ">>" => depth += 2,
                    "<" => depth -= 1,
                    _ => {}
                }
                if depth <= 0 || q == 0 {
                    break;
                }
                q -= 1;
            }
            if q == 0 {
                break;
            }
            q -= 1;
        }
        if toks[q].kind != TokenKind::Identifier {
            break;
        }
        qualifiers.insert(0, toks[q].text.clone());
        start = q;
    }
    Some((name, start, qualifiers))
}

/// Definition tail: `const`/`volatile`/`override`/`final`, `noexcept` or
/// `throw` with optional parens, a trailing return type, then optionally a
/// ctor-initializer introduced by `:` which runs to the body.
fn valid_definition_tail(toks: &[&Token], mut i: usize) -> bool {
    while i < toks.len() {
        let t = toks[i];
        match (t.kind, t.text.as_str()) {
            (TokenKind::Keyword, "const" | "volatile" | "override" | "final") => i += 1,
            (TokenKind::Keyword, "noexcept" | "throw") => {
                i += 1;
                if toks.get(i).is_some_and(|t| t.is_punct("(")) {
                    match matching_close(toks, i, "(", ")") {
                        Some(close) => i = close + 1,
                        None => return false,
                    }
                }
            }
            (TokenKind::Punctuator, "->") => {
                // Trailing return type: accept everything up to a top-level
                // `:` (ctor-init cannot follow, but be permissive).
                i = toks.len();
            }
            (TokenKind::Punctuator, ":") => return true, // ctor-initializer
            _ => return false,
        }
    }
    true
}

/// Declaration tail: definition specifiers plus `= 0`, `= default`,
/// `= delete`; no ctor-initializer.
fn valid_declaration_tail(toks: &[&Token], mut i: usize) -> bool {
    while i < toks.len() {
        let t = toks[i];
        match (t.kind, t.text.as_str()) {
            (TokenKind::Keyword, "const" | "volatile" | "override" | "final") => i += 1,
            (TokenKind::Keyword, "noexcept" | "throw") => {
                i += 1;
                if toks.get(i).is_some_and(|t| t.is_punct("(")) {
                    match matching_close(toks, i, "(", ")") {
                        Some(close) => i = close + 1,
                        None => return false,
                    }
                }
            }
            (TokenKind::Punctuator, "->") => {
                i += 1;
                // Trailing return type tokens.
                while i < toks.len() && !toks[i].is_punct("=") {
                    i += 1;
                }
            }
            (TokenKind::Punctuator, "=") => {
                i += 1;
                let ok = match toks.get(i) {
                    Some(t) if t.kind == TokenKind::NumberLiteral && t.text == "0" => true,
                    Some(t) if t.is_keyword("default") || t.is_keyword("delete") => true,
                    _ => false,
                };
                if !ok {
                    return false;
                }
                i += 1;
            }
            _ => return false,
        }
    }
    true
}

/// After an init-list `:` (or inside an aggregate initializer), a `{` can
/// belong to the statement rather than open a function body.
fn brace_continues_statement(sig: &[&Token], stmt: &[usize]) -> bool {
    let Some(&last) = stmt.last() else { return false };
    let last_tok = sig[last];
    if last_tok.kind == TokenKind::Punctuator
        && matches!(last_tok.text.as_str(), "=" | "," | "(" | "[")
    {
        return true;
    }
    // Brace-init inside a ctor-initializer: `: member{0}`.
    if last_tok.kind == TokenKind::Identifier || last_tok.is_punct(">") {
        let toks: Vec<&Token> = stmt.iter().map(|&i| sig[i]).collect();
        if let Some(shape) = match_callable(&toks) {
            let mut depth = 0i64;
            for t in &toks[shape.params_end + 1..] {
                if t.kind == TokenKind::Punctuator {
                    match t.text.as_str() {
                        "(" | "[" | "{" => depth += 1,
                        ")" | "]" | "}" => depth -= 1,
                        ":" if depth == 0 => return true,
                        _ => {}
                    }
                }
            }
        }
    }
    false
}

fn matching_close(toks: &[&Token], open: usize, open_sym: &str, close_sym: &str) -> Option<usize> {
    let mut depth = 0i64;
    for (i, t) in toks.iter().enumerate().skip(open) {
        if t.is_punct(open_sym) {
            depth += 1;
        } else if t.is_punct(close_sym) {
            depth -= 1;
            if depth == 0 {
                return Some(i);
            }
        }
    }
    None
}

/// Split statement tokens on a separator at depth 0 of all bracket kinds.
fn split_top_level<'a>(toks: &[&'a Token], sep: &str) -> Vec<Vec<&'a Token>> {
    let mut chunks = vec![Vec::new()];
    let mut depth = 0i64;
    for t in toks {
        if t.kind == TokenKind::Punctuator {
            match t.text.as_str() {
                "(" | "[" | "{" | "<" => depth += 1,
                ")" | "]" | "}" | ">" => depth -= 1,
                s if s == sep && depth <= 0 => {
                    chunks.push(Vec::new());
                    continue;
                }
                _ => {}
            }
        }
        chunks.last_mut().unwrap().push(*t);
    }
    chunks
}

/// Declarator name of one attribute chunk: the last depth-0 identifier
/// before any `=`, `[` or bitfield `:`.
fn declarator_name(chunk: &[&Token]) -> Option<String> {
    let mut depth = 0i64;
    let mut name: Option<String> = None;
    for t in chunk {
        if t.kind == TokenKind::Punctuator {
            match t.text.as_str() {
                "(" | "{" | "<" => depth += 1,
                ")" | "}" | ">" => depth -= 1,
                "=" | "[" | ":" if depth == 0 => break,
                _ => {}
            }
            continue;
        }
        if depth == 0 && t.kind == TokenKind::Identifier {
            name = Some(t.text.clone());
        }
    }
    name
}
