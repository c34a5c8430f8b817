//! Corpus-wide class graph: merge per-file class records, resolve
//! inheritance and coupling edges, and verify the hierarchy is acyclic.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::diag::Diagnostic;
use crate::error::{Error, Result};
use crate::source::structure::ClassRecord;

/// Merged view of every class in the corpus.
///
/// Inheritance edges are `(derived, base)` pairs over corpus-resolved
/// names; coupling edges are unordered pairs stored with the lesser name
/// first. Classes without a seen body (`has_definition == false`) carry
/// out-of-line methods whose defining class was never found.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ClassGraph {
    pub classes: BTreeMap<String, ClassRecord>,
    pub inheritance_edges: BTreeSet<(String, String)>,
    pub coupling_edges: BTreeSet<(String, String)>,
}

impl ClassGraph {
    /// Immediate base classes of `name` (corpus-resolved).
    pub fn bases_of<'g>(&'g self, name: &str) -> impl Iterator<Item = &'g str> {
        let key = name.to_string();
        self.inheritance_edges
            .range((key.clone(), String::new())..)
            .take_while(move |(d, _)| *d == key)
            .map(|(_, b)| b.as_str())
    }

    pub fn contains(&self, name: &str) -> bool {
        self.classes.contains_key(name)
    }

    /// Classes with a body in the corpus, in name order.
    pub fn defined_classes(&self) -> impl Iterator<Item = &ClassRecord> {
        self.classes.values().filter(|c| c.has_definition)
    }
}

/// Merge per-file class records into one graph.
///
/// Files are processed in sorted path order, so the result is identical for
/// any input permutation. Duplicate class bodies keep the first definition
/// in that canonical order and log the rest; bases that never resolve to a
/// corpus class are dropped with a diagnostic. An inheritance cycle is an
/// input error.
pub fn build_class_graph<'a, I>(files: I) -> Result<(ClassGraph, Vec<Diagnostic>)>
where
    I: IntoIterator<Item = (&'a str, &'a [ClassRecord])>,
{
    let mut sorted: Vec<(&str, &[ClassRecord])> = files.into_iter().collect();
    sorted.sort_by_key(|(path, _)| *path);

    let mut diagnostics = Vec::new();
    let mut classes: BTreeMap<String, ClassRecord> = BTreeMap::new();

    for (path, records) in sorted {
        for record in records {
            match classes.get_mut(&record.name) {
                None => {
                    classes.insert(record.name.clone(), record.clone());
                }
                Some(existing) => {
                    if record.has_definition && existing.has_definition {
                        diagnostics.push(
                            Diagnostic::warning(format!(
                                "duplicate definition of class `{}`; keeping the first",
                                record.name
                            ))
                            .with_path(path),
                        );
                        continue;
                    }
                    if record.has_definition {
                        // The earlier record was a method carrier; adopt the
                        // definition and keep the carried methods.
                        existing.has_definition = true;
                        existing.base_names = record.base_names.clone();
                        existing
                            .attribute_names
                            .extend(record.attribute_names.iter().cloned());
                    }
                    existing
                        .method_names
                        .extend(record.method_names.iter().cloned());
                    existing
                        .referenced_type_names
                        .extend(record.referenced_type_names.iter().cloned());
                    existing.methods.extend(record.methods.iter().cloned());
                }
            }
        }
    }

    // Per-method maps are derived from the complete merged state so the
    // result does not depend on which file contributed a body first.
    for class in classes.values_mut() {
        let mut uses: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        let mut callees: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for method in &class.methods {
            class.method_names.insert(method.name.clone());
            class
                .referenced_type_names
                .extend(method.signature_idents.iter().cloned());
            uses.entry(method.name.clone()).or_default().extend(
                method
                    .body_idents
                    .intersection(&class.attribute_names)
                    .cloned(),
            );
            callees
                .entry(method.name.clone())
                .or_default()
                .extend(method.callees.iter().cloned());
        }
        class.attribute_uses_per_method = uses;
        class.callee_names_per_method = callees;
    }

    let mut graph = ClassGraph {
        classes,
        inheritance_edges: BTreeSet::new(),
        coupling_edges: BTreeSet::new(),
    };

    // Inheritance edges over corpus-resolved base names.
    let defined: Vec<(String, Vec<String>)> = graph
        .classes
        .values()
        .filter(|c| c.has_definition)
        .map(|c| (c.name.clone(), c.base_names.clone()))
        .collect();
    for (derived, bases) in defined {
        for base in bases {
            match resolve_name(&graph.classes, &derived, &base) {
                Some(resolved) if resolved != derived => {
                    graph
                        .inheritance_edges
                        .insert((derived.clone(), resolved));
                }
                Some(_) => {}
                None => diagnostics.push(Diagnostic::warning(format!(
                    "base `{base}` of class `{derived}` not found in corpus; edge dropped"
                ))),
            }
        }
    }

    if let Some(cycle) = find_cycle(&graph) {
        return Err(Error::InheritanceCycle(cycle));
    }

    build_coupling_edges(&mut graph);
    Ok((graph, diagnostics))
}

/// Resolve a written name against the corpus: innermost enclosing scope of
/// `from` outward, then an unambiguous trailing-component match.
fn resolve_name(
    classes: &BTreeMap<String, ClassRecord>,
    from: &str,
    written: &str,
) -> Option<String> {
    let mut scope: Vec<&str> = from.split("::").collect();
    scope.pop(); // the class's own name
    while !scope.is_empty() {
        let candidate = format!("{}::{}", scope.join("::"), written);
        if classes.contains_key(&candidate) {
            return Some(candidate);
        }
        scope.pop();
    }
    if classes.contains_key(written) {
        return Some(written.to_string());
    }
    // `ns::Base` written but only `Base` defined, or vice versa: accept a
    // unique match on the last path component.
    let last = written.rsplit("::").next().unwrap_or(written);
    let mut matches = classes
        .keys()
        .filter(|k| k.rsplit("::").next() == Some(last));
    match (matches.next(), matches.next()) {
        (Some(only), None) => Some(only.clone()),
        _ => None,
    }
}

/// Depth-first cycle search over inheritance edges; returns the member
/// names of one cycle when present.
fn find_cycle(graph: &ClassGraph) -> Option<Vec<String>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Unseen,
        Active,
        Done,
    }
    let names: Vec<&String> = graph.classes.keys().collect();
    let mut marks: BTreeMap<&str, Mark> =
        names.iter().map(|n| (n.as_str(), Mark::Unseen)).collect();

    fn visit<'g>(
        graph: &'g ClassGraph,
        node: &'g str,
        marks: &mut BTreeMap<&'g str, Mark>,
        stack: &mut Vec<&'g str>,
    ) -> Option<Vec<String>> {
        marks.insert(node, Mark::Active);
        stack.push(node);
        for base in graph.bases_of(node) {
            match marks.get(base).copied().unwrap_or(Mark::Unseen) {
                Mark::Active => {
                    let pos = stack.iter().position(|n| *n == base).unwrap_or(0);
                    let mut cycle: Vec<String> =
                        stack[pos..].iter().map(|s| s.to_string()).collect();
                    cycle.push(base.to_string());
                    return Some(cycle);
                }
                Mark::Unseen => {
                    if let Some(cycle) = visit(graph, base, marks, stack) {
                        return Some(cycle);
                    }
                }
                Mark::Done => {}
            }
        }
        stack.pop();
        marks.insert(node, Mark::Done);
        None
    }

    let mut stack = Vec::new();
    for name in names {
        if marks[name.as_str()] == Mark::Unseen {
            if let Some(cycle) = visit(graph, name, &mut marks, &mut stack) {
                return Some(cycle);
            }
        }
    }
    None
}

/// Undirected coupling edges: two classes couple when one names the other
/// as a base, in an attribute type or method signature, or invokes it by
/// name in a method body.
fn build_coupling_edges(graph: &mut ClassGraph) {
    let mut edges: BTreeSet<(String, String)> = BTreeSet::new();
    let mut add = |a: &str, b: &str| {
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            edges.insert((lo.to_string(), hi.to_string()));
        }
    };
    for (derived, base) in &graph.inheritance_edges {
        add(derived, base);
    }
    for class in graph.classes.values().filter(|c| c.has_definition) {
        for name in &class.referenced_type_names {
            if let Some(other) = resolve_name(&graph.classes, &class.name, name) {
                add(&class.name, &other);
            }
        }
        for callees in class.callee_names_per_method.values() {
            for callee in callees {
                if let Some(other) = resolve_name(&graph.classes, &class.name, callee) {
                    add(&class.name, &other);
                }
            }
        }
    }
    graph.coupling_edges = edges;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::lexer::tokenize;
    use crate::source::structure::extract_classes;

    fn classes_of(text: &str) -> Vec<ClassRecord> {
        extract_classes(&tokenize(text).0)
    }

    fn graph_from(files: &[(&str, &str)]) -> (ClassGraph, Vec<Diagnostic>) {
        let parsed: Vec<(String, Vec<ClassRecord>)> = files
            .iter()
            .map(|(path, text)| (path.to_string(), classes_of(text)))
            .collect();
        build_class_graph(
            parsed
                .iter()
                .map(|(p, c)| (p.as_str(), c.as_slice())),
        )
        .unwrap()
    }

    #[test]
    fn unrelated_classes_have_no_edges() {
        let (graph, _) = graph_from(&[("a.hh", "class A {}; class B {};")]);
        assert!(graph.inheritance_edges.is_empty());
        assert!(graph.coupling_edges.is_empty());
    }

    #[test]
    fn chain_across_files() {
        let (graph, _) = graph_from(&[
            ("a.hh", "class A {};"),
            ("b.hh", "class B : public A {};"),
            ("c.hh", "class C : public B {};"),
        ]);
        assert_eq!(
            graph.inheritance_edges,
            BTreeSet::from([
                ("B".to_string(), "A".to_string()),
                ("C".to_string(), "B".to_string()),
            ])
        );
    }

    #[test]
    fn external_base_dropped_with_diagnostic() {
        let (graph, diags) = graph_from(&[("b.hh", "class B : public External {};")]);
        assert!(graph.inheritance_edges.is_empty());
        assert_eq!(diags.len(), 1);
        assert!(diags[0].message.contains("External"));
    }

    #[test]
    fn merge_is_order_insensitive() {
        let files = [
            ("a.hh", "class A { int x; void m(); };"),
            ("a.cc", "void A::m() { x = 1; }"),
            ("b.hh", "class B : public A {};"),
        ];
        let (forward, _) = graph_from(&files);
        let mut reversed = files;
        reversed.reverse();
        let (backward, _) = graph_from(&reversed);
        assert_eq!(forward.classes, backward.classes);
        assert_eq!(forward.inheritance_edges, backward.inheritance_edges);
        assert_eq!(forward.coupling_edges, backward.coupling_edges);
    }

    #[test]
    fn duplicate_definition_keeps_first_in_path_order() {
        let (graph, diags) = graph_from(&[
            ("z_later.hh", "class A { int z; };"),
            ("a_first.hh", "class A { int x; };"),
        ]);
        let a = &graph.classes["A"];
        assert!(a.attribute_names.contains("x"));
        assert!(!a.attribute_names.contains("z"));
        assert_eq!(diags.len(), 1);
    }

    #[test]
    fn inheritance_cycle_is_an_error() {
        let parsed = [
            ("a.hh".to_string(), classes_of("class A : public B {};")),
            ("b.hh".to_string(), classes_of("class B : public A {};")),
        ];
        let err = build_class_graph(parsed.iter().map(|(p, c)| (p.as_str(), c.as_slice())))
            .unwrap_err();
        match err {
            Error::InheritanceCycle(members) => {
                assert!(members.len() >= 3);
                assert_eq!(members.first(), members.last());
            }
            other => panic!("expected cycle error, got {other}"),
        }
    }

    #[test]
    fn coupling_includes_inheritance_both_ways() {
        let (graph, _) = graph_from(&[("x.hh", "class A {}; class B : public A {};")]);
        assert_eq!(
            graph.coupling_edges,
            BTreeSet::from([("A".to_string(), "B".to_string())])
        );
    }

    #[test]
    fn coupling_via_attribute_type_and_callee() {
        let text = "class A {};\nclass B {};\nclass C { A fa; void m() { B(); } };";
        let (graph, _) = graph_from(&[("x.hh", text)]);
        assert!(graph
            .coupling_edges
            .contains(&("A".to_string(), "C".to_string())));
        assert!(graph
            .coupling_edges
            .contains(&("B".to_string(), "C".to_string())));
    }

    #[test]
    fn out_of_line_methods_join_their_class() {
        let files = [
            ("a.hh", "class A { int fX; void m(); void n(); };"),
            ("a.cc", "void A::m() { fX = 1; helper(); }"),
        ];
        let parsed: Vec<(String, Vec<ClassRecord>)> = files
            .iter()
            .map(|(p, t)| {
                let scan = crate::source::structure::scan_structure(&tokenize(t).0);
                let mut records = scan.classes;
                // Carriers as the file analyzer builds them.
                for f in scan.functions {
                    if let Some(owner) = f.owner_class.clone() {
                        if !records.iter().any(|c: &ClassRecord| c.name == owner) {
                            let mut carrier = ClassRecord::new_carrier(owner.clone());
                            carrier.methods.push(f);
                            records.push(carrier);
                        }
                    }
                }
                (p.to_string(), records)
            })
            .collect();
        let (graph, _) = build_class_graph(
            parsed
                .iter()
                .map(|(p, c)| (p.as_str(), c.as_slice())),
        )
        .unwrap();
        let a = &graph.classes["A"];
        assert!(a.has_definition);
        assert_eq!(a.methods.len(), 1);
        assert_eq!(
            a.attribute_uses_per_method["m"],
            BTreeSet::from(["fX".to_string()])
        );
        assert!(a.callee_names_per_method["m"].contains("helper"));
        assert!(a.method_names.contains("n"));
    }

    #[test]
    fn namespace_relative_base_resolution() {
        let text = "namespace ns { class Base {}; class Derived : public Base {}; }";
        let (graph, diags) = graph_from(&[("n.hh", text)]);
        assert!(diags.is_empty());
        assert!(graph
            .inheritance_edges
            .contains(&("ns::Derived".to_string(), "ns::Base".to_string())));
    }
}
