//! The Chidamber–Kemerer object-orientation suite over the merged class
//! graph: CBO, DIT, LCOM, NOC, RFC, WMC.
//!
//! Conventions, since tools disagree: DIT of a class with no corpus-resolved
//! base is 0; LCOM is the original LCOM1 with a floor at zero; coupling is
//! undirected ("uses or is used by"); methods are identified by name, so
//! overloads collapse in RFC/LCOM sets while each body still adds to WMC.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::{Metric, MetricVector};
use crate::source::structure::ClassRecord;
use crate::source::ClassGraph;

/// The six CK metrics plus the member-function count for one class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassMetrics {
    pub name: String,
    pub cbo: u64,
    pub dit: u64,
    pub lcom: u64,
    pub noc: u64,
    pub rfc: u64,
    pub wmc: u64,
    pub methods: u64,
}

impl ClassMetrics {
    /// Class-level metric vector (OO columns plus Methods, never Files).
    pub fn to_vector(&self) -> MetricVector {
        let mut v = MetricVector::new();
        v.set(Metric::Cbo, self.cbo as f64)
            .set(Metric::Dit, self.dit as f64)
            .set(Metric::Lcom, self.lcom as f64)
            .set(Metric::Noc, self.noc as f64)
            .set(Metric::Rfc, self.rfc as f64)
            .set(Metric::Wmc, self.wmc as f64)
            .set(Metric::Methods, self.methods as f64);
        v
    }
}

/// Depth of inheritance: longest path along base edges to any class with
/// no corpus-resolved base. Rootless-in-corpus classes have depth 0.
pub fn dit(graph: &ClassGraph, class: &str) -> Result<u64> {
    if !graph.contains(class) {
        return Err(Error::UnknownClass(class.to_string()));
    }
    let mut memo: BTreeMap<&str, u64> = BTreeMap::new();
    Ok(longest_to_root(graph, class, &mut memo))
}

fn longest_to_root<'g>(graph: &'g ClassGraph, node: &'g str, memo: &mut BTreeMap<&'g str, u64>) -> u64 {
    if let Some(&d) = memo.get(node) {
        return d;
    }
    let depth = graph
        .bases_of(node)
        .map(|base| 1 + longest_to_root(graph, base, memo))
        .max()
        .unwrap_or(0);
    memo.insert(node, depth);
    depth
}

/// Number of children: distinct classes deriving directly from `class`.
pub fn noc(graph: &ClassGraph, class: &str) -> Result<u64> {
    if !graph.contains(class) {
        return Err(Error::UnknownClass(class.to_string()));
    }
    Ok(graph
        .inheritance_edges
        .iter()
        .filter(|(_, base)| base == class)
        .count() as u64)
}

/// Coupling between objects: the class's degree in the undirected coupling
/// relation.
pub fn cbo(graph: &ClassGraph, class: &str) -> Result<u64> {
    if !graph.contains(class) {
        return Err(Error::UnknownClass(class.to_string()));
    }
    Ok(graph
        .coupling_edges
        .iter()
        .filter(|(a, b)| a == class || b == class)
        .count() as u64)
}

/// Lack of cohesion in methods, LCOM1: over all unordered pairs of methods
/// with bodies, max(0, P - Q) where P pairs share no attribute and Q pairs
/// share at least one. Classes with fewer than two such methods score 0.
pub fn lcom(class: &ClassRecord) -> u64 {
    let uses: Vec<&std::collections::BTreeSet<String>> =
        class.attribute_uses_per_method.values().collect();
    if uses.len() < 2 {
        return 0;
    }
    let mut disjoint = 0u64;
    let mut sharing = 0u64;
    for i in 0..uses.len() {
        for j in i + 1..uses.len() {
            if uses[i].intersection(uses[j]).next().is_some() {
                sharing += 1;
            } else {
                disjoint += 1;
            }
        }
    }
    disjoint.saturating_sub(sharing)
}

/// Response for a class: |M ∪ R| where M is the declared method-name set
/// and R the distinct callee names invoked in bodies of M. One level, no
/// transitive closure.
pub fn rfc(class: &ClassRecord) -> u64 {
    let mut response = class.method_names.clone();
    for callees in class.callee_names_per_method.values() {
        response.extend(callees.iter().cloned());
    }
    response.len() as u64
}

/// Weighted methods per class: the sum of traditional MCC over method
/// bodies found in the corpus, or 1 per declared method with unit weights
/// (bodiless methods then contribute 1 instead of 0).
pub fn wmc(class: &ClassRecord, unit_weight: bool) -> u64 {
    if unit_weight {
        class.method_names.len() as u64
    } else {
        class.methods.iter().map(|m| m.mcc_traditional).sum()
    }
}

/// Compute the suite for every defined class, in name order. One shared
/// pass over the edge sets; agrees with the per-class operations.
pub fn class_metrics(graph: &ClassGraph, unit_weight: bool) -> Vec<ClassMetrics> {
    let mut children: BTreeMap<&str, u64> = BTreeMap::new();
    for (_, base) in &graph.inheritance_edges {
        *children.entry(base.as_str()).or_default() += 1;
    }
    let mut degree: BTreeMap<&str, u64> = BTreeMap::new();
    for (a, b) in &graph.coupling_edges {
        *degree.entry(a.as_str()).or_default() += 1;
        *degree.entry(b.as_str()).or_default() += 1;
    }
    let mut memo: BTreeMap<&str, u64> = BTreeMap::new();
    let mut out = Vec::new();
    for class in graph.defined_classes() {
        out.push(ClassMetrics {
            name: class.name.clone(),
            cbo: degree.get(class.name.as_str()).copied().unwrap_or(0),
            dit: longest_to_root(graph, &class.name, &mut memo),
            lcom: lcom(class),
            noc: children.get(class.name.as_str()).copied().unwrap_or(0),
            rfc: rfc(class),
            wmc: wmc(class, unit_weight),
            methods: class.method_names.len() as u64,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::source::graph::build_class_graph;
    use crate::source::lexer::tokenize;
    use crate::source::structure::extract_classes;

    fn graph_of(text: &str) -> ClassGraph {
        let classes = extract_classes(&tokenize(text).0);
        let files = [("t.hh", classes.as_slice())];
        build_class_graph(files).unwrap().0
    }

    #[test]
    fn isolated_class_depth_zero() {
        let g = graph_of("class A {};");
        assert_eq!(dit(&g, "A").unwrap(), 0);
    }

    #[test]
    fn chain_depth() {
        let g = graph_of("class A {}; class B : public A {}; class C : public B {};");
        assert_eq!(dit(&g, "C").unwrap(), 2);
        assert_eq!(dit(&g, "B").unwrap(), 1);
    }

    #[test]
    fn diamond_depth() {
        let g = graph_of(
            "class A {}; class B : public A {}; class C : public A {};\n\
             class D : public B, public C {};",
        );
        assert_eq!(dit(&g, "D").unwrap(), 2);
    }

    #[test]
    fn unknown_class_is_an_error() {
        let g = graph_of("class A {};");
        assert!(matches!(dit(&g, "Zed"), Err(Error::UnknownClass(_))));
        assert!(matches!(noc(&g, "Zed"), Err(Error::UnknownClass(_))));
        assert!(matches!(cbo(&g, "Zed"), Err(Error::UnknownClass(_))));
    }

    #[test]
    fn noc_counts_immediate_children_only() {
        let g = graph_of("class A {}; class B : public A {}; class C : public B {};");
        assert_eq!(noc(&g, "A").unwrap(), 1);
        assert_eq!(noc(&g, "B").unwrap(), 1);
        assert_eq!(noc(&g, "C").unwrap(), 0);
    }

    #[test]
    fn noc_two_children() {
        let g = graph_of("class A {}; class B : public A {}; class C : public A {};");
        assert_eq!(noc(&g, "A").unwrap(), 2);
    }

    #[test]
    fn cbo_inheritance_couples_both_ends() {
        let g = graph_of("class A {}; class B : public A {};");
        assert_eq!(cbo(&g, "A").unwrap(), 1);
        assert_eq!(cbo(&g, "B").unwrap(), 1);
    }

    #[test]
    fn cbo_member_type_and_invocation() {
        let g = graph_of("class A {}; class B {}; class C { A fa; void m() { B(); } };");
        assert_eq!(cbo(&g, "C").unwrap(), 2);
    }

    #[test]
    fn lcom_single_method_is_zero() {
        let g = graph_of("class A { int x; void m() { x = 1; } };");
        assert_eq!(lcom(&g.classes["A"]), 0);
    }

    #[test]
    fn lcom_shared_attribute_floors_at_zero() {
        let g = graph_of("class A { int a; void m1() { a = 1; } void m2() { a = 2; } };");
        // P = 0, Q = 1 => max(0, -1) = 0
        assert_eq!(lcom(&g.classes["A"]), 0);
    }

    #[test]
    fn lcom_mixed_sharing() {
        let text = "class A { int a; int b;\n\
                    void m1() { a = 1; }\n\
                    void m2() { a = 2; }\n\
                    void m3() { b = 3; } };";
        // pairs: (m1,m2) share a; (m1,m3), (m2,m3) share nothing
        // P = 2, Q = 1 => LCOM = 1
        let g = graph_of(text);
        assert_eq!(lcom(&g.classes["A"]), 1);
    }

    #[test]
    fn rfc_without_calls_is_method_count() {
        let g = graph_of("class A { void m1(); void m2(); };");
        assert_eq!(rfc(&g.classes["A"]), 2);
    }

    #[test]
    fn rfc_unions_distinct_callees() {
        let text = "class A { void m1() { foo(); bar(); } void m2() { foo(); } };";
        let g = graph_of(text);
        // {m1, m2} ∪ {foo, bar} = 4
        assert_eq!(rfc(&g.classes["A"]), 4);
    }

    #[test]
    fn rfc_own_method_calls_absorb() {
        let text = "class A { void m1() { m2(); } void m2() {} };";
        let g = graph_of(text);
        assert_eq!(rfc(&g.classes["A"]), 2);
    }

    #[test]
    fn wmc_sums_method_complexity() {
        let text = "class A {\n\
                    void m1() {}\n\
                    void m2() { if (a) { if (b) x(); } }\n\
                    void m3() { if (a && b || c) x(); } };";
        let g = graph_of(text);
        // MCC: 1, 3, 4
        assert_eq!(wmc(&g.classes["A"], false), 8);
    }

    #[test]
    fn wmc_unit_mode_counts_declared_methods() {
        let text = "class A { void with_body() { if (x) y(); } void bodiless(); };";
        let g = graph_of(text);
        let a = &g.classes["A"];
        assert_eq!(wmc(a, false), 2); // bodiless contributes 0
        assert_eq!(wmc(a, true), 2); // both declared methods contribute 1
    }

    #[test]
    fn rfc_at_least_methods_invariant() {
        let text = "class A { void m1() { q(); } void m2(); void m3() { m1(); } };";
        let g = graph_of(text);
        let a = &g.classes["A"];
        assert!(rfc(a) >= a.method_names.len() as u64);
    }

    #[test]
    fn noc_sum_equals_edge_count() {
        let g = graph_of(
            "class A {}; class B : public A {}; class C : public A {}; class D : public C {};",
        );
        let total: u64 = g
            .classes
            .keys()
            .map(|name| noc(&g, name).unwrap())
            .sum();
        assert_eq!(total, g.inheritance_edges.len() as u64);
    }

    #[test]
    fn class_metrics_agrees_with_per_class_ops() {
        let text = "class A { int a; void m1() { a = 1; f(); } void m2(); };\n\
                    class B : public A { A fa; void n() { A(); } };\n\
                    class C : public B {};";
        let g = graph_of(text);
        for cm in class_metrics(&g, false) {
            let rec = &g.classes[&cm.name];
            assert_eq!(cm.cbo, cbo(&g, &cm.name).unwrap(), "cbo {}", cm.name);
            assert_eq!(cm.dit, dit(&g, &cm.name).unwrap(), "dit {}", cm.name);
            assert_eq!(cm.noc, noc(&g, &cm.name).unwrap(), "noc {}", cm.name);
            assert_eq!(cm.lcom, lcom(rec));
            assert_eq!(cm.rfc, rfc(rec));
            assert_eq!(cm.wmc, wmc(rec, false));
        }
    }
}
