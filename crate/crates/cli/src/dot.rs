//! Graphviz export.
//!
//! States become nodes (finals drawn as double circles), edges or paths
//! become arrows, and squares or adjacent path pairs become dashed,
//! undirected links between the shared endpoints.

use std::fmt::Write;

use dihomo_core::{FiniteFlow, GlobularComplex};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

pub fn complex_to_dot(c: &GlobularComplex) -> String {
    let mut out = String::from("digraph complex {\n  rankdir=LR;\n");
    for s in c.states() {
        if c.finals().contains(s) {
            let _ = writeln!(out, "  {} [shape=doublecircle];", quote(s.as_str()));
        } else {
            let _ = writeln!(out, "  {};", quote(s.as_str()));
        }
    }
    for e in c.edges() {
        let label = match &e.label {
            Some(l) => format!("{} {l}", e.id),
            None => e.id.to_string(),
        };
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(e.source.as_str()),
            quote(e.target.as_str()),
            quote(&label)
        );
    }
    for q in c.squares() {
        if let Ok((s, t)) = c.path_endpoints(&q.left) {
            let label = format!("{}: {} ~ {}", q.id, q.left.path_id(), q.right.path_id());
            let _ = writeln!(
                out,
                "  {} -> {} [style=dashed, dir=none, label={}];",
                quote(s.as_str()),
                quote(t.as_str()),
                quote(&label)
            );
        }
    }
    out.push_str("}\n");
    out
}

pub fn flow_to_dot(x: &FiniteFlow) -> String {
    let mut out = String::from("digraph flow {\n  rankdir=LR;\n");
    for s in x.skeleton() {
        let _ = writeln!(out, "  {};", quote(s.as_str()));
    }
    for (p, s, t) in x.paths() {
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(s.as_str()),
            quote(t.as_str()),
            quote(p.as_str())
        );
    }
    for (a, b) in x.adjacency() {
        if let Some((s, t)) = x.endpoints(a) {
            let _ = writeln!(
                out,
                "  {} -> {} [style=dashed, dir=none, label={}];",
                quote(s.as_str()),
                quote(t.as_str()),
                quote(&format!("{a} ~ {b}"))
            );
        }
    }
    out.push_str("}\n");
    out
}
