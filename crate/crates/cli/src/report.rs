//! Plain-text reports: a count line, then one indented line per item.

use std::collections::BTreeSet;
use std::fmt::Write;

use dihomo_core::{FiniteFlow, FlowMorphism, GermSet, GlobularComplex, PathId, SquareId, StateId};

fn count(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}\n", if n == 1 { one } else { many })
}

fn join(ids: &[PathId]) -> String {
    ids.iter().map(PathId::as_str).collect::<Vec<_>>().join(" ")
}

pub fn classes(classes: &[Vec<PathId>]) -> String {
    let mut out = count(classes.len(), "class", "classes");
    for c in classes {
        let _ = writeln!(out, "  {}", join(c));
    }
    out
}

pub fn germs(g: &GermSet) -> String {
    let mut out = count(g.len(), "germ", "germs");
    for c in &g.classes {
        let _ = writeln!(out, "  {}", join(c));
    }
    out
}

pub fn deadlocks(states: &BTreeSet<StateId>) -> String {
    let mut out = count(states.len(), "deadlock", "deadlocks");
    for s in states {
        let _ = writeln!(out, "  {s}");
    }
    out
}

pub fn s_equivalence(witness: Option<&(FlowMorphism, FlowMorphism)>) -> String {
    let Some((f, g)) = witness else {
        return "S-equivalent: no\n".into();
    };
    let mut out = String::from("S-equivalent: yes\n");
    for (name, m) in [("f", f), ("g", g)] {
        for (a, b) in &m.state_map {
            let _ = writeln!(out, "  {name} state {a} -> {b}");
        }
        for (a, b) in &m.path_map {
            let _ = writeln!(out, "  {name} path {a} -> {b}");
        }
    }
    out
}

pub fn complex_ok(c: &GlobularComplex, degenerate: &[SquareId]) -> String {
    let mut out = format!(
        "ok: {}, {}, {}",
        count(c.states().len(), "state", "states").trim_end(),
        count(c.edge_count(), "edge", "edges").trim_end(),
        count(c.square_count(), "square", "squares"),
    );
    for q in degenerate {
        let _ = writeln!(out, "  warning: square {q} is degenerate");
    }
    out
}

pub fn flow_ok(x: &FiniteFlow) -> String {
    format!(
        "ok: {}, {}, {}, {}",
        count(x.skeleton().len(), "state", "states").trim_end(),
        count(x.path_count(), "path", "paths").trim_end(),
        count(
            x.composable_pair_count(),
            "composable pair",
            "composable pairs"
        )
        .trim_end(),
        count(x.adjacency_count(), "adjacent pair", "adjacent pairs"),
    )
}
