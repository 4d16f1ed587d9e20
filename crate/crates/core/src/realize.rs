//! The categorical realization of a complex as a flow.
//!
//! Paths of the flow are the execution paths of the complex, identified by
//! their edge sequence; composition is concatenation; adjacency is the
//! single square-move relation. Composition is therefore associative by
//! construction.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::flow::{FiniteFlow, FlowMorphism};
use crate::globular::{
    all_paths, moves_by, square_moves, validate_complex, ComplexMorphism, Edge, ExecPath,
    GlobularComplex, Square,
};
use crate::ids::{PathId, StateId, PATH_SEPARATOR};
use crate::{Error, Result};

/// Realizes a valid complex as a finite flow.
pub fn realize(c: &GlobularComplex) -> Result<FiniteFlow> {
    validate_complex(c).into_result()?;
    let paths = all_paths(c)?;
    let mut flow = FiniteFlow::new();
    for s in c.states() {
        flow.add_state(s.clone());
    }
    let mut by_source: BTreeMap<&StateId, Vec<&ExecPath>> = BTreeMap::new();
    let mut ends = Vec::with_capacity(paths.len());
    for p in &paths {
        let (s, t) = c.path_endpoints(p).expect("enumerated paths are valid");
        flow.add_path(p.path_id(), s.clone(), t.clone())?;
        by_source.entry(s).or_default().push(p);
        ends.push(t);
    }
    for (p, t) in paths.iter().zip(ends) {
        for q in by_source.get(t).into_iter().flatten() {
            flow.set_composite(p.path_id(), q.path_id(), p.concat(q).path_id());
        }
        for q in square_moves(c, p) {
            flow.add_adjacency(p.path_id(), q.path_id());
        }
    }
    Ok(flow)
}

/// Realizes a morphism of complexes: states as given, paths by substituting
/// each edge with its image path.
pub fn realize_morphism(
    m: &ComplexMorphism,
    dom: &GlobularComplex,
    cod: &GlobularComplex,
) -> Result<FlowMorphism> {
    m.check(dom, cod)?;
    let path_map = all_paths(dom)?
        .into_iter()
        .map(|p| {
            let image = m.map_path(&p).expect("morphism is total");
            (p.path_id(), image.path_id())
        })
        .collect();
    Ok(FlowMorphism {
        state_map: dom
            .states()
            .iter()
            .map(|s| (s.clone(), m.state_map[s].clone()))
            .collect(),
        path_map,
    })
}

/// A cell attached by [`incremental_realize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    State(StateId),
    Edge(Edge),
    Square(Square),
}

/// Attaches `cell` to `c` and extends `prev = realize(c)` to the realization
/// of the result, touching only the paths through the new cell.
pub fn incremental_realize(
    c: &GlobularComplex,
    prev: &FiniteFlow,
    cell: Cell,
) -> Result<(GlobularComplex, FiniteFlow)> {
    let mut next = c.clone();
    let mut flow = prev.clone();
    match cell {
        Cell::State(s) => {
            if !next.add_state(s.clone()) {
                return Err(Error::DuplicateState(s));
            }
            flow.add_state(s);
        }
        Cell::Edge(e) => {
            check_edge(c, prev, &e)?;
            next.insert_edge(e.clone())?;
            attach_edge(&next, &mut flow, &e)?;
        }
        Cell::Square(q) => {
            let ends = [&q.left, &q.right].map(|side| c.path_endpoints(side));
            match ends {
                [Ok(l), Ok(r)] if l == r => {}
                _ => {
                    return Err(Error::InvalidAttachment(format!(
                        "square `{}` is not glued along two parallel paths",
                        q.id
                    )))
                }
            }
            let mut moves = BTreeSet::new();
            let old: Vec<PathId> = prev.paths().map(|(p, _, _)| p.clone()).collect();
            for p in &old {
                moves.clear();
                moves_by(&q, &ExecPath::from_path_id(p), &mut moves);
                for m in &moves {
                    flow.add_adjacency(p.clone(), m.path_id());
                }
            }
            next.add_square(q.id.clone(), q.left, q.right)?;
        }
    }
    Ok((next, flow))
}

fn check_edge(c: &GlobularComplex, prev: &FiniteFlow, e: &Edge) -> Result<()> {
    let bad = |msg| Err(Error::InvalidAttachment(msg));
    if e.id.as_str().is_empty() || e.id.as_str().contains(PATH_SEPARATOR) {
        return bad(format!("edge id `{}` is reserved", e.id));
    }
    for s in [&e.source, &e.target] {
        if !c.has_state(s) {
            return bad(format!("edge `{}` refers to unknown state `{s}`", e.id));
        }
    }
    let closes_cycle = e.source == e.target
        || prev
            .paths()
            .any(|(_, s, t)| s == &e.target && t == &e.source);
    if closes_cycle {
        return bad(format!("edge `{}` closes a cycle", e.id));
    }
    Ok(())
}

fn attach_edge(c: &GlobularComplex, flow: &mut FiniteFlow, e: &Edge) -> Result<()> {
    let before: Vec<(ExecPath, StateId, StateId)> = flow
        .paths()
        .map(|(p, s, t)| (ExecPath::from_path_id(p), s.clone(), t.clone()))
        .collect();

    // Every new path is (left) e (right) with optional old extensions on
    // either side; left ones carry their source, right ones their target.
    let empty = ExecPath::default();
    let lefts: Vec<(&ExecPath, &StateId)> = core::iter::once((&empty, &e.source))
        .chain(
            before
                .iter()
                .filter(|(_, _, t)| t == &e.source)
                .map(|(p, s, _)| (p, s)),
        )
        .collect();
    let rights: Vec<(&ExecPath, &StateId)> = core::iter::once((&empty, &e.target))
        .chain(
            before
                .iter()
                .filter(|(_, s, _)| s == &e.target)
                .map(|(p, _, t)| (p, t)),
        )
        .collect();
    let middle = ExecPath::single(e.id.clone());
    let mut fresh = Vec::new();
    for (l, s) in &lefts {
        for (r, t) in &rights {
            let p = l.concat(&middle).concat(r);
            flow.add_path(p.path_id(), (*s).clone(), (*t).clone())?;
            fresh.push((p, (*s).clone(), (*t).clone()));
        }
    }

    let mut all = before.clone();
    all.extend(fresh.iter().cloned());
    for (n, s, t) in &fresh {
        for (q, qs, qt) in &all {
            if qs == t {
                flow.set_composite(n.path_id(), q.path_id(), n.concat(q).path_id());
            }
            if qt == s {
                flow.set_composite(q.path_id(), n.path_id(), q.concat(n).path_id());
            }
        }
        for m in square_moves(c, n) {
            flow.add_adjacency(n.path_id(), m.path_id());
        }
    }
    Ok(())
}
