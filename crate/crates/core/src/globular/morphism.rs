use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;

use super::{square_moves, validate_complex, Edge, ExecPath, GlobularComplex};
use crate::ids::{EdgeId, StateId};
use crate::{Error, Result};

/// A map of complexes: states to states and every edge to a path of the
/// codomain.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComplexMorphism {
    pub state_map: BTreeMap<StateId, StateId>,
    pub edge_map: BTreeMap<EdgeId, ExecPath>,
}

impl ComplexMorphism {
    pub fn identity(c: &GlobularComplex) -> Self {
        ComplexMorphism {
            state_map: c.states().iter().map(|s| (s.clone(), s.clone())).collect(),
            edge_map: c
                .edges()
                .map(|e| (e.id.clone(), ExecPath::single(e.id.clone())))
                .collect(),
        }
    }

    /// Image of a path, edge by edge. `None` if some edge is unmapped.
    pub fn map_path(&self, path: &ExecPath) -> Option<ExecPath> {
        let mut out = ExecPath::default();
        for e in path.edges() {
            out = out.concat(self.edge_map.get(e)?);
        }
        Some(out)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ComplexMorphism) -> Option<ComplexMorphism> {
        let state_map = self
            .state_map
            .iter()
            .map(|(k, v)| Some((k.clone(), next.state_map.get(v)?.clone())))
            .collect::<Option<_>>()?;
        let edge_map = self
            .edge_map
            .iter()
            .map(|(k, v)| Some((k.clone(), next.map_path(v)?)))
            .collect::<Option<_>>()?;
        Some(ComplexMorphism {
            state_map,
            edge_map,
        })
    }

    /// Checks totality, endpoint compatibility, non-contraction and square
    /// preservation. Both complexes must be valid.
    pub fn check(&self, dom: &GlobularComplex, cod: &GlobularComplex) -> Result<()> {
        validate_complex(dom).into_result()?;
        validate_complex(cod).into_result()?;
        let bad = |msg: String| Err(Error::InvalidMorphism(msg));

        for s in dom.states() {
            match self.state_map.get(s) {
                None => return bad(format!("state `{s}` is not mapped")),
                Some(t) if !cod.has_state(t) => {
                    return bad(format!("state `{s}` maps outside the codomain (`{t}`)"))
                }
                Some(_) => {}
            }
        }
        for e in dom.edges() {
            let Some(image) = self.edge_map.get(&e.id) else {
                return bad(format!("edge `{}` is not mapped", e.id));
            };
            if image.is_empty() {
                return bad(format!("edge `{}` is contracted", e.id));
            }
            let (src, tgt) = match cod.path_endpoints(image) {
                Ok(ends) => ends,
                Err(defect) => {
                    return bad(format!(
                        "image of edge `{}` is not a path ({defect:?})",
                        e.id
                    ))
                }
            };
            if Some(src) != self.state_map.get(&e.source)
                || Some(tgt) != self.state_map.get(&e.target)
            {
                return bad(format!("image of edge `{}` has the wrong endpoints", e.id));
            }
        }
        for q in dom.squares() {
            let left = self.map_path(&q.left).expect("edges checked above");
            let right = self.map_path(&q.right).expect("edges checked above");
            if !same_move_class(cod, &left, &right) {
                return bad(format!(
                    "sides of square `{}` land in different classes",
                    q.id
                ));
            }
        }
        Ok(())
    }
}

fn same_move_class(c: &GlobularComplex, a: &ExecPath, b: &ExecPath) -> bool {
    let mut seen = BTreeSet::from([a.clone()]);
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(p) = queue.pop_front() {
        if &p == b {
            return true;
        }
        for q in square_moves(c, &p) {
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    false
}

/// True iff `f` is a morphism of complexes `dom -> cod`.
pub fn is_complex_morphism(
    f: &ComplexMorphism,
    dom: &GlobularComplex,
    cod: &GlobularComplex,
) -> bool {
    f.check(dom, cod).is_ok()
}

fn fresh<T: Ord + From<String>>(taken: impl Fn(&T) -> bool, base: String) -> T {
    let mut name = base.clone();
    let mut n = 0;
    loop {
        let candidate = T::from(name.clone());
        if !taken(&candidate) {
            return candidate;
        }
        n += 1;
        name = format!("{base}'{n}");
    }
}

/// Splits `edge` into two consecutive edges through a fresh middle state.
///
/// Returns the new complex and the canonical morphism from the old one,
/// which sends `edge` to the two-edge chain and is the identity elsewhere.
/// Square sides through `edge` are rewritten.
pub fn subdivide_edge(
    c: &GlobularComplex,
    edge: &EdgeId,
) -> Result<(GlobularComplex, ComplexMorphism)> {
    let old = c
        .edge(edge)
        .ok_or_else(|| Error::UnknownEdge(edge.clone()))?
        .clone();
    let mid: StateId = fresh(|s| c.has_state(s), format!("{edge}.mid"));
    let first: EdgeId = fresh(|e| c.edge(e).is_some(), format!("{edge}.1"));
    let second: EdgeId = fresh(|e| c.edge(e).is_some() || *e == first, format!("{edge}.2"));
    let chain = ExecPath::new(alloc::vec![first.clone(), second.clone()]);

    let mut out = GlobularComplex::new();
    for s in c.states() {
        out.add_state(s.clone());
    }
    out.add_state(mid.clone());
    for f in c.finals() {
        out.add_final(f.clone());
    }
    for e in c.edges() {
        if &e.id == edge {
            continue;
        }
        out.insert_edge(e.clone())?;
    }
    out.insert_edge(Edge {
        id: first,
        source: old.source.clone(),
        target: mid.clone(),
        label: old.label.clone(),
    })?;
    out.insert_edge(Edge {
        id: second,
        source: mid,
        target: old.target.clone(),
        label: old.label.clone(),
    })?;

    let mut m = ComplexMorphism::identity(c);
    m.edge_map.insert(edge.clone(), chain);
    for q in c.squares() {
        let left = m.map_path(&q.left).unwrap_or_else(|| q.left.clone());
        let right = m.map_path(&q.right).unwrap_or_else(|| q.right.clone());
        out.add_square(q.id.clone(), left, right)?;
    }
    Ok((out, m))
}
