use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::{Edge, ExecPath, GlobularComplex, Square};
use crate::ids::{EdgeId, StateId};
use crate::partition::UnionFind;
use crate::{Error, Result};

/// All execution paths from `from` to `to`, sorted.
///
/// Only states that can still reach `to` are explored, and a cycle met on
/// the way is reported as [`Error::Cyclic`], so the search always stops.
pub fn enumerate_paths(c: &GlobularComplex, from: &StateId, to: &StateId) -> Result<Vec<ExecPath>> {
    for s in [from, to] {
        if !c.has_state(s) {
            return Err(Error::UnknownState(s.clone()));
        }
    }
    let coreach = coreachable(c, to);
    let succ = c.successors();
    let mut out = Vec::new();
    let mut walk = Walk {
        succ: &succ,
        stack: Vec::new(),
        on_stack: BTreeSet::new(),
    };
    walk.run(from, &mut |s, edges| {
        if s == to && !edges.is_empty() {
            out.push(edges.iter().cloned().collect());
        }
        coreach.contains(s)
    })?;
    out.sort();
    Ok(out)
}

/// Every execution path of the complex, sorted.
pub fn all_paths(c: &GlobularComplex) -> Result<Vec<ExecPath>> {
    let succ = c.successors();
    let mut out = Vec::new();
    for s in c.states() {
        let mut walk = Walk {
            succ: &succ,
            stack: Vec::new(),
            on_stack: BTreeSet::new(),
        };
        walk.run(s, &mut |_, edges| {
            if !edges.is_empty() {
                out.push(edges.iter().cloned().collect());
            }
            true
        })?;
    }
    out.sort();
    Ok(out)
}

fn coreachable<'a>(c: &'a GlobularComplex, to: &'a StateId) -> BTreeSet<&'a StateId> {
    let mut pred: BTreeMap<&StateId, Vec<&StateId>> = BTreeMap::new();
    for e in c.edges() {
        pred.entry(&e.target).or_default().push(&e.source);
    }
    let mut seen = BTreeSet::from([to]);
    let mut queue = VecDeque::from([to]);
    while let Some(s) = queue.pop_front() {
        for p in pred.get(s).into_iter().flatten() {
            if seen.insert(*p) {
                queue.push_back(p);
            }
        }
    }
    seen
}

struct Walk<'a, 'c> {
    succ: &'a BTreeMap<&'c StateId, Vec<&'c Edge>>,
    stack: Vec<EdgeId>,
    on_stack: BTreeSet<&'c StateId>,
}

impl<'a, 'c> Walk<'a, 'c> {
    /// Depth-first walk; `visit` sees each state with the edges leading to it
    /// and returns whether to continue below it.
    fn run(
        &mut self,
        at: &'c StateId,
        visit: &mut dyn FnMut(&StateId, &[EdgeId]) -> bool,
    ) -> Result<()> {
        if !visit(at, &self.stack) {
            return Ok(());
        }
        if !self.on_stack.insert(at) {
            return Err(Error::Cyclic(at.clone()));
        }
        if let Some(out) = self.succ.get(at) {
            for e in out {
                self.stack.push(e.id.clone());
                self.run(&e.target, visit)?;
                self.stack.pop();
            }
        }
        self.on_stack.remove(at);
        Ok(())
    }
}

/// Paths obtained from `path` by one square-move: one contiguous occurrence
/// of a square side replaced by the other side. Sorted, without `path`
/// itself.
pub fn square_moves(c: &GlobularComplex, path: &ExecPath) -> Vec<ExecPath> {
    let mut out = BTreeSet::new();
    for q in c.squares() {
        moves_by(q, path, &mut out);
    }
    out.into_iter().collect()
}

/// Moves of `path` across the single square `q`, added to `out`.
pub(crate) fn moves_by(q: &Square, path: &ExecPath, out: &mut BTreeSet<ExecPath>) {
    let edges = path.edges();
    for (from, to) in [(&q.left, &q.right), (&q.right, &q.left)] {
        let k = from.len();
        if k == 0 || k > edges.len() {
            continue;
        }
        for i in 0..=edges.len() - k {
            if &edges[i..i + k] == from.edges() {
                let mut moved = Vec::with_capacity(edges.len() - k + to.len());
                moved.extend_from_slice(&edges[..i]);
                moved.extend_from_slice(to.edges());
                moved.extend_from_slice(&edges[i + k..]);
                let moved = ExecPath::new(moved);
                if &moved != path {
                    out.insert(moved);
                }
            }
        }
    }
}

/// Paths from `from` to `to` grouped into square-move classes.
///
/// Each class is sorted and classes are ordered by their smallest path.
pub fn path_classes(
    c: &GlobularComplex,
    from: &StateId,
    to: &StateId,
) -> Result<Vec<Vec<ExecPath>>> {
    let paths = enumerate_paths(c, from, to)?;
    let mut uf = UnionFind::new(paths.len());
    for (i, p) in paths.iter().enumerate() {
        for q in square_moves(c, p) {
            if let Ok(j) = paths.binary_search(&q) {
                uf.union(i, j);
            }
        }
    }
    Ok(uf
        .classes()
        .into_iter()
        .map(|class| class.into_iter().map(|i| paths[i].clone()).collect())
        .collect())
}
