//! Finite flows: a 0-skeleton, a finite set of execution paths with source
//! and target maps, an associative partial composition, and an adjacency
//! relation standing in for the topology of the path space.
//!
//! Two paths lie in the same path-connected component of the path space iff
//! they are related by the reflexive-transitive closure of the adjacency
//! relation ("adj*").

mod deadlock;
mod germs;
mod index;
mod morphism;
mod tdihomotopy;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::ids::{PathId, StateId};
use crate::{Error, Result};

pub(crate) use index::FlowIndex;

pub use deadlock::deadlocks;
pub use germs::{germs, GermSet, GermSign};
pub use morphism::{
    find_isomorphism, is_flow_morphism, is_isomorphism, s_equivalent, s_homotopic, FlowMorphism,
    DEFAULT_SEARCH_BUDGET,
};
pub use tdihomotopy::{check_t_dihomotopy, ConditionOutcome, TDihomotopyReport};

/// A flow with finitely many states and paths.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiniteFlow {
    skeleton: BTreeSet<StateId>,
    paths: BTreeMap<PathId, (StateId, StateId)>,
    compose: BTreeMap<(PathId, PathId), PathId>,
    /// Unordered pairs, stored with the smaller id first.
    adjacency: BTreeSet<(PathId, PathId)>,
}

impl FiniteFlow {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_state(&mut self, state: impl Into<StateId>) -> bool {
        self.skeleton.insert(state.into())
    }

    pub fn add_path(
        &mut self,
        id: impl Into<PathId>,
        source: impl Into<StateId>,
        target: impl Into<StateId>,
    ) -> Result<()> {
        let id = id.into();
        if self.paths.contains_key(&id) {
            return Err(Error::DuplicatePath(id));
        }
        self.paths.insert(id, (source.into(), target.into()));
        Ok(())
    }

    /// Records `x * y = xy`. Axioms are checked by [`validate_flow`].
    pub fn set_composite(
        &mut self,
        x: impl Into<PathId>,
        y: impl Into<PathId>,
        xy: impl Into<PathId>,
    ) -> Option<PathId> {
        self.compose.insert((x.into(), y.into()), xy.into())
    }

    /// Declares `a` and `b` adjacent. Self-pairs are ignored.
    pub fn add_adjacency(&mut self, a: impl Into<PathId>, b: impl Into<PathId>) -> bool {
        let (a, b) = (a.into(), b.into());
        match a.cmp(&b) {
            core::cmp::Ordering::Less => self.adjacency.insert((a, b)),
            core::cmp::Ordering::Greater => self.adjacency.insert((b, a)),
            core::cmp::Ordering::Equal => false,
        }
    }

    pub fn skeleton(&self) -> &BTreeSet<StateId> {
        &self.skeleton
    }

    /// `(id, source, target)` in id order.
    pub fn paths(&self) -> impl Iterator<Item = (&PathId, &StateId, &StateId)> {
        self.paths.iter().map(|(p, (s, t))| (p, s, t))
    }

    pub fn path_count(&self) -> usize {
        self.paths.len()
    }

    pub fn has_path(&self, id: &PathId) -> bool {
        self.paths.contains_key(id)
    }

    pub fn endpoints(&self, id: &PathId) -> Option<(&StateId, &StateId)> {
        self.paths.get(id).map(|(s, t)| (s, t))
    }

    pub fn composite(&self, x: &PathId, y: &PathId) -> Option<&PathId> {
        self.compose.get(&(x.clone(), y.clone()))
    }

    /// `(x, y, x*y)` in `(x, y)` order.
    pub fn composites(&self) -> impl Iterator<Item = (&PathId, &PathId, &PathId)> {
        self.compose.iter().map(|((x, y), xy)| (x, y, xy))
    }

    pub fn composite_count(&self) -> usize {
        self.compose.len()
    }

    /// Adjacent pairs, smaller id first.
    pub fn adjacency(&self) -> impl Iterator<Item = (&PathId, &PathId)> {
        self.adjacency.iter().map(|(a, b)| (a, b))
    }

    pub fn adjacency_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of pairs `(x, y)` with `t(x) = s(y)`.
    pub fn composable_pair_count(&self) -> usize {
        let mut starting: BTreeMap<&StateId, usize> = BTreeMap::new();
        for (s, _) in self.paths.values() {
            *starting.entry(s).or_default() += 1;
        }
        self.paths
            .values()
            .map(|(_, t)| starting.get(t).copied().unwrap_or(0))
            .sum()
    }

    /// Paths grouped into adj*-components. Classes are sorted and ordered by
    /// their smallest id.
    pub fn path_components(&self) -> Vec<Vec<PathId>> {
        let idx = FlowIndex::new(self);
        let mut uf = idx.components();
        uf.classes()
            .into_iter()
            .map(|class| class.into_iter().map(|i| idx.ids[i].clone()).collect())
            .collect()
    }

    /// The adj*-components of the paths from `from` to `to`.
    pub fn components_between(&self, from: &StateId, to: &StateId) -> Vec<Vec<PathId>> {
        self.path_components()
            .into_iter()
            .filter(|class| {
                self.endpoints(&class[0])
                    .is_some_and(|(s, t)| s == from && t == to)
            })
            .collect()
    }
}

/// One failed flow axiom, as found by [`validate_flow`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlowViolation {
    UnknownEndpoint {
        path: PathId,
        state: StateId,
    },
    UnknownPath(PathId),
    /// A composite is recorded for a pair with `t(x) != s(y)`.
    NotComposable {
        x: PathId,
        y: PathId,
    },
    SourceAxiom {
        x: PathId,
        y: PathId,
        xy: PathId,
    },
    TargetAxiom {
        x: PathId,
        y: PathId,
        xy: PathId,
    },
    Associativity {
        x: PathId,
        y: PathId,
        z: PathId,
    },
    /// `t(x) = s(y)` but no composite is recorded.
    MissingComposite {
        x: PathId,
        y: PathId,
    },
    /// Adjacent paths with different endpoints.
    AdjacencyEndpoints {
        a: PathId,
        b: PathId,
    },
    /// `a adj b` but `a*y` and `b*y` (`right`) or `y*a` and `y*b` (left)
    /// fall in different components.
    AdjacencyCongruence {
        a: PathId,
        b: PathId,
        y: PathId,
        right: bool,
    },
}

impl fmt::Display for FlowViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FlowViolation::*;
        match self {
            UnknownEndpoint { path, state } => {
                write!(
                    f,
                    "unknown endpoint: path `{path}` refers to state `{state}`"
                )
            }
            UnknownPath(p) => write!(f, "unknown path: `{p}`"),
            NotComposable { x, y } => {
                write!(f, "not composable: `{x}` * `{y}` recorded but t(x) != s(y)")
            }
            SourceAxiom { x, y, xy } => {
                write!(f, "source axiom: s(`{xy}`) != s(`{x}`) for `{x}` * `{y}`")
            }
            TargetAxiom { x, y, xy } => {
                write!(f, "target axiom: t(`{xy}`) != t(`{y}`) for `{x}` * `{y}`")
            }
            Associativity { x, y, z } => {
                write!(
                    f,
                    "associativity: (`{x}` * `{y}`) * `{z}` != `{x}` * (`{y}` * `{z}`)"
                )
            }
            MissingComposite { x, y } => write!(f, "totality: `{x}` * `{y}` is undefined"),
            AdjacencyEndpoints { a, b } => {
                write!(f, "adjacency endpoints: `{a}` and `{b}` are not parallel")
            }
            AdjacencyCongruence { a, b, y, right } => {
                if *right {
                    write!(
                        f,
                        "adjacency congruence: `{a}`*`{y}` and `{b}`*`{y}` are not connected"
                    )
                } else {
                    write!(
                        f,
                        "adjacency congruence: `{y}`*`{a}` and `{y}`*`{b}` are not connected"
                    )
                }
            }
        }
    }
}

/// Result of [`validate_flow`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlowReport {
    pub violations: Vec<FlowViolation>,
}

impl FlowReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidFlow(alloc::format!(
                "{v} (and {} more)",
                self.violations.len() - 1
            ))),
        }
    }
}

/// Checks every flow axiom exactly: endpoints, source and target of every
/// composite, associativity on every composable triple, totality of the
/// composition, and that adjacency is a congruence for it.
pub fn validate_flow(x: &FiniteFlow) -> FlowReport {
    use FlowViolation::*;
    let mut v = Vec::new();

    for (p, (s, t)) in &x.paths {
        for st in [s, t] {
            if !x.skeleton.contains(st) {
                v.push(UnknownEndpoint {
                    path: p.clone(),
                    state: st.clone(),
                });
            }
        }
    }
    let mut referenced_unknown = BTreeSet::new();
    for ((a, b), ab) in &x.compose {
        for p in [a, b, ab] {
            if !x.paths.contains_key(p) {
                referenced_unknown.insert(p.clone());
            }
        }
    }
    for (a, b) in &x.adjacency {
        for p in [a, b] {
            if !x.paths.contains_key(p) {
                referenced_unknown.insert(p.clone());
            }
        }
    }
    v.extend(referenced_unknown.into_iter().map(UnknownPath));

    let idx = FlowIndex::new(x);
    let n = idx.len();

    for ((a, b), ab) in &x.compose {
        let (Some(&ia), Some(&ib), Some(&iab)) = (idx.pos.get(a), idx.pos.get(b), idx.pos.get(ab))
        else {
            continue;
        };
        if idx.tgt[ia] != idx.src[ib] {
            v.push(NotComposable {
                x: a.clone(),
                y: b.clone(),
            });
            continue;
        }
        if idx.src[iab] != idx.src[ia] {
            v.push(SourceAxiom {
                x: a.clone(),
                y: b.clone(),
                xy: ab.clone(),
            });
        }
        if idx.tgt[iab] != idx.tgt[ib] {
            v.push(TargetAxiom {
                x: a.clone(),
                y: b.clone(),
                xy: ab.clone(),
            });
        }
    }

    for a in 0..n {
        for &b in idx.starting_at(idx.tgt[a]) {
            if idx.compose(a, b).is_none() {
                v.push(MissingComposite {
                    x: idx.ids[a].clone(),
                    y: idx.ids[b].clone(),
                });
            }
        }
    }

    for a in 0..n {
        for &(b, ab) in &idx.comp[a] {
            if idx.tgt[a] != idx.src[b] {
                continue;
            }
            for &(c, bc) in &idx.comp[b] {
                if idx.tgt[b] != idx.src[c] {
                    continue;
                }
                if let (Some(left), Some(right)) = (idx.compose(ab, c), idx.compose(a, bc)) {
                    if left != right {
                        v.push(Associativity {
                            x: idx.ids[a].clone(),
                            y: idx.ids[b].clone(),
                            z: idx.ids[c].clone(),
                        });
                    }
                }
            }
        }
    }

    let mut uf = idx.components();
    for &(a, b) in &idx.adjacent {
        if idx.src[a] != idx.src[b] || idx.tgt[a] != idx.tgt[b] {
            v.push(AdjacencyEndpoints {
                a: idx.ids[a].clone(),
                b: idx.ids[b].clone(),
            });
            continue;
        }
        for &y in idx.starting_at(idx.tgt[a]) {
            if let (Some(ay), Some(by)) = (idx.compose(a, y), idx.compose(b, y)) {
                if !uf.same(ay, by) {
                    v.push(AdjacencyCongruence {
                        a: idx.ids[a].clone(),
                        b: idx.ids[b].clone(),
                        y: idx.ids[y].clone(),
                        right: true,
                    });
                }
            }
        }
        for &y in idx.ending_at(idx.src[a]) {
            if let (Some(ya), Some(yb)) = (idx.compose(y, a), idx.compose(y, b)) {
                if !uf.same(ya, yb) {
                    v.push(AdjacencyCongruence {
                        a: idx.ids[a].clone(),
                        b: idx.ids[b].clone(),
                        y: idx.ids[y].clone(),
                        right: false,
                    });
                }
            }
        }
    }

    FlowReport { violations: v }
}

/// The globe flow over a finite set: states `0` and `1`, one path `0 -> 1`
/// per element, nothing composable, no adjacency.
pub fn glob_flow<I, T>(cells: I) -> Result<FiniteFlow>
where
    I: IntoIterator<Item = T>,
    T: Into<PathId>,
{
    let cells: BTreeSet<PathId> = cells.into_iter().map(Into::into).collect();
    if cells.is_empty() {
        return Err(Error::EmptyGlob);
    }
    let mut f = FiniteFlow::new();
    f.add_state("0");
    f.add_state("1");
    for z in cells {
        f.add_path(z, "0", "1")?;
    }
    Ok(f)
}

/// The restriction of `x` to the states `keep`: the paths with both ends in
/// `keep`, with composition and adjacency inherited.
pub fn restrict(x: &FiniteFlow, keep: &BTreeSet<StateId>) -> Result<FiniteFlow> {
    if let Some(s) = keep.iter().find(|s| !x.skeleton.contains(*s)) {
        return Err(Error::UnknownState(s.clone()));
    }
    let paths: BTreeMap<PathId, (StateId, StateId)> = x
        .paths
        .iter()
        .filter(|(_, (s, t))| keep.contains(s) && keep.contains(t))
        .map(|(p, e)| (p.clone(), e.clone()))
        .collect();
    let compose = x
        .compose
        .iter()
        .filter(|((a, b), ab)| {
            paths.contains_key(a) && paths.contains_key(b) && paths.contains_key(*ab)
        })
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    let adjacency = x
        .adjacency
        .iter()
        .filter(|(a, b)| paths.contains_key(a) && paths.contains_key(b))
        .cloned()
        .collect();
    Ok(FiniteFlow {
        skeleton: keep.clone(),
        paths,
        compose,
        adjacency,
    })
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The flow of `u -e1-> v -e2-> w`, written out by hand.
    pub fn chain2() -> FiniteFlow {
        let mut f = FiniteFlow::new();
        for s in ["u", "v", "w"] {
            f.add_state(s);
        }
        f.add_path("e1", "u", "v").unwrap();
        f.add_path("e2", "v", "w").unwrap();
        f.add_path("e1*e2", "u", "w").unwrap();
        f.set_composite("e1", "e2", "e1*e2");
        f
    }

    pub fn glob_adjacent(cells: &[&str]) -> FiniteFlow {
        let mut f = glob_flow(cells.iter().copied()).unwrap();
        for w in cells.windows(2) {
            f.add_adjacency(w[0], w[1]);
        }
        f
    }

    pub fn states(names: &[&str]) -> BTreeSet<StateId> {
        names.iter().map(|s| StateId::from(*s)).collect()
    }
}
