//! Finite globular complexes of dimension at most two.
//!
//! States form the 0-skeleton, every [`Edge`] is an attached directed
//! interval and every [`Square`] is a 2-globe glued along two parallel
//! execution paths. The 1-skeleton must be acyclic so that path sets stay
//! finite.

mod morphism;
mod paths;

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::ids::{EdgeId, PathId, SquareId, StateId, PATH_SEPARATOR};
use crate::{Error, Result};

pub use morphism::{is_complex_morphism, subdivide_edge, ComplexMorphism};
pub(crate) use paths::moves_by;
pub use paths::{all_paths, enumerate_paths, path_classes, square_moves};

/// An attached directed interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub source: StateId,
    pub target: StateId,
    /// Inert metadata, never used by the semantics.
    pub label: Option<String>,
}

/// A sequence of edge ids, read left to right.
///
/// Composability and non-emptiness are properties checked against a
/// complex, see [`GlobularComplex::path_endpoints`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExecPath(Vec<EdgeId>);

impl ExecPath {
    pub fn new(edges: Vec<EdgeId>) -> Self {
        ExecPath(edges)
    }

    pub fn single(edge: impl Into<EdgeId>) -> Self {
        ExecPath(alloc::vec![edge.into()])
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &ExecPath) -> ExecPath {
        let mut edges = self.0.clone();
        edges.extend_from_slice(&other.0);
        ExecPath(edges)
    }

    /// Canonical path id: edge ids joined by [`PATH_SEPARATOR`].
    pub fn path_id(&self) -> PathId {
        let mut s = String::new();
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                s.push(PATH_SEPARATOR);
            }
            s.push_str(e.as_str());
        }
        PathId::new(s)
    }

    /// Inverse of [`ExecPath::path_id`].
    pub fn from_path_id(id: &PathId) -> ExecPath {
        ExecPath(
            id.as_str()
                .split(PATH_SEPARATOR)
                .map(EdgeId::from)
                .collect(),
        )
    }
}

impl FromIterator<EdgeId> for ExecPath {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        ExecPath(iter.into_iter().collect())
    }
}

impl fmt::Display for ExecPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(e.as_str())?;
        }
        f.write_str(")")
    }
}

/// A 2-globe glued along two parallel paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Square {
    pub id: SquareId,
    pub left: ExecPath,
    pub right: ExecPath,
}

impl Square {
    /// Both boundaries are the same path; the square adds no moves.
    pub fn is_degenerate(&self) -> bool {
        self.left == self.right
    }
}

/// Why a sequence of edges is not an execution path of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathDefect {
    Empty,
    UnknownEdge(EdgeId),
    /// Edge at this index does not start where the previous one ended.
    Broken(usize),
}

/// Finite presentation of a globular CW-complex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GlobularComplex {
    states: BTreeSet<StateId>,
    edges: BTreeMap<EdgeId, Edge>,
    squares: BTreeMap<SquareId, Square>,
    finals: BTreeSet<StateId>,
}

impl GlobularComplex {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a state; returns false if it was already present.
    pub fn add_state(&mut self, state: impl Into<StateId>) -> bool {
        self.states.insert(state.into())
    }

    /// Adds an edge. Endpoints are not checked here, see [`validate_complex`].
    pub fn add_edge(
        &mut self,
        id: impl Into<EdgeId>,
        source: impl Into<StateId>,
        target: impl Into<StateId>,
    ) -> Result<()> {
        self.insert_edge(Edge {
            id: id.into(),
            source: source.into(),
            target: target.into(),
            label: None,
        })
    }

    pub fn insert_edge(&mut self, edge: Edge) -> Result<()> {
        if self.edges.contains_key(&edge.id) {
            return Err(Error::DuplicateEdge(edge.id));
        }
        self.edges.insert(edge.id.clone(), edge);
        Ok(())
    }

    /// Adds a square. Boundaries are not checked here, see [`validate_complex`].
    pub fn add_square(
        &mut self,
        id: impl Into<SquareId>,
        left: ExecPath,
        right: ExecPath,
    ) -> Result<()> {
        let id = id.into();
        if self.squares.contains_key(&id) {
            return Err(Error::DuplicateSquare(id));
        }
        self.squares.insert(id.clone(), Square { id, left, right });
        Ok(())
    }

    pub fn add_final(&mut self, state: impl Into<StateId>) {
        self.finals.insert(state.into());
    }

    pub fn remove_square(&mut self, id: &SquareId) -> Option<Square> {
        self.squares.remove(id)
    }

    pub fn states(&self) -> &BTreeSet<StateId> {
        &self.states
    }

    pub fn has_state(&self, state: &StateId) -> bool {
        self.states.contains(state)
    }

    /// Edges in id order.
    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.values()
    }

    pub fn edge(&self, id: &EdgeId) -> Option<&Edge> {
        self.edges.get(id)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Squares in id order.
    pub fn squares(&self) -> impl Iterator<Item = &Square> {
        self.squares.values()
    }

    pub fn square(&self, id: &SquareId) -> Option<&Square> {
        self.squares.get(id)
    }

    pub fn square_count(&self) -> usize {
        self.squares.len()
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    /// Outgoing edges of every state, each list in edge id order.
    pub fn successors(&self) -> BTreeMap<&StateId, Vec<&Edge>> {
        let mut out: BTreeMap<&StateId, Vec<&Edge>> =
            self.states.iter().map(|s| (s, Vec::new())).collect();
        for e in self.edges.values() {
            out.entry(&e.source).or_default().push(e);
        }
        out
    }

    /// Source and target of `path`, or why it is not an execution path.
    pub fn path_endpoints(
        &self,
        path: &ExecPath,
    ) -> core::result::Result<(&StateId, &StateId), PathDefect> {
        let mut iter = path.edges().iter().enumerate();
        let (_, first) = iter.next().ok_or(PathDefect::Empty)?;
        let first = self
            .edges
            .get(first)
            .ok_or_else(|| PathDefect::UnknownEdge(first.clone()))?;
        let mut end = &first.target;
        for (i, id) in iter {
            let e = self
                .edges
                .get(id)
                .ok_or_else(|| PathDefect::UnknownEdge(id.clone()))?;
            if &e.source != end {
                return Err(PathDefect::Broken(i));
            }
            end = &e.target;
        }
        Ok((&first.source, end))
    }

    /// States with no incoming edge.
    pub fn minimal_states(&self) -> Vec<&StateId> {
        let targets: BTreeSet<&StateId> = self.edges.values().map(|e| &e.target).collect();
        self.states
            .iter()
            .filter(|s| !targets.contains(s))
            .collect()
    }
}

/// One problem found by [`validate_complex`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexViolation {
    DanglingEndpoint {
        edge: EdgeId,
        state: StateId,
    },
    DanglingFinal(StateId),
    /// The edge id contains the path separator or is empty.
    ReservedEdgeId(EdgeId),
    /// States lying on or behind a directed cycle.
    CyclicSkeleton(Vec<StateId>),
    EmptyBoundary {
        square: SquareId,
    },
    UnknownBoundaryEdge {
        square: SquareId,
        edge: EdgeId,
    },
    BrokenBoundary {
        square: SquareId,
        index: usize,
    },
    BoundaryEndpoints {
        square: SquareId,
    },
}

impl fmt::Display for ComplexViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexViolation::DanglingEndpoint { edge, state } => {
                write!(
                    f,
                    "dangling endpoint: edge `{edge}` refers to unknown state `{state}`"
                )
            }
            ComplexViolation::DanglingFinal(s) => {
                write!(f, "dangling final: unknown state `{s}`")
            }
            ComplexViolation::ReservedEdgeId(e) => write!(
                f,
                "reserved edge id: `{e}` is empty or contains `{PATH_SEPARATOR}`"
            ),
            ComplexViolation::CyclicSkeleton(states) => {
                f.write_str("cyclic 1-skeleton through")?;
                for s in states {
                    write!(f, " `{s}`")?;
                }
                Ok(())
            }
            ComplexViolation::EmptyBoundary { square } => {
                write!(f, "bad square boundary: `{square}` has an empty side")
            }
            ComplexViolation::UnknownBoundaryEdge { square, edge } => {
                write!(
                    f,
                    "bad square boundary: `{square}` uses unknown edge `{edge}`"
                )
            }
            ComplexViolation::BrokenBoundary { square, index } => write!(
                f,
                "bad square boundary: `{square}` is not composable at position {index}"
            ),
            ComplexViolation::BoundaryEndpoints { square } => write!(
                f,
                "bad square boundary: sides of `{square}` do not share endpoints"
            ),
        }
    }
}

/// Result of [`validate_complex`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<ComplexViolation>,
    /// Squares whose two sides coincide. Accepted, but they add nothing.
    pub degenerate_squares: Vec<SquareId>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(Error::InvalidComplex(self.violations))
        }
    }
}

/// Checks that every id resolves, the 1-skeleton is acyclic and every square
/// is glued along two parallel execution paths.
pub fn validate_complex(c: &GlobularComplex) -> ValidationReport {
    let mut report = ValidationReport::default();
    let v = &mut report.violations;

    for e in c.edges.values() {
        if e.id.as_str().is_empty() || e.id.as_str().contains(PATH_SEPARATOR) {
            v.push(ComplexViolation::ReservedEdgeId(e.id.clone()));
        }
        for s in [&e.source, &e.target] {
            if !c.states.contains(s) {
                v.push(ComplexViolation::DanglingEndpoint {
                    edge: e.id.clone(),
                    state: s.clone(),
                });
            }
        }
    }
    for s in &c.finals {
        if !c.states.contains(s) {
            v.push(ComplexViolation::DanglingFinal(s.clone()));
        }
    }

    let cyclic = cyclic_states(c);
    if !cyclic.is_empty() {
        v.push(ComplexViolation::CyclicSkeleton(cyclic));
    }

    for q in c.squares.values() {
        let mut ends = Vec::with_capacity(2);
        for side in [&q.left, &q.right] {
            match c.path_endpoints(side) {
                Ok(e) => ends.push(e),
                Err(PathDefect::Empty) => v.push(ComplexViolation::EmptyBoundary {
                    square: q.id.clone(),
                }),
                Err(PathDefect::UnknownEdge(edge)) => {
                    v.push(ComplexViolation::UnknownBoundaryEdge {
                        square: q.id.clone(),
                        edge,
                    })
                }
                Err(PathDefect::Broken(index)) => v.push(ComplexViolation::BrokenBoundary {
                    square: q.id.clone(),
                    index,
                }),
            }
        }
        if ends.len() == 2 && ends[0] != ends[1] {
            v.push(ComplexViolation::BoundaryEndpoints {
                square: q.id.clone(),
            });
        }
        if q.is_degenerate() {
            report.degenerate_squares.push(q.id.clone());
        }
    }
    report
}

/// States left over by Kahn's algorithm: those on a cycle or downstream of one.
fn cyclic_states(c: &GlobularComplex) -> Vec<StateId> {
    let mut indegree: BTreeMap<&StateId, usize> = c.states.iter().map(|s| (s, 0)).collect();
    let mut out: BTreeMap<&StateId, Vec<&StateId>> = BTreeMap::new();
    for e in c.edges.values() {
        if !c.states.contains(&e.source) || !c.states.contains(&e.target) {
            continue;
        }
        *indegree.get_mut(&e.target).unwrap() += 1;
        out.entry(&e.source).or_default().push(&e.target);
    }
    let mut queue: VecDeque<&StateId> = indegree
        .iter()
        .filter(|(_, d)| **d == 0)
        .map(|(s, _)| *s)
        .collect();
    while let Some(s) = queue.pop_front() {
        for t in out.get(s).into_iter().flatten() {
            let d = indegree.get_mut(t).unwrap();
            *d -= 1;
            if *d == 0 {
                queue.push_back(t);
            }
        }
    }
    indegree
        .into_iter()
        .filter(|(_, d)| *d > 0)
        .map(|(s, _)| s.clone())
        .collect()
}

/// The globe over a finite discrete set: states `0` and `1` and one edge
/// `0 -> 1` per element.
pub fn glob_discrete<I, T>(cells: I) -> Result<GlobularComplex>
where
    I: IntoIterator<Item = T>,
    T: Into<EdgeId>,
{
    let cells: BTreeSet<EdgeId> = cells.into_iter().map(Into::into).collect();
    if cells.is_empty() {
        return Err(Error::EmptyGlob);
    }
    let mut c = GlobularComplex::new();
    c.add_state("0");
    c.add_state("1");
    for z in cells {
        c.add_edge(z, "0", "1")?;
    }
    Ok(c)
}
