//! Combinatorial globular complexes, finite flows and the categorical
//! realization between them.
//!
//! A [`GlobularComplex`] is a finite presentation of a globular CW-complex of
//! dimension at most two: states, directed edges and 2-globes ("squares")
//! glued along pairs of parallel edge paths. Its realization is a
//! [`FiniteFlow`]: the execution paths of the complex with concatenation as
//! composition and single square-moves as the adjacency relation on the path
//! space. On top of both sit the dihomotopy checks (S-homotopy,
//! T-dihomotopy, germs) and a deadlock analysis, plus a small PV-language
//! frontend that compiles semaphore programs into complexes.
//!
//! The crate is `no_std` and only needs `alloc`. All collections are
//! ordered, so every result is deterministic.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod flow;
pub mod globular;
mod ids;
pub mod partition;
pub mod pv;
pub mod realize;

pub use error::Error;
pub use flow::{
    check_t_dihomotopy, deadlocks, find_isomorphism, germs, glob_flow, is_flow_morphism, restrict,
    s_equivalent, s_homotopic, validate_flow, FiniteFlow, FlowMorphism, FlowReport, FlowViolation,
    GermSet, GermSign, TDihomotopyReport, DEFAULT_SEARCH_BUDGET,
};
pub use globular::{
    enumerate_paths, glob_discrete, is_complex_morphism, path_classes, subdivide_edge,
    validate_complex, ComplexMorphism, ComplexViolation, Edge, ExecPath, GlobularComplex, Square,
    ValidationReport,
};
pub use ids::{EdgeId, PathId, SquareId, StateId, PATH_SEPARATOR};
pub use pv::{parse_pv, pv_to_complex, PvError, PvProgram};
pub use realize::{incremental_realize, realize, realize_morphism, Cell};

/// Convenience alias for results carrying [`Error`].
pub type Result<T, E = Error> = core::result::Result<T, E>;
