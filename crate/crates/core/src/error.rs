use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::globular::ComplexViolation;
use crate::ids::{EdgeId, PathId, SquareId, StateId};

/// Errors raised by operations on complexes, flows and their morphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A globe over an empty set of cells was requested.
    EmptyGlob,
    UnknownState(StateId),
    UnknownEdge(EdgeId),
    UnknownPath(PathId),
    /// A state was named twice.
    DuplicateState(StateId),
    /// An edge id was used twice.
    DuplicateEdge(EdgeId),
    /// A square id was used twice.
    DuplicateSquare(SquareId),
    /// A path id was used twice.
    DuplicatePath(PathId),
    /// A directed cycle was reached while enumerating execution paths.
    Cyclic(StateId),
    /// The complex failed validation.
    InvalidComplex(Vec<ComplexViolation>),
    /// The flow failed validation.
    InvalidFlow(String),
    /// The given map is not a morphism.
    InvalidMorphism(String),
    /// A cell cannot be attached to the complex.
    InvalidAttachment(String),
    /// The exhaustive search ran out of budget before reaching a verdict.
    BudgetExhausted {
        /// Candidates examined before giving up.
        explored: u64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGlob => f.write_str("globe over an empty set"),
            Error::UnknownState(s) => write!(f, "unknown state `{s}`"),
            Error::UnknownEdge(e) => write!(f, "unknown edge `{e}`"),
            Error::UnknownPath(p) => write!(f, "unknown path `{p}`"),
            Error::DuplicateState(s) => write!(f, "duplicate state `{s}`"),
            Error::DuplicateEdge(e) => write!(f, "duplicate edge `{e}`"),
            Error::DuplicateSquare(q) => write!(f, "duplicate square `{q}`"),
            Error::DuplicatePath(p) => write!(f, "duplicate path `{p}`"),
            Error::Cyclic(s) => write!(f, "cyclic 1-skeleton through `{s}`"),
            Error::InvalidComplex(v) => {
                f.write_str("invalid complex:")?;
                for violation in v {
                    write!(f, " {violation};")?;
                }
                Ok(())
            }
            Error::InvalidFlow(msg) => write!(f, "invalid flow: {msg}"),
            Error::InvalidMorphism(msg) => write!(f, "invalid morphism: {msg}"),
            Error::InvalidAttachment(msg) => write!(f, "invalid attachment: {msg}"),
            Error::BudgetExhausted { explored } => {
                write!(f, "search budget exhausted after {explored} candidates")
            }
        }
    }
}

impl core::error::Error for Error {}
