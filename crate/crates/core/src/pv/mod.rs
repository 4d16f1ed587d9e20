//! A small PV language: semaphores with capacities and straight-line
//! processes of `P` (acquire), `V` (release) and `A` (action) steps.
//!
//! ```text
//! program  = { resource } , process , { process } ;
//! resource = "res" , ident , natural , ";" ;
//! process  = "proc" , ":" , step , { "." , step } ;
//! step     = ( "P" | "V" | "A" ) , "(" , ident , ")" ;
//! ident    = ( letter | "_" ) , { letter | digit | "_" } ;
//! ```
//!
//! Whitespace is free-form and `#` starts a comment running to the end of
//! the line.

mod compile;
mod parse;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use compile::{pv_to_complex, state_name};
pub use parse::parse_pv;

/// What a step does.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepKind {
    Acquire(String),
    Release(String),
    Act(String),
}

/// One step of a process, with its source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::Acquire(r) => write!(f, "P({r})"),
            StepKind::Release(r) => write!(f, "V({r})"),
            StepKind::Act(l) => write!(f, "A({l})"),
        }
    }
}

/// A parsed and checked program.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PvProgram {
    /// Resource name to capacity.
    pub resources: BTreeMap<String, u32>,
    pub processes: Vec<Vec<Step>>,
}

impl PvProgram {
    /// Origin of the product of the processes: nobody has moved yet.
    pub fn initial_state(&self) -> crate::StateId {
        state_name(&alloc::vec![0; self.processes.len()])
    }

    /// Every process at its end.
    pub fn final_state(&self) -> crate::StateId {
        let ends: Vec<usize> = self.processes.iter().map(Vec::len).collect();
        state_name(&ends)
    }
}

/// Renders the program back to source, one declaration or process per line.
impl fmt::Display for PvProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, cap) in &self.resources {
            writeln!(f, "res {name} {cap};")?;
        }
        for steps in &self.processes {
            f.write_str("proc: ")?;
            for (i, s) in steps.iter().enumerate() {
                if i > 0 {
                    f.write_str(".")?;
                }
                write!(f, "{}", s.kind)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Parse and static-check errors, all positioned (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PvError {
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    UnknownResource {
        name: String,
        line: usize,
        col: usize,
    },
    /// `V(r)` in a process that does not hold `r` at that point.
    ReleaseWithoutHold {
        process: usize,
        name: String,
        line: usize,
        col: usize,
    },
    DuplicateResource {
        name: String,
        line: usize,
        col: usize,
    },
    ZeroCapacity {
        name: String,
        line: usize,
        col: usize,
    },
    NoProcesses,
}

impl fmt::Display for PvError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PvError::Syntax { line, col, message } => {
                write!(f, "{line}:{col}: syntax error: {message}")
            }
            PvError::UnknownResource { name, line, col } => {
                write!(f, "{line}:{col}: unknown resource `{name}`")
            }
            PvError::ReleaseWithoutHold {
                process,
                name,
                line,
                col,
            } => write!(
                f,
                "{line}:{col}: process {process} releases `{name}` without holding it"
            ),
            PvError::DuplicateResource { name, line, col } => {
                write!(f, "{line}:{col}: resource `{name}` declared twice")
            }
            PvError::ZeroCapacity { name, line, col } => {
                write!(
                    f,
                    "{line}:{col}: resource `{name}` needs a positive capacity"
                )
            }
            PvError::NoProcesses => f.write_str("program declares no process"),
        }
    }
}

impl core::error::Error for PvError {}
