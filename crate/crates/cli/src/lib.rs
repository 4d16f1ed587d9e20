//! File formats, DOT export and the commands behind the `dihomo` binary.
//!
//! Each command is a plain function returning the exact text the binary
//! prints, so the binary itself only parses flags and writes output.

pub mod dot;
mod error;
pub mod format;
pub mod report;

use std::collections::BTreeSet;
use std::io::Read;
use std::path::{Path, PathBuf};

use dihomo_core::{
    check_t_dihomotopy, deadlocks, germs, parse_pv, pv_to_complex, realize, realize_morphism,
    s_equivalent, subdivide_edge, validate_complex, validate_flow, EdgeId, FiniteFlow, GermSign,
    GlobularComplex, PvProgram, StateId, DEFAULT_SEARCH_BUDGET,
};

pub use error::CliError;
use format::{ComplexDoc, Document, FlowDoc, MorphismDoc};

/// Environment variable overriding the exhaustive-search budget.
pub const BUDGET_VAR: &str = "DIHOMO_SEARCH_BUDGET";

pub type Result<T, E = CliError> = std::result::Result<T, E>;

/// A model read from disk.
#[derive(Clone, Debug)]
pub enum Model {
    Complex {
        complex: GlobularComplex,
        /// Present when the complex was compiled from PV source.
        program: Option<PvProgram>,
    },
    Flow(FiniteFlow),
}

/// Reads `path` (`-` for standard input).
pub fn read_text(path: &Path) -> Result<String> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

pub fn read_program(path: &Path) -> Result<PvProgram> {
    parse_pv(&read_text(path)?).map_err(|source| CliError::Pv {
        path: path.to_path_buf(),
        source,
    })
}

/// Loads a complex or flow document, or PV source when `pv` is set.
pub fn load(path: &Path, pv: bool) -> Result<Model> {
    if pv {
        let program = read_program(path)?;
        return Ok(Model::Complex {
            complex: pv_to_complex(&program),
            program: Some(program),
        });
    }
    match format::parse_document(&read_text(path)?, path)? {
        Document::Complex(doc) => Ok(Model::Complex {
            complex: doc.to_complex()?,
            program: None,
        }),
        Document::Flow(doc) => Ok(Model::Flow(doc.to_flow()?)),
        Document::Morphism(_) => Err(CliError::Usage(format!(
            "{}: expected a complex or a flow, found a morphism",
            path.display()
        ))),
    }
}

impl Model {
    /// The validated flow: realized for complexes, checked for flows.
    pub fn flow(&self) -> Result<FiniteFlow> {
        match self {
            Model::Complex { complex, .. } => Ok(realize(complex)?),
            Model::Flow(x) => {
                validate_flow(x).into_result()?;
                Ok(x.clone())
            }
        }
    }

    fn complex(&self, what: &str) -> Result<&GlobularComplex> {
        match self {
            Model::Complex { complex, .. } => Ok(complex),
            Model::Flow(_) => Err(CliError::Usage(format!(
                "{what} needs a complex, not a flow"
            ))),
        }
    }

    /// Resolves a state argument; `init` and `final` name the unique source
    /// and sink when the literal state does not exist.
    pub fn state(&self, x: &FiniteFlow, name: &str) -> Result<StateId> {
        let id = StateId::new(name);
        if x.skeleton().contains(&id) {
            return Ok(id);
        }
        let alias = match (name, self) {
            (
                "init",
                Model::Complex {
                    program: Some(p), ..
                },
            ) => Some(p.initial_state()),
            (
                "final",
                Model::Complex {
                    program: Some(p), ..
                },
            ) => Some(p.final_state()),
            ("final", Model::Complex { complex, .. }) if complex.finals().len() == 1 => {
                complex.finals().iter().next().cloned()
            }
            ("init", _) => unique(
                x.skeleton()
                    .iter()
                    .filter(|s| !x.paths().any(|(_, _, t)| t == *s)),
            ),
            ("final", _) => unique(
                x.skeleton()
                    .iter()
                    .filter(|s| !x.paths().any(|(_, src, _)| src == *s)),
            ),
            _ => None,
        };
        match alias {
            Some(s) if x.skeleton().contains(&s) => Ok(s),
            Some(s) => Err(dihomo_core::Error::UnknownState(s).into()),
            None if name == "init" || name == "final" => Err(CliError::Usage(format!(
                "`{name}` is ambiguous here; name the state explicitly"
            ))),
            None => Err(dihomo_core::Error::UnknownState(id).into()),
        }
    }

    /// Final states: the ones given, else those recorded in the model.
    pub fn finals(&self, x: &FiniteFlow, given: &[String]) -> Result<BTreeSet<StateId>> {
        if !given.is_empty() {
            return given.iter().map(|s| self.state(x, s)).collect();
        }
        match self {
            Model::Complex { complex, .. } => Ok(complex.finals().clone()),
            Model::Flow(_) => Err(CliError::Usage(
                "a flow records no final states; pass --final".into(),
            )),
        }
    }
}

fn unique<'a>(mut it: impl Iterator<Item = &'a StateId>) -> Option<StateId> {
    let first = it.next()?;
    it.next().is_none().then(|| first.clone())
}

/// The search budget from [`BUDGET_VAR`], or the default.
pub fn search_budget() -> Result<u64> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{BUDGET_VAR} must be a non-negative integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_SEARCH_BUDGET),
    }
}

/// Compiles PV source to a complex document.
pub fn cmd_compile(path: &Path) -> Result<String> {
    let program = read_program(path)?;
    Ok(format::to_json(&ComplexDoc::from_complex(&pv_to_complex(
        &program,
    ))))
}

/// Realizes a complex as a flow document.
pub fn cmd_realize(model: &Model) -> Result<String> {
    Ok(format::to_json(&FlowDoc::from_flow(&model.flow()?)))
}

/// Validates a complex or a flow; violations are errors.
pub fn cmd_validate(model: &Model) -> Result<String> {
    match model {
        Model::Complex { complex, .. } => {
            let v = validate_complex(complex);
            let warnings = v.degenerate_squares.clone();
            v.into_result()?;
            Ok(report::complex_ok(complex, &warnings))
        }
        Model::Flow(x) => {
            validate_flow(x).into_result()?;
            Ok(report::flow_ok(x))
        }
    }
}

/// DOT text for the model, or for its realization when `realized` is set.
pub fn cmd_dot(model: &Model, realized: bool) -> Result<String> {
    match model {
        Model::Complex { complex, .. } if !realized => {
            validate_complex(complex).into_result()?;
            Ok(dot::complex_to_dot(complex))
        }
        _ => Ok(dot::flow_to_dot(&model.flow()?)),
    }
}

/// Subdivides `edge`, returning the new complex document and the realized
/// canonical morphism as a morphism document.
pub fn cmd_subdivide(model: &Model, edge: &str) -> Result<(String, String)> {
    let c = model.complex("subdivide")?;
    validate_complex(c).into_result()?;
    let (d, m) = subdivide_edge(c, &EdgeId::new(edge))?;
    let f = realize_morphism(&m, c, &d)?;
    let x = realize(c)?;
    Ok((
        format::to_json(&ComplexDoc::from_complex(&d)),
        format::to_json(&MorphismDoc::new(&x, &f)),
    ))
}

/// One analysis per invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Query {
    Deadlocks { init: String, finals: Vec<String> },
    Classes { from: String, to: String },
    Germs { state: String, sign: GermSign },
    TCheck(PathBuf),
    SEquiv { other: PathBuf, other_pv: bool },
}

pub fn cmd_analyze(model: &Model, query: &Query) -> Result<String> {
    let x = model.flow()?;
    match query {
        Query::Deadlocks { init, finals } => {
            let init = model.state(&x, init)?;
            let finals = model.finals(&x, finals)?;
            Ok(report::deadlocks(&deadlocks(&x, &init, &finals)?))
        }
        Query::Classes { from, to } => {
            let (a, b) = (model.state(&x, from)?, model.state(&x, to)?);
            Ok(report::classes(&x.components_between(&a, &b)))
        }
        Query::Germs { state, sign } => {
            let s = model.state(&x, state)?;
            Ok(report::germs(&germs(&x, &s, *sign)?))
        }
        Query::TCheck(path) => {
            let doc = match format::parse_document(&read_text(path)?, path)? {
                Document::Morphism(doc) => doc,
                _ => {
                    return Err(CliError::Usage(format!(
                        "{}: expected a morphism document",
                        path.display()
                    )))
                }
            };
            let (dom, f) = doc.to_morphism()?;
            validate_flow(&dom).into_result()?;
            Ok(format!("{}\n", check_t_dihomotopy(&f, &dom, &x)?))
        }
        Query::SEquiv { other, other_pv } => {
            let y = load(other, *other_pv)?.flow()?;
            let witness = s_equivalent(&x, &y, search_budget()?)?;
            Ok(report::s_equivalence(witness.as_ref()))
        }
    }
}
