//! JSON documents for complexes, flows and flow morphisms.
//!
//! Serialization is canonical: lists come out in id order, so a document
//! written by this module reads back and re-serializes to the same bytes.

use std::collections::BTreeMap;
use std::path::Path;

use dihomo_core::{
    EdgeId, ExecPath, FiniteFlow, FlowMorphism, GlobularComplex, PathId, Result as CoreResult,
    StateId,
};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub id: String,
    pub src: String,
    pub tgt: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquareDoc {
    pub id: String,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    pub states: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
    #[serde(default)]
    pub squares: Vec<SquareDoc>,
    #[serde(default)]
    pub finals: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathDoc {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlowDoc {
    pub skeleton: Vec<String>,
    #[serde(default)]
    pub paths: Vec<PathDoc>,
    /// `[x, y, x*y]` triples.
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
    #[serde(default)]
    pub adjacency: Vec<[String; 2]>,
}

/// A flow morphism together with its domain; the codomain is supplied by
/// whoever reads it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub domain: FlowDoc,
    pub state_map: BTreeMap<String, String>,
    pub path_map: BTreeMap<String, String>,
}

fn ids(strings: &[String]) -> ExecPath {
    strings.iter().map(|s| EdgeId::new(s.as_str())).collect()
}

fn strings(path: &ExecPath) -> Vec<String> {
    path.edges().iter().map(|e| e.to_string()).collect()
}

impl ComplexDoc {
    pub fn from_complex(c: &GlobularComplex) -> Self {
        ComplexDoc {
            states: c.states().iter().map(|s| s.to_string()).collect(),
            edges: c
                .edges()
                .map(|e| EdgeDoc {
                    id: e.id.to_string(),
                    src: e.source.to_string(),
                    tgt: e.target.to_string(),
                    label: e.label.clone(),
                })
                .collect(),
            squares: c
                .squares()
                .map(|q| SquareDoc {
                    id: q.id.to_string(),
                    left: strings(&q.left),
                    right: strings(&q.right),
                })
                .collect(),
            finals: c.finals().iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Builds the complex; duplicate ids are errors, everything else is left
    /// to the validator.
    pub fn to_complex(&self) -> CoreResult<GlobularComplex> {
        let mut c = GlobularComplex::new();
        for s in &self.states {
            if !c.add_state(s.as_str()) {
                return Err(dihomo_core::Error::DuplicateState(s.as_str().into()));
            }
        }
        for e in &self.edges {
            c.insert_edge(dihomo_core::Edge {
                id: e.id.as_str().into(),
                source: e.src.as_str().into(),
                target: e.tgt.as_str().into(),
                label: e.label.clone(),
            })?;
        }
        for q in &self.squares {
            c.add_square(q.id.as_str(), ids(&q.left), ids(&q.right))?;
        }
        for f in &self.finals {
            c.add_final(f.as_str());
        }
        Ok(c)
    }
}

impl FlowDoc {
    pub fn from_flow(x: &FiniteFlow) -> Self {
        FlowDoc {
            skeleton: x.skeleton().iter().map(|s| s.to_string()).collect(),
            paths: x
                .paths()
                .map(|(p, s, t)| PathDoc {
                    id: p.to_string(),
                    src: s.to_string(),
                    tgt: t.to_string(),
                })
                .collect(),
            compose: x
                .composites()
                .map(|(a, b, ab)| [a.to_string(), b.to_string(), ab.to_string()])
                .collect(),
            adjacency: x
                .adjacency()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
        }
    }

    /// Builds the flow without checking the axioms; see
    /// [`dihomo_core::validate_flow`].
    pub fn to_flow(&self) -> CoreResult<FiniteFlow> {
        let mut x = FiniteFlow::new();
        for s in &self.skeleton {
            if !x.add_state(s.as_str()) {
                return Err(dihomo_core::Error::DuplicateState(s.as_str().into()));
            }
        }
        for p in &self.paths {
            x.add_path(p.id.as_str(), p.src.as_str(), p.tgt.as_str())?;
        }
        for [a, b, ab] in &self.compose {
            x.set_composite(a.as_str(), b.as_str(), ab.as_str());
        }
        for [a, b] in &self.adjacency {
            x.add_adjacency(a.as_str(), b.as_str());
        }
        Ok(x)
    }
}

impl MorphismDoc {
    pub fn new(domain: &FiniteFlow, f: &FlowMorphism) -> Self {
        MorphismDoc {
            domain: FlowDoc::from_flow(domain),
            state_map: f
                .state_map
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
            path_map: f
                .path_map
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        }
    }

    pub fn to_morphism(&self) -> CoreResult<(FiniteFlow, FlowMorphism)> {
        let domain = self.domain.to_flow()?;
        let f = FlowMorphism {
            state_map: self
                .state_map
                .iter()
                .map(|(a, b)| (StateId::new(a.as_str()), StateId::new(b.as_str())))
                .collect(),
            path_map: self
                .path_map
                .iter()
                .map(|(a, b)| (PathId::new(a.as_str()), PathId::new(b.as_str())))
                .collect(),
        };
        Ok((domain, f))
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

/// A parsed JSON model file.
#[derive(Clone, Debug)]
pub enum Document {
    Complex(ComplexDoc),
    Flow(FlowDoc),
    Morphism(MorphismDoc),
}

/// Parses `text` as whichever document its top-level keys announce.
pub fn parse_document(text: &str, origin: &Path) -> Result<Document, CliError> {
    let json = |source| CliError::Json {
        path: origin.to_path_buf(),
        source,
    };
    let value: serde_json::Value = serde_json::from_str(text).map_err(json)?;
    let has = |k: &str| value.get(k).is_some();
    if has("domain") {
        serde_json::from_value(value)
            .map(Document::Morphism)
            .map_err(json)
    } else if has("skeleton") {
        serde_json::from_value(value)
            .map(Document::Flow)
            .map_err(json)
    } else {
        serde_json::from_value(value)
            .map(Document::Complex)
            .map_err(json)
    }
}
