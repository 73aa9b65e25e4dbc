//! The structured graph document: the compact `(in_degree, reach)` form plus
//! an optional arc list.

use serde::{Deserialize, Serialize};

use jaco_core::{JacoGraph, LinearFunction};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionDoc {
    pub m: u64,
    pub c: u64,
    pub relaxed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub schema_version: u32,
    pub n: u64,
    pub f: FunctionDoc,
    pub in_degree: Vec<u64>,
    pub reach: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arcs: Option<Vec<(u64, u64)>>,
}

impl GraphDocument {
    pub fn from_graph(g: &JacoGraph, with_arcs: bool) -> Self {
        let f = g.function();
        GraphDocument {
            schema_version: SCHEMA_VERSION,
            n: g.n(),
            f: FunctionDoc {
                m: f.m(),
                c: f.c(),
                relaxed: f.is_relaxed(),
            },
            in_degree: g.in_degrees().to_vec(),
            reach: g.reaches().to_vec(),
            arcs: with_arcs.then(|| g.arcs().collect()),
        }
    }

    /// Pretty JSON with a trailing newline; the canonical byte form.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid graph document: {e}")))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(CliError::Usage(format!(
                "unsupported schema version {}",
                doc.schema_version
            )));
        }
        Ok(doc)
    }

    /// Rebuilds the graph, checking every field against the construction.
    pub fn to_graph(&self) -> Result<JacoGraph, CliError> {
        let f = LinearFunction::from_parts(self.f.m, self.f.c, self.f.relaxed)?;
        if self.in_degree.len() as u64 != self.n {
            return Err(CliError::Usage(format!(
                "n = {} but {} in-degrees",
                self.n,
                self.in_degree.len()
            )));
        }
        let g = JacoGraph::from_parts(f, self.in_degree.clone(), self.reach.clone())?;
        if let Some(arcs) = &self.arcs {
            if !arcs.iter().copied().eq(g.arcs()) {
                return Err(CliError::Usage("arc list disagrees with in_degree/reach".into()));
            }
        }
        Ok(g)
    }
}
