//! Canonical JSON encoding of complexes.
//!
//! `{"format_version":1,"vertex_count":N,"maximal_simplices":[[...],...]}`,
//! simplices ascending and sorted lexicographically. A graph shorthand
//! `{"vertex_count":N,"edges":[[i,j],...],"flag":true}` denotes the clique
//! complex of the graph.

use serde::{Deserialize, Serialize};

use super::{Complex, Simplex, VertexId, MAX_DIMENSION, MAX_MAXIMAL_SIMPLICES};
use crate::error::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CanonicalComplex {
    pub format_version: u32,
    pub vertex_count: usize,
    pub maximal_simplices: Vec<Vec<VertexId>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphShorthand {
    pub vertex_count: usize,
    pub edges: Vec<[VertexId; 2]>,
    pub flag: bool,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ComplexFile {
    Canonical(CanonicalComplex),
    Graph(GraphShorthand),
}

impl Complex {
    pub fn to_canonical(&self) -> CanonicalComplex {
        CanonicalComplex {
            format_version: FORMAT_VERSION,
            vertex_count: self.vertex_count(),
            maximal_simplices: self
                .maximal_simplices()
                .iter()
                .map(|s| s.vertices().to_vec())
                .collect(),
        }
    }

    /// Compact canonical JSON; identical complexes give identical bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_canonical()).expect("plain data serializes")
    }

    /// Parses either the canonical format or the graph shorthand.
    pub fn from_json(text: &str) -> Result<Complex> {
        let file: ComplexFile = serde_json::from_str(text)?;
        match file {
            ComplexFile::Canonical(c) => {
                if c.format_version != FORMAT_VERSION {
                    return Err(Error::Parse(format!(
                        "unsupported format_version {}",
                        c.format_version
                    )));
                }
                let simplices = c
                    .maximal_simplices
                    .into_iter()
                    .map(Simplex::new)
                    .collect::<Result<Vec<_>>>()?;
                Complex::from_maximal_simplices(c.vertex_count, simplices)
            }
            ComplexFile::Graph(g) => {
                if !g.flag {
                    return Err(Error::Parse(
                        "graph shorthand requires \"flag\": true".into(),
                    ));
                }
                let edges: Vec<_> = g.edges.iter().map(|e| (e[0], e[1])).collect();
                let c = Complex::clique_complex(g.vertex_count, &edges)?;
                let maximal = super::maximal_cliques(c.adjacency(), Some(MAX_MAXIMAL_SIMPLICES))
                    .ok_or_else(|| {
                        Error::Capacity(format!(
                            "more than {MAX_MAXIMAL_SIMPLICES} maximal simplices"
                        ))
                    })?;
                if let Some(s) = maximal.iter().find(|s| s.dim() > MAX_DIMENSION) {
                    return Err(Error::Capacity(format!(
                        "clique {s} has dimension above {MAX_DIMENSION}"
                    )));
                }
                let _ = c.maximal.set(maximal);
                Ok(c)
            }
        }
    }
}
