use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// On-disk complex: `{"name", "vertices", "facets"}`. Facet entries index the vertex
/// array, whose order is the vertex order. `skeleton_bound`, when present, marks a
/// model that is only the given skeleton of a larger complex.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexFile {
    pub name: String,
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skeleton_bound: Option<usize>,
}

impl ComplexFile {
    pub fn from_complex(k: &SimplicialComplex, skeleton_bound: Option<usize>) -> Self {
        ComplexFile {
            name: k.name().to_string(),
            vertices: k.labels().to_vec(),
            facets: k.facets(),
            skeleton_bound,
        }
    }

    /// Closure is computed here; bad indices and repeated vertices are rejected.
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let mut seen = std::collections::HashSet::new();
        for l in &self.vertices {
            if !seen.insert(l.as_str()) {
                return Err(Error::Format(format!("duplicate vertex label {l:?}")));
            }
        }
        SimplicialComplex::from_facets(
            &self.name,
            self.vertices.clone(),
            self.facets.iter().cloned(),
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }
}
