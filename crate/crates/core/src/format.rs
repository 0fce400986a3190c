//! JSON input format for algebras. Vertices are 1-based in files and 0-based
//! internally; relation paths list arrow names in function-composition order
//! (leftmost applied last), so ["b","a"] is the path "a then b".

use crate::quiver::{AlgebraSpec, Arrow, Quiver, RelationTerm};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowFile {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationTermFile {
    pub coeff: i64,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub vertices: usize,
    pub arrows: Vec<ArrowFile>,
    #[serde(default)]
    pub relations: Vec<Vec<RelationTermFile>>,
    pub nilpotency: usize,
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("arrow {name}: vertex {vertex} out of range 1..={max}")]
    VertexOutOfRange {
        name: String,
        vertex: usize,
        max: usize,
    },
    #[error("relation {relation}, term {term}: unknown arrow name {name:?}")]
    UnknownArrow {
        relation: usize,
        term: usize,
        name: String,
    },
}

impl AlgebraFile {
    pub fn parse(json: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn to_spec(&self) -> Result<AlgebraSpec, FormatError> {
        let n = self.vertices;
        let mut arrows = Vec::new();
        for a in &self.arrows {
            for &v in [a.source, a.target].iter() {
                if v < 1 || v > n {
                    return Err(FormatError::VertexOutOfRange {
                        name: a.name.clone(),
                        vertex: v,
                        max: n,
                    });
                }
            }
            arrows.push(Arrow {
                name: a.name.clone(),
                source: a.source - 1,
                target: a.target - 1,
            });
        }
        let mut relations = Vec::new();
        for (ri, rel) in self.relations.iter().enumerate() {
            let mut terms = Vec::new();
            for (ti, term) in rel.iter().enumerate() {
                let word: Result<Vec<usize>, FormatError> = term
                    .path
                    .iter()
                    .map(|name| {
                        arrows
                            .iter()
                            .position(|a| &a.name == name)
                            .ok_or_else(|| FormatError::UnknownArrow {
                                relation: ri,
                                term: ti,
                                name: name.clone(),
                            })
                    })
                    .collect();
                terms.push(RelationTerm {
                    coeff: term.coeff,
                    word: word?,
                });
            }
            relations.push(terms);
        }
        Ok(AlgebraSpec {
            quiver: Quiver {
                vertex_count: n,
                arrows,
            },
            relations,
            nilpotency: self.nilpotency,
        })
    }
}
