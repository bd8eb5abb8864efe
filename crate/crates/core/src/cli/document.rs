use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::matroid::{subset_of, MatroidError, RankFunction};
use crate::vertices::{Family, PolytopeSpec, VertexError};

/// One matroid or polymatroid, as read from a JSON file. Subsets are sorted
/// arrays of 1-based element labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidDocument {
    pub name: String,
    pub family: DocFamily,
    pub kind: DocKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocFamily {
    Bases,
    Independence,
    Polymatroid,
}

impl From<DocFamily> for Family {
    fn from(f: DocFamily) -> Self {
        match f {
            DocFamily::Bases => Family::Bases,
            DocFamily::Independence => Family::Independence,
            DocFamily::Polymatroid => Family::Polymatroid,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum DocKind {
    Uniform { n: usize, r: usize },
    /// Edges between 1-based vertex labels; element `i` is the `i`-th edge.
    Graphic { edges: Vec<(usize, usize)> },
    Bases { n: usize, bases: Vec<Vec<usize>> },
    /// Values on every nonempty subset.
    Table { n: usize, values: Vec<TableEntry> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub set: Vec<usize>,
    pub value: i64,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("cannot parse matroid document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("vertex labels are 1-based, got edge ({0}, {1})")]
    BadVertex(usize, usize),
    #[error("subset {0:?} is not a strictly increasing list of elements in 1..={1}")]
    BadSubset(Vec<usize>, usize),
    #[error("rank table lists subset {0:?} twice")]
    DuplicateSubset(Vec<usize>),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Vertex(#[from] VertexError),
}

impl MatroidDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn rank_function(&self) -> Result<RankFunction, DocumentError> {
        Ok(match &self.kind {
            DocKind::Uniform { n, r } => RankFunction::uniform(*n, *r)?,
            DocKind::Graphic { edges } => {
                let mut zero_based = Vec::with_capacity(edges.len());
                for &(u, v) in edges {
                    if u == 0 || v == 0 {
                        return Err(DocumentError::BadVertex(u, v));
                    }
                    zero_based.push((u - 1, v - 1));
                }
                RankFunction::graphic(zero_based)?
            }
            DocKind::Bases { n, bases } => {
                for b in bases {
                    check_subset(b, *n)?;
                }
                RankFunction::from_bases(*n, bases)?
            }
            DocKind::Table { n, values } => {
                let mut map = BTreeMap::new();
                for e in values {
                    check_subset(&e.set, *n)?;
                    let mask = subset_of(&e.set, *n)?;
                    if map.insert(mask, e.value).is_some() {
                        return Err(DocumentError::DuplicateSubset(e.set.clone()));
                    }
                }
                RankFunction::table(*n, map)?
            }
        })
    }

    /// Parses the rank function and validates it against the family axioms.
    pub fn spec(&self) -> Result<PolytopeSpec, DocumentError> {
        Ok(PolytopeSpec::new(self.family.into(), self.rank_function()?)?)
    }
}

fn check_subset(s: &[usize], n: usize) -> Result<(), DocumentError> {
    let increasing = s.windows(2).all(|w| w[0] < w[1]);
    if !increasing || s.iter().any(|&e| e == 0 || e > n) {
        return Err(DocumentError::BadSubset(s.to_vec(), n));
    }
    Ok(())
}
