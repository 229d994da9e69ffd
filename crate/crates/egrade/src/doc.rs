//! Grading documents on disk and the JSON shapes of the emitted reports.
//!
//! A document carries a kind and the defining subspace as little-endian
//! bitstrings over the mod-2 root lattice. A coarse document additionally
//! carries a target group dimension and the re-indexing map as one bitstring
//! column per universal-group generator.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::{F2LinearMap, F2Subspace, F2Vector};
use crate::gradings::UniversalGrading;
use crate::rootsys::Kind;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GradingDocument {
    pub kind: String,
    pub ebar: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_group_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<String>>,
}

impl GradingDocument {
    pub fn from_json(text: &str) -> Result<GradingDocument> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Document for a classified grading over its universal group.
    pub fn describe(kind: Kind, ebar: &F2Subspace) -> GradingDocument {
        GradingDocument {
            kind: kind.name().to_string(),
            ebar: ebar.basis().iter().map(|v| v.to_string()).collect(),
            target_group_dim: None,
            alpha: None,
        }
    }

    pub fn kind(&self) -> Result<Kind> {
        Kind::all()
            .into_iter()
            .find(|k| k.name() == self.kind)
            .ok_or_else(|| Error::Document(format!("unknown kind {:?}", self.kind)))
    }

    pub fn ebar_subspace(&self) -> Result<F2Subspace> {
        let rank = self.kind()?.rank();
        let mut vectors = Vec::with_capacity(self.ebar.len());
        for text in &self.ebar {
            let v: F2Vector = text.parse()?;
            if v.dim() != rank {
                return Err(Error::Document(format!(
                    "subspace bitstring {text:?} must have length {rank}"
                )));
            }
            vectors.push(v);
        }
        Ok(F2Subspace::from_vectors(rank, vectors))
    }

    pub fn universal(&self) -> Result<UniversalGrading> {
        UniversalGrading::new(self.kind()?, &self.ebar_subspace()?)
    }

    /// The re-indexing map of a coarse document, or the identity when the
    /// document carries none.
    pub fn alpha_map(&self, group_dim: usize) -> Result<F2LinearMap> {
        match (self.target_group_dim, &self.alpha) {
            (None, None) => Ok(F2LinearMap::identity(group_dim)),
            (Some(n), Some(cols)) => {
                if cols.len() != group_dim {
                    return Err(Error::Document(format!(
                        "expected {group_dim} alpha columns, found {}",
                        cols.len()
                    )));
                }
                let mut parsed = Vec::with_capacity(cols.len());
                for text in cols {
                    let v: F2Vector = text.parse()?;
                    if v.dim() != n {
                        return Err(Error::Document(format!(
                            "alpha column {text:?} must have length {n}"
                        )));
                    }
                    parsed.push(v);
                }
                Ok(F2LinearMap::from_columns(group_dim, n, parsed))
            }
            _ => Err(Error::Document(
                "target_group_dim and alpha must appear together".into(),
            )),
        }
    }
}

#[derive(Serialize)]
pub struct ClassifyReport {
    pub kind: String,
    pub rows: Vec<ClassifyRow>,
}

#[derive(Serialize)]
pub struct ClassifyRow {
    pub label: String,
    pub universal_group_dim: usize,
    pub ebar: Vec<String>,
    pub grading_type: Vec<usize>,
}

#[derive(Serialize)]
pub struct WeylReport {
    pub kind: String,
    pub rows: Vec<WeylRow>,
}

#[derive(Serialize)]
pub struct WeylRow {
    pub label: String,
    pub stabilizer_order: u64,
    pub cartan_components: usize,
    pub weyl_order: u64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadform::canonical_isotropic;
    use crate::rootsys::RootSystem;

    #[test]
    fn documents_round_trip() {
        let q = RootSystem::new(Kind::E6).mod2_form();
        let ebar = canonical_isotropic(&q, 2).unwrap().unwrap();
        let doc = GradingDocument::describe(Kind::E6, &ebar);
        let parsed = GradingDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(parsed.ebar_subspace().unwrap(), ebar);
        assert_eq!(parsed.kind().unwrap(), Kind::E6);
        let ug = parsed.universal().unwrap();
        assert_eq!(parsed.alpha_map(ug.group_dim()).unwrap(), F2LinearMap::identity(5));
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(matches!(
            GradingDocument::from_json("{"),
            Err(Error::Document(_))
        ));
        let doc = GradingDocument {
            kind: "E9".into(),
            ebar: vec![],
            target_group_dim: None,
            alpha: None,
        };
        assert!(matches!(doc.kind(), Err(Error::Document(_))));
        let doc = GradingDocument {
            kind: "E6".into(),
            ebar: vec!["11".into()],
            target_group_dim: None,
            alpha: None,
        };
        assert!(matches!(doc.ebar_subspace(), Err(Error::Document(_))));
        let doc = GradingDocument {
            kind: "E6".into(),
            ebar: vec![],
            target_group_dim: Some(6),
            alpha: None,
        };
        assert!(matches!(doc.alpha_map(7), Err(Error::Document(_))));
    }
}
