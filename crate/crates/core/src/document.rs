//! JSON lattice documents shared by the library and the command line.
//!
//! ```json
//! { "name": "A2", "gram": [[2, -1], [-1, 2]],
//!   "vectors": { "v": [1, 0] }, "glue": [["1/3", "2/3"]] }
//! ```

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{parse_rational, GlueVector, IntegralLattice, LatticeError};
use crate::matrix::IntMatrix;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("gram must be a square matrix: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("vector {name:?} has length {found}, lattice has rank {expected}")]
    VectorLength {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("glue vector {index} has length {found}, lattice has rank {expected}")]
    GlueLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("{0}")]
    Rational(String),
    #[error("entry {0} does not fit in a 64-bit JSON integer")]
    Overflow(BigInt),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A rational entry written either as a JSON integer or as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalEntry {
    Int(i64),
    Text(String),
}

impl RationalEntry {
    pub fn value(&self) -> Result<BigRational, String> {
        match self {
            Self::Int(n) => Ok(BigRational::from_integer(BigInt::from(*n))),
            Self::Text(t) => parse_rational(t.trim()),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        match (q.is_integer(), q.to_integer().to_i64()) {
            (true, Some(n)) => Self::Int(n),
            _ => Self::Text(q.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LatticeDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub gram: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub vectors: IndexMap<String, Vec<i64>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub glue: Vec<Vec<RationalEntry>>,
}

impl LatticeDocument {
    pub fn from_json(s: &str) -> Result<Self, DocumentError> {
        let doc: Self = serde_json::from_str(s)?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    pub fn from_lattice(l: &IntegralLattice) -> Result<Self, DocumentError> {
        Ok(Self {
            name: l.label().map(str::to_string),
            gram: matrix_to_i64(l.gram())?,
            ..Self::default()
        })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn validate(&self) -> Result<(), DocumentError> {
        let n = self.rank();
        for (row, r) in self.gram.iter().enumerate() {
            if r.len() != n {
                return Err(DocumentError::NotSquare {
                    row,
                    found: r.len(),
                    expected: n,
                });
            }
        }
        for (name, v) in &self.vectors {
            if v.len() != n {
                return Err(DocumentError::VectorLength {
                    name: name.clone(),
                    expected: n,
                    found: v.len(),
                });
            }
        }
        for (index, g) in self.glue.iter().enumerate() {
            if g.len() != n {
                return Err(DocumentError::GlueLength {
                    index,
                    expected: n,
                    found: g.len(),
                });
            }
        }
        Ok(())
    }

    pub fn lattice(&self) -> Result<IntegralLattice, DocumentError> {
        self.validate()?;
        let l = IntegralLattice::new(IntMatrix::from_i64(&self.gram))?;
        Ok(match &self.name {
            Some(name) => l.with_label(name.clone()),
            None => l,
        })
    }

    pub fn named_vectors(&self) -> Vec<(String, Vec<BigInt>)> {
        self.vectors
            .iter()
            .map(|(k, v)| (k.clone(), v.iter().map(|&x| BigInt::from(x)).collect()))
            .collect()
    }

    pub fn glue_vectors(&self) -> Result<Vec<GlueVector>, DocumentError> {
        self.glue
            .iter()
            .map(|g| {
                g.iter()
                    .map(RationalEntry::value)
                    .collect::<Result<Vec<_>, _>>()
                    .map(GlueVector::new)
                    .map_err(DocumentError::Rational)
            })
            .collect()
    }
}

pub fn matrix_to_i64(m: &IntMatrix) -> Result<Vec<Vec<i64>>, DocumentError> {
    m.row_vectors()
        .into_iter()
        .map(|r| vector_to_i64(&r))
        .collect()
}

pub fn vector_to_i64(v: &[BigInt]) -> Result<Vec<i64>, DocumentError> {
    v.iter()
        .map(|x| x.to_i64().ok_or_else(|| DocumentError::Overflow(x.clone())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::make_a2;

    #[test]
    fn parses_full_document() {
        let doc = LatticeDocument::from_json(
            r#"{"name": "pic", "gram": [[0,3,0],[3,0,0],[0,0,-42]],
                "vectors": {"e": [1,0,0], "D": [0,0,1]},
                "glue": [["1/3", "7/3", 1]]}"#,
        )
        .unwrap();
        assert_eq!(doc.lattice().unwrap().discriminant(), BigInt::from(378));
        let names: Vec<_> = doc.named_vectors().into_iter().map(|(n, _)| n).collect();
        assert_eq!(names, ["e", "D"]);
        let glue = doc.glue_vectors().unwrap();
        assert_eq!(glue[0].coords[1], BigRational::new(7.into(), 3.into()));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(
            LatticeDocument::from_json(r#"{"gram": [[1,2],[2]]}"#),
            Err(DocumentError::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            LatticeDocument::from_json(r#"{"gram": [[1]], "vectors": {"v": [1, 2]}}"#),
            Err(DocumentError::VectorLength { .. })
        ));
        assert!(matches!(
            LatticeDocument::from_json(r#"{"name": "x"}"#),
            Err(DocumentError::Json(_))
        ));
        let doc = LatticeDocument::from_json(r#"{"gram": [[0,1],[2,0]]}"#).unwrap();
        assert!(matches!(
            doc.lattice(),
            Err(DocumentError::Lattice(LatticeError::NotSymmetric))
        ));
    }

    #[test]
    fn lattice_round_trip() {
        let a2 = make_a2();
        let doc = LatticeDocument::from_lattice(&a2).unwrap();
        let back = LatticeDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back.lattice().unwrap(), a2);
    }

    #[test]
    fn rational_entries() {
        let q = BigRational::new(1.into(), 3.into());
        assert_eq!(RationalEntry::from_rational(&q), RationalEntry::Text("1/3".into()));
        assert_eq!(
            RationalEntry::from_rational(&BigRational::from_integer(4.into())),
            RationalEntry::Int(4)
        );
    }
}
