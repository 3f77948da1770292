//! The algebra file format.
//!
//! ```json
//! {
//!   "dim": 3,
//!   "labels": ["a1", "b1", "z"],
//!   "brackets": [{ "i": 0, "j": 1, "coeffs": { "2": "1" } }]
//! }
//! ```
//!
//! Indices are 0-based, each entry has `i < j`, and coefficients are exact
//! rationals written as `"p"` or `"p/q"`. Omitted brackets are zero.

use std::collections::{BTreeMap, BTreeSet};

use nilcap::lie::{BracketTable, JacobiViolation, LieAlgebra, LieError};
use nilcap::linalg::{parse_rational, zero_vector, ParseRationalError};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, String>,
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bracket ({i}, {j}): {source}")]
    Rational {
        i: usize,
        j: usize,
        source: ParseRationalError,
    },
    #[error("bracket ({i}, {j}): coefficient index {index} out of range for dimension {dim}")]
    CoefficientIndex {
        i: usize,
        j: usize,
        index: usize,
        dim: usize,
    },
    #[error("{0}")]
    Structure(LieError),
    #[error("{0}")]
    Jacobi(JacobiViolation),
}

impl FileError {
    /// Short machine-readable category for diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            FileError::Json(_) => "json",
            FileError::Rational { .. } => "rational",
            FileError::CoefficientIndex { .. } => "index",
            FileError::Structure(LieError::DuplicatePair { .. }) => "duplicate",
            FileError::Structure(LieError::IndexOutOfRange { .. }) => "index",
            FileError::Structure(LieError::UnorderedPair { .. }) => "order",
            FileError::Structure(_) => "structure",
            FileError::Jacobi(_) => "jacobi",
        }
    }
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Checks indices, duplicates and coefficients, without the Jacobi identity.
    pub fn to_table(&self) -> Result<BracketTable, FileError> {
        let n = self.dim;
        let mut table = match &self.labels {
            Some(labels) if labels.len() != n => {
                return Err(FileError::Structure(LieError::LabelCount {
                    dim: n,
                    found: labels.len(),
                }))
            }
            Some(labels) => BracketTable::with_labels(labels.clone()),
            None => BracketTable::new(n),
        };
        let mut seen = BTreeSet::new();
        for entry in &self.brackets {
            let (i, j) = (entry.i, entry.j);
            let mut v = zero_vector(n);
            for (&index, literal) in &entry.coeffs {
                if index >= n {
                    return Err(FileError::CoefficientIndex {
                        i,
                        j,
                        index,
                        dim: n,
                    });
                }
                v[index] = parse_rational(literal).map_err(|source| FileError::Rational {
                    i,
                    j,
                    source,
                })?;
            }
            table.set(i, j, v).map_err(FileError::Structure)?;
            if !seen.insert((i, j)) {
                return Err(FileError::Structure(LieError::DuplicatePair { i, j }));
            }
        }
        Ok(table)
    }

    pub fn to_algebra(&self) -> Result<LieAlgebra, FileError> {
        let table = self.to_table()?;
        table.validate().map_err(FileError::Jacobi)?;
        LieAlgebra::new(table).map_err(FileError::Structure)
    }

    /// Nonzero brackets and nonzero coefficients only, in index order.
    pub fn from_algebra(algebra: &LieAlgebra) -> Self {
        let brackets = algebra
            .nonzero_brackets()
            .map(|(i, j, v)| BracketEntry {
                i,
                j,
                coeffs: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.to_string()))
                    .collect(),
            })
            .collect();
        Self {
            dim: algebra.dim(),
            labels: Some(algebra.labels().to_vec()),
            brackets,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra files always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nilcap::heisenberg;

    const H1: &str = r#"{"dim": 3, "labels": ["a1", "b1", "z"],
        "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}]}"#;

    #[test]
    fn parses_heisenberg() {
        let l = AlgebraFile::parse(H1).unwrap().to_algebra().unwrap();
        assert!(l.same_constants(&heisenberg(1)));
        assert_eq!(l.labels(), ["a1", "b1", "z"]);
    }

    #[test]
    fn round_trips_through_json() {
        let l = heisenberg(2);
        let text = AlgebraFile::from_algebra(&l).to_json();
        let back = AlgebraFile::parse(&text).unwrap().to_algebra().unwrap();
        assert_eq!(back, l);
    }

    fn kind_of(text: &str) -> &'static str {
        AlgebraFile::parse(text)
            .and_then(|f| f.to_algebra())
            .unwrap_err()
            .kind()
    }

    #[test]
    fn diagnostics() {
        assert_eq!(kind_of(r#"{"dim": "x"}"#), "json");
        assert_eq!(kind_of(r#"{"dim": 2, "extra": 1}"#), "json");
        assert_eq!(
            kind_of(r#"{"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "1/0"}}]}"#),
            "rational"
        );
        assert_eq!(
            kind_of(r#"{"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"5": "1"}}]}"#),
            "index"
        );
        assert_eq!(
            kind_of(r#"{"dim": 2, "brackets": [{"i": 0, "j": 2, "coeffs": {}}]}"#),
            "index"
        );
        assert_eq!(
            kind_of(r#"{"dim": 2, "brackets": [{"i": 1, "j": 0, "coeffs": {}}]}"#),
            "order"
        );
        assert_eq!(
            kind_of(
                r#"{"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {}},
                                           {"i": 0, "j": 1, "coeffs": {}}]}"#
            ),
            "duplicate"
        );
        assert_eq!(kind_of(r#"{"dim": 2, "labels": ["x"]}"#), "structure");
    }
}
