//! The algebra interchange document: a JSON object with the dimension,
//! basis names, optional parity vector, and the sparse structure-constant
//! table as `[i, j, k, "p/q"]` entries with 1-based indices.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use pilab_core::algebra::{Algebra, AlgebraError, Parity};
use pilab_core::scalar::{format_scalar, parse_scalar};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("table entry {entry}: malformed rational `{text}`")]
    MalformedRational { entry: usize, text: String },
    #[error("table entry {entry}: index {index} out of range 1..={dim}")]
    IndexOutOfRange {
        entry: usize,
        index: usize,
        dim: usize,
    },
    #[error("duplicate table entry for ({i}, {j}, {k})")]
    DuplicateEntry { i: usize, j: usize, k: usize },
    #[error("parity list has length {got}, expected {dim}")]
    ParityLength { got: usize, dim: usize },
    #[error("parity values must be 0 or 1, found {0}")]
    BadParityValue(u8),
    #[error(
        "grading violated: product of basis {i} and {j} has a component on basis {k} \
         of the wrong parity"
    )]
    GradingViolation { i: usize, j: usize, k: usize },
    #[error("basis name count {got} does not match dim {dim}")]
    NameCount { got: usize, dim: usize },
    #[error("algebra error: {0}")]
    Algebra(AlgebraError),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub parity: Option<Vec<u8>>,
    /// `[i, j, k, coefficient]`: `e_i e_j` contains `coefficient * e_k`,
    /// indices 1-based, coefficients as exact rational strings.
    pub table: Vec<(usize, usize, usize, String)>,
}

impl AlgebraFile {
    pub fn from_algebra(algebra: &Algebra) -> Self {
        let table = algebra
            .table_entries()
            .map(|(i, j, k, c)| (i + 1, j + 1, k + 1, format_scalar(c)))
            .collect();
        AlgebraFile {
            dim: algebra.dim(),
            basis: algebra.basis_names().to_vec(),
            parity: algebra
                .parity()
                .map(|ps| ps.iter().map(|p| p.bit()).collect()),
            table,
        }
    }

    pub fn into_algebra(self) -> Result<Algebra, FormatError> {
        if self.basis.len() != self.dim {
            return Err(FormatError::NameCount {
                got: self.basis.len(),
                dim: self.dim,
            });
        }
        let parity = match self.parity {
            None => None,
            Some(bits) => {
                if bits.len() != self.dim {
                    return Err(FormatError::ParityLength {
                        got: bits.len(),
                        dim: self.dim,
                    });
                }
                Some(
                    bits.iter()
                        .map(|&b| Parity::from_bit(b).ok_or(FormatError::BadParityValue(b)))
                        .collect::<Result<Vec<_>, _>>()?,
                )
            }
        };
        let mut entries = Vec::with_capacity(self.table.len());
        for (pos, (i, j, k, text)) in self.table.iter().enumerate() {
            for &index in [i, j, k].iter() {
                if *index == 0 || *index > self.dim {
                    return Err(FormatError::IndexOutOfRange {
                        entry: pos,
                        index: *index,
                        dim: self.dim,
                    });
                }
            }
            let coeff = parse_scalar(text).map_err(|_| FormatError::MalformedRational {
                entry: pos,
                text: text.clone(),
            })?;
            entries.push((i - 1, j - 1, k - 1, coeff));
        }
        Algebra::new(self.dim, self.basis, entries, parity).map_err(|e| match e {
            AlgebraError::DuplicateEntry { i, j, k } => FormatError::DuplicateEntry {
                i: i + 1,
                j: j + 1,
                k: k + 1,
            },
            AlgebraError::GradingViolation { i, j, k } => FormatError::GradingViolation {
                i: i + 1,
                j: j + 1,
                k: k + 1,
            },
            other => FormatError::Algebra(other),
        })
    }

    /// Canonical rendering: pretty JSON plus a trailing newline. Writing the
    /// parse of a canonical document reproduces it byte for byte.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json_str(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }
}
