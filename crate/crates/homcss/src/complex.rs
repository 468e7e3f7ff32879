//! Finite chain complexes over GF(2).
//!
//! A complex of dimension `D` is a list of cell counts `n_0 .. n_D` and
//! boundary matrices `∂_i : C_i → C_{i-1}` for `1 ≤ i ≤ D` satisfying
//! `∂_i ∘ ∂_{i+1} = 0`. Orientation signs are dropped throughout: in
//! characteristic two they carry no information. The cobounding map `δ_i`
//! is represented by `∂_{i+1}` transposed.
//!
//! Complexes here are abstract chain data, not embedded geometry; products
//! and duals are cleanest at this level, and the CSS codes downstream
//! depend only on the boundary matrices.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::f2linalg::{self, F2Matrix, F2Vector};

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("boundary {index} has shape {actual_rows}x{actual_cols}, expected {expected_rows}x{expected_cols}")]
    ShapeMismatch {
        index: usize,
        expected_rows: usize,
        expected_cols: usize,
        actual_rows: usize,
        actual_cols: usize,
    },
    #[error("cell_counts has length {actual}, expected {expected} for dimension {dim}")]
    CellCountLength {
        dim: usize,
        expected: usize,
        actual: usize,
    },
    #[error("labels for dimension {dim} have length {actual}, expected {expected}")]
    LabelLength {
        dim: usize,
        expected: usize,
        actual: usize,
    },
    #[error("complex is invalid: ∂∂ ≠ 0 at degree {degree}, cell {cell}")]
    NotAComplex { degree: usize, cell: usize },
    #[error("degree {degree} out of range for dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },
    #[error("complex JSON error: {0}")]
    Json(String),
    #[error(transparent)]
    F2(#[from] f2linalg::F2Error),
}

/// Result of the `∂∂ = 0` check. An invalid complex reports the first
/// degree `i` and `(i+1)`-cell whose double boundary fails to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid { degree: usize, cell: usize },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }

    pub fn diagnostic(&self) -> Option<String> {
        match self {
            Validity::Valid => None,
            Validity::Invalid { degree, cell } => Some(format!(
                "∂_{degree} ∘ ∂_{} ≠ 0 on cell {cell} of dimension {}",
                degree + 1,
                degree + 1
            )),
        }
    }
}

/// Mod-2 Betti numbers `b_0 .. b_D` together with the boundary ranks that
/// produced them (`ranks[i] = rank ∂_i`, with `rank ∂_0 = rank ∂_{D+1} = 0`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    pub ranks: Vec<usize>,
}

/// A finite chain complex over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct ChainComplex {
    dim: usize,
    cell_counts: Vec<usize>,
    /// `boundaries[i - 1]` is `∂_i : C_i → C_{i-1}`, shape `n_{i-1} × n_i`.
    boundaries: Vec<F2Matrix>,
    labels: Option<Vec<Vec<String>>>,
}

impl std::fmt::Debug for ChainComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ChainComplex(dim={}, cells={:?})",
            self.dim, self.cell_counts
        )
    }
}

impl ChainComplex {
    /// Builds a complex from cell counts and boundary matrices, checking
    /// shapes only (`∂∂ = 0` is checked separately by [`Self::validate`]).
    pub fn new(
        dim: usize,
        cell_counts: Vec<usize>,
        boundaries: Vec<F2Matrix>,
    ) -> Result<Self, ComplexError> {
        if cell_counts.len() != dim + 1 {
            return Err(ComplexError::CellCountLength {
                dim,
                expected: dim + 1,
                actual: cell_counts.len(),
            });
        }
        if boundaries.len() != dim {
            return Err(ComplexError::CellCountLength {
                dim,
                expected: dim,
                actual: boundaries.len(),
            });
        }
        for (idx, b) in boundaries.iter().enumerate() {
            let i = idx + 1;
            if b.rows() != cell_counts[i - 1] || b.cols() != cell_counts[i] {
                return Err(ComplexError::ShapeMismatch {
                    index: i,
                    expected_rows: cell_counts[i - 1],
                    expected_cols: cell_counts[i],
                    actual_rows: b.rows(),
                    actual_cols: b.cols(),
                });
            }
        }
        Ok(Self {
            dim,
            cell_counts,
            boundaries,
            labels: None,
        })
    }

    /// Attaches human-readable per-cell labels (one list per dimension).
    pub fn with_labels(mut self, labels: Vec<Vec<String>>) -> Result<Self, ComplexError> {
        if labels.len() != self.dim + 1 {
            return Err(ComplexError::LabelLength {
                dim: self.dim,
                expected: self.dim + 1,
                actual: labels.len(),
            });
        }
        for (d, per_dim) in labels.iter().enumerate() {
            if per_dim.len() != self.cell_counts[d] {
                return Err(ComplexError::LabelLength {
                    dim: d,
                    expected: self.cell_counts[d],
                    actual: per_dim.len(),
                });
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// A single point: one 0-cell, no boundaries.
    pub fn point() -> Self {
        Self::new(0, vec![1], vec![]).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cell_counts(&self) -> &[usize] {
        &self.cell_counts
    }

    pub fn cells(&self, dim: usize) -> usize {
        self.cell_counts.get(dim).copied().unwrap_or(0)
    }

    pub fn labels(&self) -> Option<&Vec<Vec<String>>> {
        self.labels.as_ref()
    }

    /// `∂_i` for `1 ≤ i ≤ dim`.
    pub fn boundary(&self, i: usize) -> Option<&F2Matrix> {
        if i >= 1 && i <= self.dim {
            self.boundaries.get(i - 1)
        } else {
            None
        }
    }

    /// `∂_i` extended by zero maps at both ends: `∂_0 : C_0 → 0` and
    /// `∂_{D+1} : 0 → C_D`.
    pub fn boundary_or_zero(&self, i: usize) -> F2Matrix {
        match self.boundary(i) {
            Some(b) => b.clone(),
            None => {
                let rows = if i >= 1 { self.cells(i - 1) } else { 0 };
                let cols = self.cells(i);
                F2Matrix::zeros(rows, cols)
            }
        }
    }

    /// The cobounding matrix `δ_i = ∂_{i+1}ᵀ : C_i → C_{i+1}`, extended by
    /// zero at the top end.
    pub fn coboundary(&self, i: usize) -> F2Matrix {
        self.boundary_or_zero(i + 1).transpose()
    }

    /// Checks `∂_i ∘ ∂_{i+1} = 0` for every consecutive pair, reporting the
    /// first offending `(degree, cell)` on failure.
    pub fn validate(&self) -> Validity {
        for i in 1..self.dim {
            let lower = &self.boundaries[i - 1];
            let upper = &self.boundaries[i];
            for cell in 0..upper.cols() {
                let mut image = F2Vector::zeros(lower.rows());
                for mid in upper.column(cell).support() {
                    image.xor_assign(&lower.column(mid));
                }
                if !image.is_zero() {
                    return Validity::Invalid { degree: i, cell };
                }
            }
        }
        Validity::Valid
    }

    pub(crate) fn ensure_valid(&self) -> Result<(), ComplexError> {
        match self.validate() {
            Validity::Valid => Ok(()),
            Validity::Invalid { degree, cell } => Err(ComplexError::NotAComplex { degree, cell }),
        }
    }

    /// Mod-2 Betti numbers via `b_i = n_i − rank ∂_i − rank ∂_{i+1}`.
    pub fn homology(&self) -> Result<HomologyProfile, ComplexError> {
        self.ensure_valid()?;
        let mut ranks = vec![0usize];
        ranks.extend(self.boundaries.iter().map(f2linalg::rank));
        ranks.push(0);
        let betti = (0..=self.dim)
            .map(|i| self.cell_counts[i] - ranks[i] - ranks[i + 1])
            .collect();
        ranks.truncate(self.dim + 1);
        Ok(HomologyProfile { betti, ranks })
    }

    /// Alternating sum of cell counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.cell_counts
            .iter()
            .enumerate()
            .map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// The complex with boundaries reversed and transposed: dimension-`k`
    /// cells of the result are the dimension-`(D−k)` cells of the input and
    /// `∂'_k = ∂_{D−k+1}ᵀ`. Applying it twice returns the original complex.
    pub fn cochain_complex(&self) -> Result<ChainComplex, ComplexError> {
        self.ensure_valid()?;
        let dim = self.dim;
        let cell_counts: Vec<usize> = (0..=dim).map(|k| self.cell_counts[dim - k]).collect();
        let boundaries: Vec<F2Matrix> = (1..=dim)
            .map(|k| self.boundaries[dim - k].transpose())
            .collect();
        let mut out = ChainComplex::new(dim, cell_counts, boundaries)?;
        if let Some(labels) = &self.labels {
            let mut reversed = labels.clone();
            reversed.reverse();
            out = out.with_labels(reversed)?;
        }
        Ok(out)
    }

    /// Total complex of the tensor product. Dimension-`k` cells are the
    /// pairs `(a, b)` with `dim a + dim b = k`, ordered lexicographically in
    /// `(dim a, index a, index b)`; the boundary follows the Leibniz rule
    /// `∂(a, b) = (∂a, b) + (a, ∂b)` over GF(2).
    pub fn tensor_product(&self, other: &ChainComplex) -> Result<ChainComplex, ComplexError> {
        self.ensure_valid()?;
        other.ensure_valid()?;
        let dim = self.dim + other.dim;
        // block layout for total degree k: one block per p = dim a, q = k - p
        let block_ranges = |k: usize| -> Vec<(usize, usize, usize)> {
            let mut out = Vec::new();
            let mut offset = 0;
            for p in 0..=k.min(self.dim) {
                let q = k - p;
                if q > other.dim {
                    continue;
                }
                out.push((p, q, offset));
                offset += self.cell_counts[p] * other.cell_counts[q];
            }
            out
        };
        let cell_counts: Vec<usize> = (0..=dim)
            .map(|k| {
                block_ranges(k)
                    .iter()
                    .map(|&(p, q, _)| self.cell_counts[p] * other.cell_counts[q])
                    .sum()
            })
            .collect();

        let mut boundaries = Vec::with_capacity(dim);
        for k in 1..=dim {
            let source_blocks = block_ranges(k);
            let target_blocks = block_ranges(k - 1);
            let target_offset = |p: usize, q: usize| -> usize {
                target_blocks
                    .iter()
                    .find(|&&(tp, tq, _)| tp == p && tq == q)
                    .map(|&(_, _, off)| off)
                    .expect("target block must exist")
            };
            let mut entries: Vec<(usize, usize)> = Vec::new();
            for &(p, q, offset) in &source_blocks {
                let ny_q = other.cell_counts[q];
                for a in 0..self.cell_counts[p] {
                    for b in 0..ny_q {
                        let col = offset + a * ny_q + b;
                        if p >= 1 {
                            let off = target_offset(p - 1, q);
                            for a2 in self.boundaries[p - 1].column(a).support() {
                                entries.push((off + a2 * ny_q + b, col));
                            }
                        }
                        if q >= 1 {
                            let off = target_offset(p, q - 1);
                            let ny_q1 = other.cell_counts[q - 1];
                            for b2 in other.boundaries[q - 1].column(b).support() {
                                entries.push((off + a * ny_q1 + b2, col));
                            }
                        }
                    }
                }
            }
            boundaries.push(F2Matrix::from_entries(
                cell_counts[k - 1],
                cell_counts[k],
                &entries,
            )?);
        }

        let mut out = ChainComplex::new(dim, cell_counts, boundaries)?;
        if let (Some(la), Some(lb)) = (&self.labels, &other.labels) {
            let mut labels = Vec::with_capacity(dim + 1);
            for k in 0..=dim {
                let mut per_dim = Vec::new();
                for &(p, q, _) in &block_ranges(k) {
                    for left in &la[p] {
                        for right in &lb[q] {
                            per_dim.push(format!("({left},{right})"));
                        }
                    }
                }
                labels.push(per_dim);
            }
            out = out.with_labels(labels)?;
        }
        Ok(out)
    }

    /// Serializes to the JSON complex format.
    pub fn to_json(&self) -> String {
        let doc = ComplexDoc {
            dim: self.dim,
            cells: self.cell_counts.clone(),
            boundaries: self.boundaries.iter().map(F2Matrix::to_text).collect(),
            labels: self.labels.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("complex serialization cannot fail")
    }

    /// Parses the JSON complex format.
    pub fn from_json(text: &str) -> Result<Self, ComplexError> {
        let doc: ComplexDoc =
            serde_json::from_str(text).map_err(|e| ComplexError::Json(e.to_string()))?;
        let boundaries = doc
            .boundaries
            .iter()
            .map(|b| F2Matrix::from_text(b))
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = ChainComplex::new(doc.dim, doc.cells, boundaries)?;
        if let Some(labels) = doc.labels {
            out = out.with_labels(labels)?;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexDoc {
    dim: usize,
    cells: Vec<usize>,
    boundaries: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<Vec<String>>>,
}
