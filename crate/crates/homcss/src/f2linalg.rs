//! Exact linear algebra over the two-element field.
//!
//! Vectors are bit-packed into `u64` words so that row XOR, dot products
//! and Hamming weights are word-parallel. Elimination always works on a
//! dense bit-packed workspace even for sparse inputs: the complexes in
//! scope are low-degree but elimination fills in, and at desk scale the
//! dense workspace is both simpler and faster.
//!
//! All elimination routines are deterministic (lowest-index pivot
//! tie-breaking), so bases, solutions and witnesses are reproducible.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

const WORD_BITS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum F2Error {
    #[error("dimension mismatch: {context} expects length {expected}, got {actual}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("matrix text parse error: {0}")]
    Parse(String),
}

/// A vector over GF(2), bit-packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

impl F2Vector {
    /// The zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Standard basis vector e_i.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.flip(i);
        v
    }

    /// Builds a vector by toggling each listed index; indices appearing an
    /// even number of times cancel (characteristic-2 construction).
    pub fn from_toggles(len: usize, indices: &[usize]) -> Result<Self, F2Error> {
        let mut v = Self::zeros(len);
        for &i in indices {
            if i >= len {
                return Err(F2Error::IndexOutOfRange { index: i, len });
            }
            v.flip(i);
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Mod-2 dot product.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot: length mismatch");
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    /// In-place XOR (addition over GF(2)).
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "xor_assign: length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Index of the lowest set bit, if any.
    pub fn lowest_set_bit(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Sorted support indices.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                out.push(wi * WORD_BITS + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Lexicographic order on sorted support sequences for vectors of equal
    /// weight: the vector containing the lowest differing index is smaller.
    /// Used to pick canonical witnesses among equal-weight minimizers.
    pub fn cmp_support(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = 1u64 << diff.trailing_zeros();
                return if a & bit != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector(len={}, support={:?})", self.len, self.support())
    }
}

/// A matrix over GF(2) with bit-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![F2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].flip(i);
        }
        m
    }

    /// Builds a matrix by toggling each listed `(row, col)` entry; entries
    /// appearing an even number of times cancel.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: &[(usize, usize)],
    ) -> Result<Self, F2Error> {
        let mut m = Self::zeros(rows, cols);
        for &(r, c) in entries {
            if r >= rows {
                return Err(F2Error::IndexOutOfRange { index: r, len: rows });
            }
            if c >= cols {
                return Err(F2Error::IndexOutOfRange { index: c, len: cols });
            }
            m.data[r].flip(c);
        }
        Ok(m)
    }

    pub fn from_rows(cols: usize, rows: Vec<F2Vector>) -> Result<Self, F2Error> {
        for row in &rows {
            if row.len() != cols {
                return Err(F2Error::DimensionMismatch {
                    context: "from_rows",
                    expected: cols,
                    actual: row.len(),
                });
            }
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value);
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r].flip(c);
    }

    pub fn row(&self, r: usize) -> &F2Vector {
        &self.data[r]
    }

    pub fn column(&self, c: usize) -> F2Vector {
        let mut v = F2Vector::zeros(self.rows);
        for r in 0..self.rows {
            if self.data[r].get(c) {
                v.flip(r);
            }
        }
        v
    }

    pub fn columns(&self) -> Vec<F2Vector> {
        self.transpose().data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F2Vector::is_zero)
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.data[r].support() {
                t.data[c].flip(r);
            }
        }
        t
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix, F2Error> {
        if self.cols != other.rows {
            return Err(F2Error::DimensionMismatch {
                context: "mul",
                expected: self.cols,
                actual: other.rows,
            });
        }
        let mut out = F2Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in self.data[r].support() {
                out.data[r].xor_assign(&other.data[c]);
            }
        }
        Ok(out)
    }

    /// Matrix–vector product `M v`.
    pub fn mul_vec(&self, v: &F2Vector) -> Result<F2Vector, F2Error> {
        if v.len() != self.cols {
            return Err(F2Error::DimensionMismatch {
                context: "mul_vec",
                expected: self.cols,
                actual: v.len(),
            });
        }
        let mut out = F2Vector::zeros(self.rows);
        for r in 0..self.rows {
            if self.data[r].dot(v) {
                out.flip(r);
            }
        }
        Ok(out)
    }

    /// Sorted `(row, col)` pairs of the nonzero entries.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..self.rows {
            for c in self.data[r].support() {
                out.push((r, c));
            }
        }
        out
    }

    /// Maximum Hamming weight over the rows; 0 for an empty matrix.
    pub fn max_row_weight(&self) -> usize {
        self.data.iter().map(F2Vector::weight).max().unwrap_or(0)
    }

    /// Emits the text format: first line `rows cols`, then one line `r c`
    /// per nonzero entry, 0-indexed, sorted lexicographically.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for (r, c) in self.entries() {
            out.push_str(&format!("{r} {c}\n"));
        }
        out
    }

    /// Parses the text format emitted by [`F2Matrix::to_text`].
    pub fn from_text(text: &str) -> Result<Self, F2Error> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| F2Error::Parse("empty matrix text".into()))?;
        let mut dims = header.split_whitespace();
        let rows: usize = dims
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| F2Error::Parse(format!("bad header line {header:?}")))?;
        let cols: usize = dims
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| F2Error::Parse(format!("bad header line {header:?}")))?;
        if dims.next().is_some() {
            return Err(F2Error::Parse(format!("bad header line {header:?}")));
        }
        let mut m = Self::zeros(rows, cols);
        for line in lines {
            let mut parts = line.split_whitespace();
            let r: usize = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| F2Error::Parse(format!("bad entry line {line:?}")))?;
            let c: usize = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| F2Error::Parse(format!("bad entry line {line:?}")))?;
            if parts.next().is_some() {
                return Err(F2Error::Parse(format!("bad entry line {line:?}")));
            }
            if r >= rows || c >= cols {
                return Err(F2Error::Parse(format!(
                    "entry ({r}, {c}) out of range for {rows}x{cols}"
                )));
            }
            if m.get(r, c) {
                return Err(F2Error::Parse(format!("duplicate entry ({r}, {c})")));
            }
            m.flip(r, c);
        }
        Ok(m)
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(32) {
            for c in 0..self.cols.min(64) {
                write!(f, "{}", if self.get(r, c) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Incremental row-echelon basis: rows with distinct pivots (lowest set
/// bits), kept sorted by pivot. Supports rank queries and membership tests.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    rows: Vec<(usize, F2Vector)>,
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_rows<'a>(rows: impl IntoIterator<Item = &'a F2Vector>) -> Self {
        let mut space = Self::new();
        for row in rows {
            space.insert(row.clone());
        }
        space
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis in ascending-pivot order.
    pub fn reduce(&self, mut v: F2Vector) -> F2Vector {
        for (pivot, row) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &F2Vector) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Inserts `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: F2Vector) -> bool {
        let residual = self.reduce(v);
        match residual.lowest_set_bit() {
            None => false,
            Some(pivot) => {
                let pos = self
                    .rows
                    .partition_point(|(p, _)| *p < pivot);
                self.rows.insert(pos, (pivot, residual));
                true
            }
        }
    }
}

/// Echelon basis that carries a tag vector through every reduction,
/// expressing each basis row as a combination of the inserted originals.
#[derive(Clone, Debug)]
struct TaggedBasis {
    rows: Vec<(usize, F2Vector, F2Vector)>,
}

impl TaggedBasis {
    fn new() -> Self {
        Self { rows: Vec::new() }
    }

    fn reduce(&self, mut v: F2Vector, mut tag: F2Vector) -> (F2Vector, F2Vector) {
        for (pivot, row, row_tag) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
                tag.xor_assign(row_tag);
            }
        }
        (v, tag)
    }

    /// Inserts an already-reduced nonzero row.
    fn insert_reduced(&mut self, v: F2Vector, tag: F2Vector) {
        let pivot = v.lowest_set_bit().expect("insert_reduced: zero row");
        let pos = self.rows.partition_point(|(p, _, _)| *p < pivot);
        self.rows.insert(pos, (pivot, v, tag));
    }
}

/// Rank of `M` (dimension of its row space, which equals the dimension of
/// its column space).
pub fn rank(m: &F2Matrix) -> usize {
    let mut space = RowSpace::new();
    for r in 0..m.rows() {
        space.insert(m.row(r).clone());
    }
    space.rank()
}

/// A basis of `{v : Mv = 0}`, in deterministic pivot order: the columns of
/// `M` are eliminated left to right and one kernel vector is produced for
/// every dependent column, tagged by the combination that witnessed the
/// dependency.
pub fn kernel_basis(m: &F2Matrix) -> Vec<F2Vector> {
    let cols = m.transpose();
    let mut basis = TaggedBasis::new();
    let mut kernel = Vec::new();
    for (j, col) in cols.data.into_iter().enumerate() {
        let tag = F2Vector::unit(m.cols(), j);
        let (residual, tag) = basis.reduce(col, tag);
        if residual.is_zero() {
            kernel.push(tag);
        } else {
            basis.insert_reduced(residual, tag);
        }
    }
    kernel
}

/// Some `x` with `Mx = v`, or `None` when `v` is outside the column space.
/// Which solution is returned is fixed by the elimination order.
pub fn solve_membership(m: &F2Matrix, v: &F2Vector) -> Result<Option<F2Vector>, F2Error> {
    if v.len() != m.rows() {
        return Err(F2Error::DimensionMismatch {
            context: "solve_membership",
            expected: m.rows(),
            actual: v.len(),
        });
    }
    let cols = m.transpose();
    let mut basis = TaggedBasis::new();
    for (j, col) in cols.data.into_iter().enumerate() {
        let tag = F2Vector::unit(m.cols(), j);
        let (residual, tag) = basis.reduce(col, tag);
        if !residual.is_zero() {
            basis.insert_reduced(residual, tag);
        }
    }
    let (residual, tag) = basis.reduce(v.clone(), F2Vector::zeros(m.cols()));
    Ok(if residual.is_zero() { Some(tag) } else { None })
}
