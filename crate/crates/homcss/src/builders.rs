//! Constructors for the complexes the code pipeline consumes: simplicial
//! complexes from facet lists, periodic toric grids, Poincaré-dual
//! complexes, and finite covers described by voltage assignments.
//!
//! Covers are specified by permutation voltages on oriented 1-cells with a
//! flatness condition on every 2-cell (the product of voltages around the
//! boundary loop is the identity), rather than by subgroups of a
//! fundamental group: finite, checkable data, equivalent for the complexes
//! in scope. Two kinds of base carry enough structure to lift:
//!
//! - simplicial complexes (cells carry vertex lists, any dimension);
//! - polyhedral complexes of dimension ≤ 2 with explicit edge endpoints
//!   and face boundary loops (toric grids, circles).

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ChainComplex, ComplexError};
use crate::f2linalg::{F2Error, F2Matrix};

#[derive(Debug, Error)]
pub enum BuilderError {
    #[error("degenerate parameter: {0}")]
    Degenerate(String),
    #[error("not a closed pseudomanifold: cell {cell} of dimension {dim} lies in {count} top cells (expected 2)")]
    NotPseudomanifold {
        cell: usize,
        dim: usize,
        count: usize,
    },
    #[error("voltage product around 2-cell {cell} is not the identity")]
    VoltageNotFlat { cell: usize },
    #[error("bad voltage assignment: {0}")]
    BadVoltage(String),
    #[error("cover base not supported: {0}")]
    UnsupportedBase(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    F2(#[from] F2Error),
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

/// A permutation of `{0 .. m-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((0..m).collect())
    }

    /// Cyclic shift `s ↦ (s + k) mod m`.
    pub fn shift(m: usize, k: usize) -> Self {
        Permutation((0..m).map(|s| (s + k) % m).collect())
    }

    pub fn new(map: Vec<usize>) -> Result<Self, BuilderError> {
        let m = map.len();
        let mut seen = vec![false; m];
        for &v in &map {
            if v >= m || seen[v] {
                return Err(BuilderError::BadVoltage(format!(
                    "{map:?} is not a permutation of 0..{m}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(map))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, s: usize) -> usize {
        self.0[s]
    }

    /// `self` followed by `other` (i.e. `other ∘ self`).
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&s| other.0[s]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

// ---------------------------------------------------------------------------
// Simplicial complexes
// ---------------------------------------------------------------------------

/// A set of facets (maximal faces) given as vertex-index lists. Normalized
/// on construction: vertices sorted and deduplicated within each facet,
/// facets contained in another facet dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialInput {
    facets: Vec<Vec<usize>>,
}

impl SimplicialInput {
    pub fn new(facets: Vec<Vec<usize>>) -> Self {
        let mut normalized: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .filter(|f| !f.is_empty())
            .collect();
        normalized.sort();
        normalized.dedup();
        let kept: Vec<Vec<usize>> = normalized
            .iter()
            .filter(|f| {
                !normalized
                    .iter()
                    .any(|g| g.len() > f.len() && f.iter().all(|v| g.binary_search(v).is_ok()))
            })
            .cloned()
            .collect();
        SimplicialInput { facets: kept }
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }
}

/// A chain complex together with the vertex list of every cell, kept in
/// the exact order the boundary matrices index them.
#[derive(Clone, Debug)]
pub struct SimplicialComplexData {
    pub complex: ChainComplex,
    /// `cells[d][i]` is the sorted vertex list of the `i`-th `d`-cell.
    pub cells: Vec<Vec<Vec<usize>>>,
}

/// Downward closure of a facet list: generates all faces, sorts each
/// dimension lexicographically, and fills the boundary matrices by the
/// codimension-1 face relation.
pub fn from_facets(input: &SimplicialInput) -> SimplicialComplexData {
    if input.facets.is_empty() {
        return SimplicialComplexData {
            complex: ChainComplex::new(0, vec![0], vec![]).unwrap(),
            cells: vec![vec![]],
        };
    }
    let dim = input.facets.iter().map(|f| f.len() - 1).max().unwrap();
    let mut faces: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); dim + 1];
    for facet in &input.facets {
        let k = facet.len();
        for mask in 1u64..(1 << k) {
            let subset: Vec<usize> = (0..k)
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| facet[b])
                .collect();
            faces[subset.len() - 1].insert(subset);
        }
    }
    let cells: Vec<Vec<Vec<usize>>> = faces
        .into_iter()
        .map(|set| set.into_iter().collect())
        .collect();
    let index: Vec<HashMap<&[usize], usize>> = cells
        .iter()
        .map(|per_dim| {
            per_dim
                .iter()
                .enumerate()
                .map(|(i, c)| (c.as_slice(), i))
                .collect()
        })
        .collect();

    let cell_counts: Vec<usize> = cells.iter().map(Vec::len).collect();
    let mut boundaries = Vec::with_capacity(dim);
    for d in 1..=dim {
        let mut entries = Vec::new();
        for (col, cell) in cells[d].iter().enumerate() {
            for drop in 0..cell.len() {
                let mut face = cell.clone();
                face.remove(drop);
                let row = index[d - 1][face.as_slice()];
                entries.push((row, col));
            }
        }
        boundaries.push(
            F2Matrix::from_entries(cell_counts[d - 1], cell_counts[d], &entries)
                .expect("closure indices are in range"),
        );
    }

    let labels: Vec<Vec<String>> = cells
        .iter()
        .map(|per_dim| {
            per_dim
                .iter()
                .map(|c| {
                    let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                    format!("{{{}}}", parts.join(","))
                })
                .collect()
        })
        .collect();

    let complex = ChainComplex::new(dim, cell_counts, boundaries)
        .expect("closure shapes chain correctly")
        .with_labels(labels)
        .expect("label counts match");
    SimplicialComplexData { complex, cells }
}

// ---------------------------------------------------------------------------
// Polyhedral skeleton (dimension ≤ 2 attaching data)
// ---------------------------------------------------------------------------

/// Traversal direction of an edge inside a face boundary loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeDir {
    Forward,
    Backward,
}

/// Attaching data for a polyhedral complex of dimension ≤ 2: oriented edge
/// endpoints and one closed boundary walk per face.
#[derive(Clone, Debug)]
pub struct Skeleton {
    /// `(tail, head)` per 1-cell.
    pub edge_ends: Vec<(usize, usize)>,
    /// Directed edge walk around each 2-cell.
    pub face_loops: Vec<Vec<(usize, EdgeDir)>>,
}

/// A chain complex of dimension ≤ 2 with its attaching skeleton.
#[derive(Clone, Debug)]
pub struct PolyhedralComplexData {
    pub complex: ChainComplex,
    pub skeleton: Skeleton,
}

/// The standard toric 2-complex: `L × L` vertices on a periodic grid,
/// `2L²` edges (east block then south block), `L²` square faces. Faces are
/// squares, not triangulated, so every face and every vertex meets exactly
/// 4 edges.
pub fn toric_grid(l: usize) -> Result<PolyhedralComplexData, BuilderError> {
    if l < 2 {
        return Err(BuilderError::Degenerate(format!(
            "toric grid needs side length ≥ 2, got {l}"
        )));
    }
    let n = l * l;
    let vid = |r: usize, c: usize| (r % l) * l + (c % l);
    let east = |r: usize, c: usize| (r % l) * l + (c % l);
    let south = |r: usize, c: usize| n + (r % l) * l + (c % l);

    let mut d1_entries = Vec::new();
    let mut edge_ends = Vec::with_capacity(2 * n);
    for r in 0..l {
        for c in 0..l {
            d1_entries.push((vid(r, c), east(r, c)));
            d1_entries.push((vid(r, c + 1), east(r, c)));
        }
    }
    for r in 0..l {
        for c in 0..l {
            d1_entries.push((vid(r, c), south(r, c)));
            d1_entries.push((vid(r + 1, c), south(r, c)));
        }
    }
    for r in 0..l {
        for c in 0..l {
            edge_ends.push((vid(r, c), vid(r, c + 1)));
        }
    }
    for r in 0..l {
        for c in 0..l {
            edge_ends.push((vid(r, c), vid(r + 1, c)));
        }
    }

    let mut d2_entries = Vec::new();
    let mut face_loops = Vec::with_capacity(n);
    for r in 0..l {
        for c in 0..l {
            let face = r * l + c;
            for e in [east(r, c), south(r, c + 1), east(r + 1, c), south(r, c)] {
                d2_entries.push((e, face));
            }
            face_loops.push(vec![
                (east(r, c), EdgeDir::Forward),
                (south(r, c + 1), EdgeDir::Forward),
                (east(r + 1, c), EdgeDir::Backward),
                (south(r, c), EdgeDir::Backward),
            ]);
        }
    }

    let d1 = F2Matrix::from_entries(n, 2 * n, &d1_entries)?;
    let d2 = F2Matrix::from_entries(2 * n, n, &d2_entries)?;
    let mut labels = vec![Vec::new(), Vec::new(), Vec::new()];
    for r in 0..l {
        for c in 0..l {
            labels[0].push(format!("v({r},{c})"));
        }
    }
    for r in 0..l {
        for c in 0..l {
            labels[1].push(format!("E({r},{c})"));
        }
    }
    for r in 0..l {
        for c in 0..l {
            labels[1].push(format!("S({r},{c})"));
        }
    }
    for r in 0..l {
        for c in 0..l {
            labels[2].push(format!("f({r},{c})"));
        }
    }
    let complex = ChainComplex::new(2, vec![n, 2 * n, n], vec![d1, d2])?.with_labels(labels)?;
    Ok(PolyhedralComplexData {
        complex,
        skeleton: Skeleton {
            edge_ends,
            face_loops,
        },
    })
}

/// A cycle graph with `n ≥ 2` vertices and `n` edges (edge `i` runs from
/// vertex `i` to vertex `i+1 mod n`). `n = 1` would need a loop edge, whose
/// mod-2 boundary degenerates, so it is disallowed.
pub fn circle(n: usize) -> Result<PolyhedralComplexData, BuilderError> {
    if n < 2 {
        return Err(BuilderError::Degenerate(format!(
            "circle needs at least 2 vertices, got {n}"
        )));
    }
    let mut entries = Vec::new();
    let mut edge_ends = Vec::new();
    for i in 0..n {
        entries.push((i, i));
        entries.push(((i + 1) % n, i));
        edge_ends.push((i, (i + 1) % n));
    }
    let d1 = F2Matrix::from_entries(n, n, &entries)?;
    let labels = vec![
        (0..n).map(|i| format!("v{i}")).collect(),
        (0..n).map(|i| format!("e{i}")).collect(),
    ];
    let complex = ChainComplex::new(1, vec![n, n], vec![d1])?.with_labels(labels)?;
    Ok(PolyhedralComplexData {
        complex,
        skeleton: Skeleton {
            edge_ends,
            face_loops: vec![],
        },
    })
}

// ---------------------------------------------------------------------------
// Poincaré dual
// ---------------------------------------------------------------------------

/// The dual complex `X'` of a closed pseudomanifold, together with the
/// index bijection: the `k`-cells of `X'` are the `(D−k)`-cells of `X`,
/// matched identically by index, and `∂'_k = ∂_{D−k+1}ᵀ`, so the duality
/// identity `P(δ_i α) = ∂'_{D−i}(P α)` holds as a matrix equation.
#[derive(Clone, Debug)]
pub struct DualComplex {
    pub complex: ChainComplex,
}

impl DualComplex {
    /// Maps a dual `k`-cell index back to its primal `(D−k)`-cell index.
    pub fn primal_cell(&self, dual_dim: usize, index: usize) -> (usize, usize) {
        (self.complex.dim() - dual_dim, index)
    }
}

/// Dualizes a valid complex that is a closed pseudomanifold at chain level
/// (every `(D−1)`-cell lies in exactly two `D`-cells; this is checked).
pub fn dualize(x: &ChainComplex) -> Result<DualComplex, BuilderError> {
    x.ensure_valid()?;
    let d = x.dim();
    if d >= 1 {
        let top = x.boundary(d).expect("dim ≥ 1 has a top boundary");
        for cell in 0..top.rows() {
            let count = top.row(cell).weight();
            if count != 2 {
                return Err(BuilderError::NotPseudomanifold {
                    cell,
                    dim: d - 1,
                    count,
                });
            }
        }
    }
    let dual = x.cochain_complex()?;
    for i in 0..d {
        debug_assert_eq!(
            dual.boundary(d - i).cloned().unwrap(),
            x.coboundary(i),
            "duality identity must hold by construction"
        );
    }
    Ok(DualComplex { complex: dual })
}

// ---------------------------------------------------------------------------
// Voltage covers
// ---------------------------------------------------------------------------

/// A degree-`m` cover description: one permutation of `{0 .. m-1}` per
/// oriented 1-cell of the base (in the 1-cell's stored orientation;
/// traversing an edge backwards applies the inverse).
#[derive(Clone, Debug)]
pub struct VoltageCover {
    pub sheets: usize,
    pub voltages: Vec<Permutation>,
}

impl VoltageCover {
    pub fn trivial(sheets: usize, edges: usize) -> Self {
        VoltageCover {
            sheets,
            voltages: vec![Permutation::identity(sheets); edges],
        }
    }

    fn check_shape(&self, edges: usize) -> Result<(), BuilderError> {
        if self.sheets == 0 {
            return Err(BuilderError::BadVoltage("sheet count must be ≥ 1".into()));
        }
        if self.voltages.len() != edges {
            return Err(BuilderError::BadVoltage(format!(
                "voltage list has length {}, base has {} edges",
                self.voltages.len(),
                edges
            )));
        }
        for (e, p) in self.voltages.iter().enumerate() {
            if p.degree() != self.sheets {
                return Err(BuilderError::BadVoltage(format!(
                    "voltage on edge {e} permutes {} sheets, expected {}",
                    p.degree(),
                    self.sheets
                )));
            }
        }
        Ok(())
    }
}

/// A base that carries enough attaching structure to lift along voltages.
#[derive(Clone, Copy, Debug)]
pub enum CoverBase<'a> {
    Simplicial(&'a SimplicialComplexData),
    Polyhedral(&'a PolyhedralComplexData),
}

impl CoverBase<'_> {
    pub fn complex(&self) -> &ChainComplex {
        match self {
            CoverBase::Simplicial(s) => &s.complex,
            CoverBase::Polyhedral(p) => &p.complex,
        }
    }

    pub fn edge_ends(&self) -> Vec<(usize, usize)> {
        match self {
            CoverBase::Simplicial(s) => s.cells[1].iter().map(|e| (e[0], e[1])).collect(),
            CoverBase::Polyhedral(p) => p.skeleton.edge_ends.clone(),
        }
    }
}

/// Per-dimension, per-cell boundary lists with sheet-transfer
/// permutations from the cell's anchor to each boundary cell's anchor.
type IncidenceTable = Vec<Vec<Vec<(usize, Permutation)>>>;

/// A built cover: `m · n_d` cells per dimension, ordered `(cell, sheet)`
/// lexicographically, so cover cell `c·m + s` projects to base cell `c`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub complex: ChainComplex,
    pub sheets: usize,
}

impl Cover {
    /// Base cell under the covering projection.
    pub fn project(&self, _dim: usize, cover_index: usize) -> usize {
        cover_index / self.sheets
    }

    /// The projection as a chain map `C_d(cover) → C_d(base)`.
    pub fn projection_matrix(&self, dim: usize) -> F2Matrix {
        let cover_cells = self.complex.cells(dim);
        let base_cells = cover_cells / self.sheets;
        let entries: Vec<(usize, usize)> =
            (0..cover_cells).map(|j| (j / self.sheets, j)).collect();
        F2Matrix::from_entries(base_cells, cover_cells, &entries)
            .expect("projection entries in range")
    }
}

/// Builds the degree-`m` cover of a base along a voltage assignment.
///
/// Every 2-cell must be flat (voltage product around its boundary equal to
/// the identity); the first violated cell is named in the error. The cover
/// has `m` lifts of every cell and its boundary commutes with projection.
pub fn build_cover(base: CoverBase<'_>, v: &VoltageCover) -> Result<Cover, BuilderError> {
    let x = base.complex();
    x.ensure_valid()?;
    v.check_shape(x.cells(1))?;
    let m = v.sheets;

    let incidences: IncidenceTable = match base {
        CoverBase::Simplicial(data) => simplicial_incidences(data, v)?,
        CoverBase::Polyhedral(data) => polyhedral_incidences(data, v)?,
    };

    let mut boundaries = Vec::with_capacity(x.dim());
    for (d, per_cell) in incidences.iter().enumerate().skip(1) {
        let rows = x.cells(d - 1) * m;
        let cols = x.cells(d) * m;
        let mut entries = Vec::new();
        for (c, cell_incidences) in per_cell.iter().enumerate() {
            for (b, transfer) in cell_incidences {
                for s in 0..m {
                    entries.push((b * m + transfer.apply(s), c * m + s));
                }
            }
        }
        boundaries.push(F2Matrix::from_entries(rows, cols, &entries)?);
    }

    let cell_counts: Vec<usize> = x.cell_counts().iter().map(|&n| n * m).collect();
    let mut complex = ChainComplex::new(x.dim(), cell_counts, boundaries)?;
    if let Some(labels) = x.labels() {
        let lifted: Vec<Vec<String>> = labels
            .iter()
            .map(|per_dim| {
                per_dim
                    .iter()
                    .flat_map(|l| (0..m).map(move |s| format!("{l}@{s}")))
                    .collect()
            })
            .collect();
        complex = complex.with_labels(lifted)?;
    }
    Ok(Cover { complex, sheets: m })
}

/// Simplicial lifting: the anchor of a cell is its minimal vertex; the
/// transfer to a facet's anchor is the voltage along the direct edge
/// between the two anchors (the closure guarantees that edge exists).
fn simplicial_incidences(
    data: &SimplicialComplexData,
    v: &VoltageCover,
) -> Result<IncidenceTable, BuilderError> {
    let x = &data.complex;
    let dim = x.dim();
    let mut index: Vec<HashMap<&[usize], usize>> = Vec::new();
    for per_dim in &data.cells {
        index.push(
            per_dim
                .iter()
                .enumerate()
                .map(|(i, c)| (c.as_slice(), i))
                .collect(),
        );
    }
    let edge_index = |u: usize, w: usize| -> usize {
        let key = if u < w { [u, w] } else { [w, u] };
        index[1][&key[..]]
    };
    // voltage along the oriented edge u → w (1-cells are stored min → max)
    let voltage = |u: usize, w: usize| -> Permutation {
        let e = edge_index(u, w);
        if u < w {
            v.voltages[e].clone()
        } else {
            v.voltages[e].inverse()
        }
    };

    // flatness: for every 2-cell {a < b < c}, going a → b → c must agree
    // with the direct edge a → c
    if dim >= 2 {
        for (cell, tri) in data.cells[2].iter().enumerate() {
            let (a, b, c) = (tri[0], tri[1], tri[2]);
            if voltage(a, b).then(&voltage(b, c)) != voltage(a, c) {
                return Err(BuilderError::VoltageNotFlat { cell });
            }
        }
    }

    let mut incidences = vec![Vec::new()];
    for d in 1..=dim {
        let mut per_dim = Vec::with_capacity(x.cells(d));
        for cell in &data.cells[d] {
            let mut list = Vec::with_capacity(cell.len());
            for drop in 0..cell.len() {
                let mut face = cell.clone();
                face.remove(drop);
                let b = index[d - 1][face.as_slice()];
                let transfer = if d == 1 {
                    // faces of edge {u, w} are its vertices: w is reached by
                    // the edge voltage, u anchors the edge itself
                    if drop == 0 {
                        v.voltages[index[1][cell.as_slice()]].clone()
                    } else {
                        Permutation::identity(v.sheets)
                    }
                } else if drop == 0 {
                    voltage(cell[0], cell[1])
                } else {
                    Permutation::identity(v.sheets)
                };
                list.push((b, transfer));
            }
            per_dim.push(list);
        }
        incidences.push(per_dim);
    }
    Ok(incidences)
}

/// Polyhedral lifting (dimension ≤ 2): edges lift by their stored voltage;
/// faces lift by walking their boundary loop and propagating sheets.
fn polyhedral_incidences(
    data: &PolyhedralComplexData,
    v: &VoltageCover,
) -> Result<IncidenceTable, BuilderError> {
    let x = &data.complex;
    if x.dim() > 2 {
        return Err(BuilderError::UnsupportedBase(format!(
            "polyhedral cover bases must have dimension ≤ 2, got {}",
            x.dim()
        )));
    }
    let ends = &data.skeleton.edge_ends;
    if ends.len() != x.cells(1) {
        return Err(BuilderError::UnsupportedBase(
            "skeleton edge count does not match complex".into(),
        ));
    }

    let mut incidences = vec![Vec::new()];
    let mut edge_inc = Vec::with_capacity(x.cells(1));
    for (e, &(tail, head)) in ends.iter().enumerate() {
        edge_inc.push(vec![
            (tail, Permutation::identity(v.sheets)),
            (head, v.voltages[e].clone()),
        ]);
    }
    incidences.push(edge_inc);

    if x.dim() == 2 {
        if data.skeleton.face_loops.len() != x.cells(2) {
            return Err(BuilderError::UnsupportedBase(
                "skeleton face count does not match complex".into(),
            ));
        }
        let mut face_inc = Vec::with_capacity(x.cells(2));
        for (cell, walk) in data.skeleton.face_loops.iter().enumerate() {
            if walk.is_empty() {
                return Err(BuilderError::UnsupportedBase(format!(
                    "face {cell} has an empty boundary loop"
                )));
            }
            let mut list = Vec::with_capacity(walk.len());
            let start = match walk[0] {
                (e, EdgeDir::Forward) => ends[e].0,
                (e, EdgeDir::Backward) => ends[e].1,
            };
            let mut at = start;
            let mut carry = Permutation::identity(v.sheets);
            for &(e, dir) in walk {
                match dir {
                    EdgeDir::Forward => {
                        if ends[e].0 != at {
                            return Err(BuilderError::UnsupportedBase(format!(
                                "boundary loop of face {cell} is not a closed walk"
                            )));
                        }
                        list.push((e, carry.clone()));
                        carry = carry.then(&v.voltages[e]);
                        at = ends[e].1;
                    }
                    EdgeDir::Backward => {
                        if ends[e].1 != at {
                            return Err(BuilderError::UnsupportedBase(format!(
                                "boundary loop of face {cell} is not a closed walk"
                            )));
                        }
                        carry = carry.then(&v.voltages[e].inverse());
                        list.push((e, carry.clone()));
                        at = ends[e].0;
                    }
                }
            }
            if at != start || !carry.is_identity() {
                return Err(BuilderError::VoltageNotFlat { cell });
            }
            face_inc.push(list);
        }
        incidences.push(face_inc);
    }
    Ok(incidences)
}

/// Flat voltages on a toric grid from a pair of cyclic shifts: all east
/// edges carry `shift^p`, all south edges carry `shift^q`. Shift powers
/// commute, so every face is flat.
pub fn toric_cyclic_voltages(l: usize, m: usize, p: usize, q: usize) -> VoltageCover {
    let n = l * l;
    let mut voltages = Vec::with_capacity(2 * n);
    for _ in 0..n {
        voltages.push(Permutation::shift(m, p));
    }
    for _ in 0..n {
        voltages.push(Permutation::shift(m, q));
    }
    VoltageCover { sheets: m, voltages }
}

/// Relabels sheets independently over each vertex: the voltage on edge
/// `u → w` becomes `ρ_w ∘ σ ∘ ρ_u⁻¹`. Flatness is preserved and the cover
/// is isomorphic to the original.
pub fn gauge_transform(
    edge_ends: &[(usize, usize)],
    v: &VoltageCover,
    gauge: &[Permutation],
) -> VoltageCover {
    let voltages = edge_ends
        .iter()
        .zip(&v.voltages)
        .map(|(&(tail, head), sigma)| gauge[tail].inverse().then(sigma).then(&gauge[head]))
        .collect();
    VoltageCover {
        sheets: v.sheets,
        voltages,
    }
}

/// Facet lists for the 7-vertex (Möbius) torus triangulation.
pub fn seven_vertex_torus_facets() -> Vec<Vec<usize>> {
    let mut facets = Vec::new();
    for i in 0..7usize {
        facets.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        facets.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    facets
}
