//! CSS codes of chain complexes and their parameters.
//!
//! The degree-`i` code of a complex is the pair of orthogonal generator
//! sets `W1` (columns of `∂_{i+1}`, spanning the boundaries `B_i`) and `W2`
//! (columns of `∂_iᵀ`, spanning the coboundaries `B^i`). Its length is
//! `n = n_i`, its dimension is `k = n − dim W1 − dim W2 = b_i`, and its
//! distance is the minimum weight over nontrivial cycle classes and
//! nontrivial cocycle classes:
//!
//! `d = min { wt(α) : α ∈ (Z_i ∖ B_i) ∪ (Z^i ∖ B^i) }`.
//!
//! Two search engines compute minimum weights. The exact engine walks all
//! `2^{dim Z}` kernel combinations with a Gray code and refuses kernels
//! above a caller-supplied budget. The bounded engine enumerates supports
//! of weight ≤ `w_max` in colex order with syndrome pruning, finishing
//! each weight class through a column lookup table; a witness at weight
//! `w` certifies `d = w` exactly because all smaller weights were
//! exhausted first. For `k = 0` there is no nontrivial class and the
//! distance is undefined: that is an error, not a sentinel.

use std::cmp::Ordering;
use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ChainComplex, ComplexError};
use crate::f2linalg::{self, F2Matrix, F2Vector, RowSpace};

/// Default cap on the enumerable kernel dimension for the exact engine
/// (2^26 Gray-code steps, seconds at desk scale).
pub const DEFAULT_EXACT_BUDGET: usize = 26;

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("degree {degree} out of range for complex of dimension {dim}")]
    InvalidDegree { degree: usize, dim: usize },
    #[error("kernel dimension {dim} on the {side} side exceeds the enumeration budget {budget}")]
    BudgetExceeded {
        side: &'static str,
        dim: usize,
        budget: usize,
    },
    #[error("no nontrivial class: k = 0, distance undefined")]
    NoNontrivialClass,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    F2(#[from] f2linalg::F2Error),
}

/// Exact distance, or the certified interval left by a bounded search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Distance {
    #[serde(rename = "exact")]
    Exact(usize),
    #[serde(untagged)]
    Interval { lo: usize, hi: usize },
}

impl Distance {
    pub fn lo(&self) -> usize {
        match *self {
            Distance::Exact(d) => d,
            Distance::Interval { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> usize {
        match *self {
            Distance::Exact(d) => d,
            Distance::Interval { hi, .. } => hi,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Distance::Exact(_))
    }
}

/// Parameters `[[n, k, d]]` of a code, with the derived rate `k/n`,
/// normalized distance `d/n` and the quantity `k·d²/n`. Interval distances
/// propagate to intervals in the derived fields.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: Distance,
    pub rate: f64,
    pub delta: Bracket,
    pub zemor: Bracket,
    /// Support of the minimum-weight witness, when the distance is exact.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

/// A derived quantity that is a point value for exact distances and a
/// closed interval for bounded ones.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub enum Bracket {
    #[serde(rename = "exact")]
    Exact(f64),
    #[serde(untagged)]
    Interval { lo: f64, hi: f64 },
}

impl CodeParams {
    fn derive(n: usize, k: usize, d: Distance, witness: Option<Vec<usize>>) -> Self {
        let nf = n as f64;
        let delta = |d: usize| d as f64 / nf;
        let zemor = |d: usize| k as f64 * (d * d) as f64 / nf;
        let (delta, zemor) = match d {
            Distance::Exact(v) => (Bracket::Exact(delta(v)), Bracket::Exact(zemor(v))),
            Distance::Interval { lo, hi } => (
                Bracket::Interval {
                    lo: delta(lo),
                    hi: delta(hi),
                },
                Bracket::Interval {
                    lo: zemor(lo),
                    hi: zemor(hi),
                },
            ),
        };
        CodeParams {
            n,
            k,
            d,
            rate: k as f64 / nf,
            delta,
            zemor,
            witness,
        }
    }
}

/// The CSS code `(B_i, B^i)` of a chain complex in a fixed degree.
#[derive(Clone, Debug)]
pub struct CssCode {
    n: usize,
    degree: usize,
    /// Generators of `B_i`: columns of `∂_{i+1}`.
    w1: Vec<F2Vector>,
    /// Generators of `B^i`: columns of `∂_iᵀ`.
    w2: Vec<F2Vector>,
    /// `∂_i`, the check whose kernel is the cycle space `Z_i`.
    cycle_check: F2Matrix,
    /// `δ_i = ∂_{i+1}ᵀ`, the check whose kernel is the cocycle space `Z^i`.
    cocycle_check: F2Matrix,
}

impl CssCode {
    /// Builds the degree-`i` code of a valid complex. `W1` is empty when
    /// `i = D` and `W2` is empty when `i = 0`; the generators of the two
    /// sides are mutually orthogonal because `∂_i ∘ ∂_{i+1} = 0`.
    pub fn build(x: &ChainComplex, degree: usize) -> Result<Self, CodeError> {
        if degree > x.dim() {
            return Err(CodeError::InvalidDegree {
                degree,
                dim: x.dim(),
            });
        }
        x.ensure_valid()?;
        let n = x.cells(degree);
        let cycle_check = x.boundary_or_zero(degree);
        let up = x.boundary_or_zero(degree + 1);
        let cocycle_check = up.transpose();
        let w1 = up.columns();
        let w2 = cycle_check.transpose().columns();
        debug_assert!(w1
            .iter()
            .all(|a| w2.iter().all(|b| !a.dot(b))));
        Ok(CssCode {
            n,
            degree,
            w1,
            w2,
            cycle_check,
            cocycle_check,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn w1(&self) -> &[F2Vector] {
        &self.w1
    }

    pub fn w2(&self) -> &[F2Vector] {
        &self.w2
    }

    /// `k = n − dim W1 − dim W2`; equals the Betti number `b_i` of the
    /// source complex.
    pub fn code_dimension(&self) -> usize {
        let r1 = RowSpace::from_rows(&self.w1).rank();
        let r2 = RowSpace::from_rows(&self.w2).rank();
        self.n - r1 - r2
    }

    /// Maximum generator weight over both sides: the locality figure that
    /// stays fixed along covers of a fixed base complex.
    pub fn ldpc_weight(&self) -> usize {
        self.w1
            .iter()
            .chain(&self.w2)
            .map(F2Vector::weight)
            .max()
            .unwrap_or(0)
    }

    /// Exact distance by full kernel enumeration on both sides. Refuses
    /// when either kernel dimension exceeds `budget`.
    pub fn distance_exact(&self, budget: usize) -> Result<CodeParams, CodeError> {
        let k = self.code_dimension();
        if k == 0 {
            return Err(CodeError::NoNontrivialClass);
        }
        let cycle = min_weight_exact(&self.cycle_check, &self.w1, budget, "cycle")?;
        let cocycle = min_weight_exact(&self.cocycle_check, &self.w2, budget, "cocycle")?;
        let (d, witness) = pick_min(cycle, cocycle);
        Ok(CodeParams::derive(
            self.n,
            k,
            Distance::Exact(d),
            Some(witness.support()),
        ))
    }

    /// Bounded-weight search on both sides: exact if a witness of weight
    /// ≤ `w_max` exists (all smaller weights are exhausted first),
    /// otherwise the interval `[w_max + 1, n]`.
    pub fn distance_bounded(&self, w_max: usize) -> Result<CodeParams, CodeError> {
        let k = self.code_dimension();
        if k == 0 {
            return Err(CodeError::NoNontrivialClass);
        }
        let cycle = min_weight_bounded(&self.cycle_check, &self.w1, w_max);
        let cocycle = min_weight_bounded(&self.cocycle_check, &self.w2, w_max);
        let best = match (cycle, cocycle) {
            (Some(a), Some(b)) => Some(pick_min(a, b)),
            (a, b) => a.or(b),
        };
        Ok(match best {
            Some((d, witness)) => CodeParams::derive(
                self.n,
                k,
                Distance::Exact(d),
                Some(witness.support()),
            ),
            None => CodeParams::derive(
                self.n,
                k,
                Distance::Interval {
                    lo: w_max + 1,
                    hi: self.n,
                },
                None,
            ),
        })
    }
}

fn pick_min(a: (usize, F2Vector), b: (usize, F2Vector)) -> (usize, F2Vector) {
    match a.0.cmp(&b.0) {
        Ordering::Less => a,
        Ordering::Greater => b,
        Ordering::Equal => {
            if a.1.cmp_support(&b.1) == Ordering::Greater {
                b
            } else {
                a
            }
        }
    }
}

/// Minimum weight of a homologically nontrivial `i`-cycle: the cycle side
/// of the distance only, with the same enumeration engine and budget.
pub fn combinatorial_systole(
    x: &ChainComplex,
    degree: usize,
    budget: usize,
) -> Result<(usize, F2Vector), CodeError> {
    let code = CssCode::build(x, degree)?;
    let betti = x.homology()?.betti[degree];
    if betti == 0 {
        return Err(CodeError::NoNontrivialClass);
    }
    min_weight_exact(&code.cycle_check, &code.w1, budget, "cycle")
}

/// Bounded-search variant of [`combinatorial_systole`] for kernels past
/// the exact budget; `None` when no witness of weight ≤ `w_max` exists.
pub fn combinatorial_systole_bounded(
    x: &ChainComplex,
    degree: usize,
    w_max: usize,
) -> Result<Option<(usize, F2Vector)>, CodeError> {
    let code = CssCode::build(x, degree)?;
    let betti = x.homology()?.betti[degree];
    if betti == 0 {
        return Err(CodeError::NoNontrivialClass);
    }
    Ok(min_weight_bounded(&code.cycle_check, &code.w1, w_max))
}

/// Minimum weight over `ker(check) ∖ span(gens)` by full enumeration:
/// the kernel splits as span(B) ⊕ span(H) where B is an echelon basis of
/// the generator span and H extends it to the kernel; every nontrivial
/// class element is `h + b` with `h ≠ 0`, so the walk below visits each
/// exactly once, Gray-coding both factors.
fn min_weight_exact(
    check: &F2Matrix,
    gens: &[F2Vector],
    budget: usize,
    side: &'static str,
) -> Result<(usize, F2Vector), CodeError> {
    // Gray codes below are u64 masks, so 62 is the hard ceiling no matter
    // what budget the caller asks for
    let budget = budget.min(62);
    let kernel = f2linalg::kernel_basis(check);
    if kernel.len() > budget {
        return Err(CodeError::BudgetExceeded {
            side,
            dim: kernel.len(),
            budget,
        });
    }
    let mut span = RowSpace::new();
    let mut b_basis: Vec<F2Vector> = Vec::new();
    for g in gens {
        if span.insert(g.clone()) {
            b_basis.push(g.clone());
        }
    }
    let mut h_basis: Vec<F2Vector> = Vec::new();
    for v in &kernel {
        if span.insert(v.clone()) {
            h_basis.push(v.clone());
        }
    }
    if h_basis.is_empty() {
        return Err(CodeError::NoNontrivialClass);
    }

    let mut best: Option<(usize, F2Vector)> = None;
    let mut h = F2Vector::zeros(check.cols());
    for hcode in 1u64..(1u64 << h_basis.len()) {
        h.xor_assign(&h_basis[hcode.trailing_zeros() as usize]);
        let mut candidate = h.clone();
        consider(&mut best, &candidate);
        for bcode in 1u64..(1u64 << b_basis.len()) {
            candidate.xor_assign(&b_basis[bcode.trailing_zeros() as usize]);
            consider(&mut best, &candidate);
        }
    }
    Ok(best.expect("nonempty class set"))
}

fn consider(best: &mut Option<(usize, F2Vector)>, candidate: &F2Vector) {
    let w = candidate.weight();
    match best {
        Some((bw, bv)) => {
            if w < *bw || (w == *bw && candidate.cmp_support(bv) == Ordering::Less) {
                *best = Some((w, candidate.clone()));
            }
        }
        None => *best = Some((w, candidate.clone())),
    }
}

/// Minimum weight over `ker(check) ∖ span(gens)` among vectors of weight
/// ≤ `w_max`. Weight classes run in increasing order; inside a class,
/// supports are enumerated in colex order (largest index outermost) with
/// two prunes: a partial syndrome heavier than the remaining slots times
/// the densest column is cut, and the last slot is resolved through an
/// exact column lookup instead of a scan. Work is partitioned over the
/// leading support element; ties are resolved globally afterwards, so the
/// reported witness does not depend on the parallel schedule.
fn min_weight_bounded(
    check: &F2Matrix,
    gens: &[F2Vector],
    w_max: usize,
) -> Option<(usize, F2Vector)> {
    let n = check.cols();
    let columns = check.columns();
    let span = RowSpace::from_rows(gens);
    let max_col_weight = columns.iter().map(F2Vector::weight).max().unwrap_or(0);

    let mut lookup: HashMap<&[u64], Vec<usize>> = HashMap::new();
    for (j, col) in columns.iter().enumerate() {
        lookup.entry(col.words()).or_default().push(j);
    }

    for w in 1..=w_max.min(n) {
        let per_leading: Vec<Option<(usize, F2Vector)>> = ((w - 1)..n)
            .into_par_iter()
            .map(|lead| {
                let mut best: Option<(usize, F2Vector)> = None;
                let mut stack = Vec::with_capacity(w);
                stack.push(lead);
                descend(
                    &columns[lead].clone(),
                    lead,
                    w - 1,
                    &mut stack,
                    &SearchCtx {
                        n,
                        columns: &columns,
                        lookup: &lookup,
                        span: &span,
                        max_col_weight,
                    },
                    &mut best,
                );
                stack.pop();
                best
            })
            .collect();
        let mut best: Option<(usize, F2Vector)> = None;
        for hit in per_leading.into_iter().flatten() {
            consider(&mut best, &hit.1);
        }
        if best.is_some() {
            return best;
        }
    }
    None
}

struct SearchCtx<'a> {
    n: usize,
    columns: &'a [F2Vector],
    lookup: &'a HashMap<&'a [u64], Vec<usize>>,
    span: &'a RowSpace,
    max_col_weight: usize,
}

fn descend(
    syndrome: &F2Vector,
    bound: usize,
    remaining: usize,
    stack: &mut Vec<usize>,
    ctx: &SearchCtx<'_>,
    best: &mut Option<(usize, F2Vector)>,
) {
    if remaining == 0 {
        if syndrome.is_zero() {
            record_candidate(stack, ctx, best);
        }
        return;
    }
    if syndrome.weight() > remaining * ctx.max_col_weight {
        return;
    }
    if remaining == 1 {
        // the final column must cancel the syndrome exactly
        if let Some(matches) = ctx.lookup.get(syndrome.words()) {
            for &j in matches {
                if j >= bound {
                    break;
                }
                stack.push(j);
                record_candidate(stack, ctx, best);
                stack.pop();
            }
        }
        return;
    }
    for j in (remaining - 1..bound).rev() {
        let next = syndrome.xor(&ctx.columns[j]);
        stack.push(j);
        descend(&next, j, remaining - 1, stack, ctx, best);
        stack.pop();
    }
}

fn record_candidate(stack: &[usize], ctx: &SearchCtx<'_>, best: &mut Option<(usize, F2Vector)>) {
    let v = F2Vector::from_toggles(ctx.n, stack).expect("support indices in range");
    if !ctx.span.contains(&v) {
        consider(best, &v);
    }
}

/// One row of the `k·d²/n` report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ZemorRow {
    pub n: usize,
    pub k: usize,
    pub d: Distance,
    pub ratio: Bracket,
    /// `log_n(k d²)`; the exponent that a `k d² = n^e` family would have.
    pub exponent: Bracket,
    /// Whether `k d² ≥ n^{1+epsilon}` at the configured epsilon.
    pub exceeds: bool,
}

/// Tabulates `k·d²/n` and `log_n(k·d²)` for a list of code parameters,
/// flagging rows with `k d² ≥ n^{1+epsilon}`. Intervals propagate; the
/// flag uses the interval lower end, so it never fires speculatively.
pub fn zemor_report(params: &[CodeParams], epsilon: f64) -> Vec<ZemorRow> {
    params
        .iter()
        .map(|p| {
            let nf = p.n as f64;
            let kd2 = |d: usize| p.k as f64 * (d * d) as f64;
            let expo = |d: usize| {
                if p.n > 1 && p.k > 0 && d > 0 {
                    kd2(d).ln() / nf.ln()
                } else {
                    f64::NEG_INFINITY
                }
            };
            let (ratio, exponent, exceeds) = match p.d {
                Distance::Exact(d) => (
                    Bracket::Exact(kd2(d) / nf),
                    Bracket::Exact(expo(d)),
                    kd2(d) >= nf.powf(1.0 + epsilon),
                ),
                Distance::Interval { lo, hi } => (
                    Bracket::Interval {
                        lo: kd2(lo) / nf,
                        hi: kd2(hi) / nf,
                    },
                    Bracket::Interval {
                        lo: expo(lo),
                        hi: expo(hi),
                    },
                    kd2(lo) >= nf.powf(1.0 + epsilon),
                ),
            };
            ZemorRow {
                n: p.n,
                k: p.k,
                d: p.d,
                ratio,
                exponent,
                exceeds,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{self, SimplicialInput};

    fn toric(l: usize) -> ChainComplex {
        builders::toric_grid(l).unwrap().complex
    }

    fn tetrahedron() -> ChainComplex {
        builders::from_facets(&SimplicialInput::new(vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
        ]))
        .complex
    }

    #[test]
    fn toric_l2_code_shape() {
        let code = CssCode::build(&toric(2), 1).unwrap();
        assert_eq!(code.n(), 8);
        assert_eq!(code.w1().len(), 4);
        assert_eq!(code.w2().len(), 4);
        for a in code.w1() {
            for b in code.w2() {
                assert!(!a.dot(b));
            }
        }
    }

    #[test]
    fn degree_zero_code_has_empty_w2_and_k_equals_b0() {
        let x = toric(2);
        let code = CssCode::build(&x, 0).unwrap();
        assert!(code.w2().is_empty());
        assert_eq!(code.code_dimension(), x.homology().unwrap().betti[0]);
    }

    #[test]
    fn invalid_degree_is_rejected() {
        assert!(matches!(
            CssCode::build(&toric(2), 3),
            Err(CodeError::InvalidDegree { .. })
        ));
    }

    #[test]
    fn code_dimension_matches_betti() {
        for (x, i, expected) in [
            (toric(3), 1usize, 2usize),
            (tetrahedron(), 1, 0),
            (toric(2), 2, 1),
        ] {
            let code = CssCode::build(&x, i).unwrap();
            assert_eq!(code.code_dimension(), expected);
            assert_eq!(code.code_dimension(), x.homology().unwrap().betti[i]);
        }
    }

    #[test]
    fn four_torus_degree_two_dimension() {
        let t = toric(2);
        let four = t.tensor_product(&t).unwrap();
        let code = CssCode::build(&four, 2).unwrap();
        assert_eq!(code.n(), 96);
        assert_eq!(code.code_dimension(), 6);
    }

    /// Naive oracle: scan all 2^n vectors, checking the kernel and span
    /// conditions by definition.
    fn distance_by_naive_scan(x: &ChainComplex, i: usize) -> usize {
        let code = CssCode::build(x, i).unwrap();
        let n = code.n();
        assert!(n <= 16);
        let sides = [
            (&code.cycle_check, &code.w1),
            (&code.cocycle_check, &code.w2),
        ];
        let mut best = usize::MAX;
        for (check, gens) in sides {
            let span = RowSpace::from_rows(gens.iter());
            for mask in 1u64..(1 << n) {
                let mut v = F2Vector::zeros(n);
                for b in 0..n {
                    if mask >> b & 1 == 1 {
                        v.flip(b);
                    }
                }
                if check.mul_vec(&v).unwrap().is_zero() && !span.contains(&v) {
                    best = best.min(v.weight());
                }
            }
        }
        best
    }

    #[test]
    fn toric_l2_distance_matches_naive_scan() {
        let x = toric(2);
        assert_eq!(distance_by_naive_scan(&x, 1), 2);
        let code = CssCode::build(&x, 1).unwrap();
        let exact = code.distance_exact(DEFAULT_EXACT_BUDGET).unwrap();
        assert_eq!(exact.d, Distance::Exact(2));
        let bounded = code.distance_bounded(4).unwrap();
        assert_eq!(bounded.d, Distance::Exact(2));
        assert_eq!(exact.witness, bounded.witness);
    }

    #[test]
    fn toric_l3_distance_is_three() {
        let code = CssCode::build(&toric(3), 1).unwrap();
        let exact = code.distance_exact(DEFAULT_EXACT_BUDGET).unwrap();
        assert_eq!(exact.d, Distance::Exact(3));
        // bounded search at the same cap certifies exactness
        assert_eq!(code.distance_bounded(3).unwrap().d, Distance::Exact(3));
        // a cap below the distance leaves an interval
        assert_eq!(
            code.distance_bounded(2).unwrap().d,
            Distance::Interval { lo: 3, hi: 18 }
        );
    }

    #[test]
    fn budget_refusal_names_the_kernel_dimension() {
        let code = CssCode::build(&toric(3), 1).unwrap();
        match code.distance_exact(3) {
            Err(CodeError::BudgetExceeded { dim, budget, .. }) => {
                assert_eq!(budget, 3);
                assert!(dim > 3);
            }
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn sphere_code_has_no_nontrivial_class() {
        let code = CssCode::build(&tetrahedron(), 1).unwrap();
        assert_eq!(code.code_dimension(), 0);
        assert!(matches!(
            code.distance_exact(DEFAULT_EXACT_BUDGET),
            Err(CodeError::NoNontrivialClass)
        ));
        assert!(matches!(
            code.distance_bounded(3),
            Err(CodeError::NoNontrivialClass)
        ));
    }

    #[test]
    fn systole_of_torus_and_sphere_top_class() {
        let (w, _) = combinatorial_systole(&toric(3), 1, DEFAULT_EXACT_BUDGET).unwrap();
        assert_eq!(w, 3);
        // the only nontrivial 2-cycle of the sphere is the whole surface
        let (w, witness) = combinatorial_systole(&tetrahedron(), 2, DEFAULT_EXACT_BUDGET).unwrap();
        assert_eq!(w, 4);
        assert_eq!(witness.support(), vec![0, 1, 2, 3]);
        assert!(matches!(
            combinatorial_systole(&tetrahedron(), 1, DEFAULT_EXACT_BUDGET),
            Err(CodeError::NoNontrivialClass)
        ));
    }

    #[test]
    fn systole_toric_l4_by_bounded_search() {
        let hit = combinatorial_systole_bounded(&toric(4), 1, 4).unwrap();
        assert_eq!(hit.map(|(w, _)| w), Some(4));
    }

    #[test]
    fn witness_is_lex_minimal_among_minimizers() {
        let code = CssCode::build(&toric(2), 1).unwrap();
        let params = code.distance_exact(DEFAULT_EXACT_BUDGET).unwrap();
        let witness = params.witness.clone().unwrap();
        // independent scan: no weight-2 class representative is lex-smaller
        let span_cycle = RowSpace::from_rows(code.w1());
        let span_cocycle = RowSpace::from_rows(code.w2());
        for a in 0..code.n() {
            for b in (a + 1)..code.n() {
                let v = F2Vector::from_toggles(8, &[a, b]).unwrap();
                let nontrivial = (code.cycle_check.mul_vec(&v).unwrap().is_zero()
                    && !span_cycle.contains(&v))
                    || (code.cocycle_check.mul_vec(&v).unwrap().is_zero()
                        && !span_cocycle.contains(&v));
                if nontrivial {
                    assert!(vec![a, b] >= witness);
                }
            }
        }
    }

    #[test]
    fn ldpc_weights() {
        assert_eq!(CssCode::build(&toric(2), 1).unwrap().ldpc_weight(), 4);
        assert_eq!(CssCode::build(&toric(5), 1).unwrap().ldpc_weight(), 4);
        assert_eq!(CssCode::build(&tetrahedron(), 1).unwrap().ldpc_weight(), 3);
        // Leibniz support count for the degree-2 product code: a W1
        // generator is ∂(a⊗b) with dim(a,b) = (1,2) or (2,1), of weight
        // 2 + 4; a W2 generator counts cofaces, 4 edges at a vertex plus
        // 2 faces at an edge — all four kinds weigh 6
        let t = toric(2);
        let four = t.tensor_product(&t).unwrap();
        let d1 = t.boundary(1).unwrap();
        let d2 = t.boundary(2).unwrap();
        let w1_expected = (0..d1.cols())
            .map(|e| d1.column(e).weight())
            .max()
            .unwrap()
            + (0..d2.cols()).map(|f| d2.column(f).weight()).max().unwrap();
        let w2_expected = d1.max_row_weight() + d2.max_row_weight();
        assert_eq!(
            CssCode::build(&four, 2).unwrap().ldpc_weight(),
            w1_expected.max(w2_expected)
        );
        assert_eq!(w1_expected.max(w2_expected), 6);
    }

    #[test]
    fn zemor_rows_for_toric_family() {
        let mut rows = Vec::new();
        for l in [2usize, 3] {
            let code = CssCode::build(&toric(l), 1).unwrap();
            rows.push(code.distance_exact(DEFAULT_EXACT_BUDGET).unwrap());
        }
        let report = zemor_report(&rows, 0.05);
        for (row, l) in report.iter().zip([2usize, 3]) {
            assert_eq!(row.n, 2 * l * l);
            assert_eq!(row.k, 2);
            assert_eq!(row.d, Distance::Exact(l));
            match row.ratio {
                Bracket::Exact(r) => assert!((r - 1.0).abs() < 1e-12),
                _ => panic!("exact distance must give exact ratio"),
            }
            assert!(!row.exceeds);
        }
        // degenerate [[1,1,1]] has ratio 1
        let degenerate = CodeParams::derive(1, 1, Distance::Exact(1), None);
        let row = &zemor_report(&[degenerate], 0.05)[0];
        match row.ratio {
            Bracket::Exact(r) => assert!((r - 1.0).abs() < 1e-12),
            _ => panic!(),
        }
    }

    #[test]
    fn eq_1_2_duality_of_spaces_on_toric() {
        // rank ∂_{i+1} + dim ker δ_i = n_i, and B_i ⊥ Z^i generator-wise
        let x = toric(3);
        for i in 0..=2usize {
            let up = x.boundary_or_zero(i + 1);
            let delta = x.coboundary(i);
            let r = f2linalg::rank(&up);
            let z = f2linalg::kernel_basis(&delta);
            assert_eq!(r + z.len(), x.cells(i));
            for col in up.columns() {
                for zv in &z {
                    assert!(!col.dot(zv));
                }
            }
        }
    }
}
