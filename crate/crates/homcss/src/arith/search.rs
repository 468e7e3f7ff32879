//! Height-bounded search for form-preserving matrices: enumerates columns
//! with entries `a + b√2`, `|a|, |b| ≤ h`, keeps those attaining the right
//! diagonal form value, and assembles matrices column by column under the
//! orthogonality constraints, finishing with an exact determinant-1 check.
//!
//! This is a bootstrap tool: whether the matrices found generate the full
//! integral orthogonal group is not claimed anywhere — reports only ever
//! speak about the group generated by what was found.

use super::matrix::{QuadraticForm, ZSqrt2Matrix};
use super::zsqrt2::ZSqrt2;
use super::ArithError;

/// Enumerates determinant-1 form-preserving matrices with entry height at
/// most `height`, in a deterministic lexicographic order, stopping after
/// `max_count` matrices.
pub fn height_bounded_search(
    form: &QuadraticForm,
    height: i64,
    max_count: usize,
) -> Result<Vec<ZSqrt2Matrix>, ArithError> {
    if height < 0 {
        return Err(ArithError::SearchTooLarge(format!(
            "height must be non-negative, got {height}"
        )));
    }
    let size = form.size();
    let per_entry = (2 * height as u128 + 1).pow(2);
    let total = per_entry.pow(size as u32);
    if total > 2_000_000 {
        return Err(ArithError::SearchTooLarge(format!(
            "{total} candidate columns (limit 2000000)"
        )));
    }

    // candidate columns bucketed by which diagonal coefficient they attain
    let mut all_columns: Vec<Vec<ZSqrt2>> = Vec::with_capacity(total as usize);
    let mut current = vec![ZSqrt2::zero(); size];
    build_columns(&mut all_columns, &mut current, 0, size, height);

    let q_value = |col: &[ZSqrt2]| form.pair(col, col);
    let buckets: Vec<Vec<&Vec<ZSqrt2>>> = (0..size)
        .map(|j| {
            all_columns
                .iter()
                .filter(|col| q_value(col) == *form.coeff(j))
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut chosen: Vec<&Vec<ZSqrt2>> = Vec::with_capacity(size);
    assemble(form, &buckets, &mut chosen, max_count, &mut out);
    Ok(out)
}

fn build_columns(
    columns: &mut Vec<Vec<ZSqrt2>>,
    current: &mut Vec<ZSqrt2>,
    depth: usize,
    size: usize,
    height: i64,
) {
    if depth == size {
        columns.push(current.clone());
        return;
    }
    for a in -height..=height {
        for b in -height..=height {
            current[depth] = ZSqrt2::new(a, b);
            build_columns(columns, current, depth + 1, size, height);
        }
    }
}

fn assemble<'a>(
    form: &QuadraticForm,
    buckets: &'a [Vec<&'a Vec<ZSqrt2>>],
    chosen: &mut Vec<&'a Vec<ZSqrt2>>,
    max_count: usize,
    out: &mut Vec<ZSqrt2Matrix>,
) {
    if out.len() >= max_count {
        return;
    }
    let j = chosen.len();
    let size = form.size();
    if j == size {
        let mut m = ZSqrt2Matrix::zero(size);
        for (col_idx, col) in chosen.iter().enumerate() {
            for (row_idx, v) in col.iter().enumerate() {
                m.set(row_idx, col_idx, v.clone());
            }
        }
        if m.det().is_one() {
            out.push(m);
        }
        return;
    }
    for col in &buckets[j] {
        if chosen.iter().all(|prev| form.pair(prev, col).is_zero()) {
            chosen.push(col);
            assemble(form, buckets, chosen, max_count, out);
            chosen.pop();
            if out.len() >= max_count {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::matrix::preserves_form;

    #[test]
    fn height_one_lorentz_search_finds_the_rotations() {
        let q = QuadraticForm::lorentz(2);
        let found = height_bounded_search(&q, 1, 1000).unwrap();
        // exact multiplication is its own oracle
        for m in &found {
            assert!(preserves_form(m, &q).unwrap());
        }
        // the stabilizer of x₀ alone contains the 4 rotations of the
        // (x₁,x₂) plane, so at height 1 the search finds at least those
        assert!(found.iter().any(ZSqrt2Matrix::is_identity));
        assert!(found.len() >= 4);
    }

    #[test]
    fn height_search_is_deterministic_and_capped() {
        let q = QuadraticForm::lorentz(2);
        let a = height_bounded_search(&q, 1, 5).unwrap();
        let b = height_bounded_search(&q, 1, 5).unwrap();
        assert_eq!(a.len(), 5);
        assert!(a == b);
        assert!(height_bounded_search(&q, 100, 5).is_err());
    }

    #[test]
    fn sqrt2_form_search_in_size_two() {
        let q = QuadraticForm::sqrt2_hyperbolic(1);
        let found = height_bounded_search(&q, 4, 200).unwrap();
        for m in &found {
            assert!(preserves_form(m, &q).unwrap());
        }
        // the boost with entries 3+2√2, 2+2√2, 4+2√2, 3+2√2 is in range
        assert!(found
            .iter()
            .any(|m| !m.is_identity() && m.entry_norm() >= 4u32.into()));
    }
}
