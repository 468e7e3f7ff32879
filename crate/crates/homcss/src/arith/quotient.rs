//! Reduction mod N into (Z/NZ)[√2], breadth-first closure of reduced
//! generator sets, and brute-force enumeration of the ambient
//! form-preserving matrices for small sizes and moduli.
//!
//! Residue matrices are deduplicated through a canonical little-endian
//! byte encoding, so closure transcripts are portable and diffable across
//! runs and machines.

use std::collections::{HashSet, VecDeque};

use num_bigint::{BigInt, BigUint};

use super::matrix::{QuadraticForm, ZSqrt2Matrix};
use super::ArithError;

const MAX_PACKED_MODULUS: u64 = 1 << 31;

/// A residue scalar `(a, b)` representing `a + b√2` in (Z/NZ)[√2].
type Res = (u64, u64);

fn res_add(x: Res, y: Res, n: u64) -> Res {
    ((x.0 + y.0) % n, (x.1 + y.1) % n)
}

fn res_mul(x: Res, y: Res, n: u64) -> Res {
    // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
    let a = (x.0 * y.0 % n + 2 * (x.1 * y.1 % n)) % n;
    let b = (x.0 * y.1 % n + x.1 * y.0 % n) % n;
    (a, b)
}

fn res_neg(x: Res, n: u64) -> Res {
    ((n - x.0 % n) % n, (n - x.1 % n) % n)
}

fn big_mod(x: &BigInt, n: u64) -> u64 {
    let n_big = BigInt::from(n);
    let r = ((x % &n_big) + &n_big) % &n_big;
    let digits = r.to_u64_digits().1;
    digits.first().copied().unwrap_or(0)
}

/// A matrix over (Z/NZ)[√2] with entries packed as residue pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientElement {
    size: usize,
    modulus: u64,
    entries: Vec<Res>,
}

impl QuotientElement {
    pub fn identity(size: usize, modulus: u64) -> Self {
        let mut entries = vec![(0, 0); size * size];
        for i in 0..size {
            entries[i * size + i] = (1 % modulus, 0);
        }
        QuotientElement {
            size,
            modulus,
            entries,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, r: usize, c: usize) -> Res {
        self.entries[r * self.size + c]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.size, self.modulus)
    }

    pub fn mul(&self, rhs: &QuotientElement) -> Result<QuotientElement, ArithError> {
        if self.size != rhs.size {
            return Err(ArithError::SizeMismatch(rhs.size, self.size));
        }
        let n = self.modulus;
        let s = self.size;
        let mut out = QuotientElement {
            size: s,
            modulus: n,
            entries: vec![(0, 0); s * s],
        };
        for r in 0..s {
            for c in 0..s {
                let mut acc = (0, 0);
                for k in 0..s {
                    acc = res_add(acc, res_mul(self.get(r, k), rhs.get(k, c), n), n);
                }
                out.entries[r * s + c] = acc;
            }
        }
        Ok(out)
    }

    /// Canonical byte encoding: the `A` residues row-major, then the `B`
    /// residues row-major, each as a little-endian u32.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut key = Vec::with_capacity(self.entries.len() * 8);
        for &(a, _) in &self.entries {
            key.extend_from_slice(&(a as u32).to_le_bytes());
        }
        for &(_, b) in &self.entries {
            key.extend_from_slice(&(b as u32).to_le_bytes());
        }
        key
    }

    pub fn key_hex(&self) -> String {
        self.canonical_key()
            .iter()
            .map(|byte| format!("{byte:02x}"))
            .collect()
    }

    /// Determinant in (Z/NZ)[√2] by cofactor expansion (sizes here are
    /// small).
    pub fn det(&self) -> Res {
        fn det_rec(entries: &[Res], size: usize, n: u64) -> Res {
            if size == 1 {
                return entries[0];
            }
            let mut acc = (0, 0);
            for c in 0..size {
                let mut sub = Vec::with_capacity((size - 1) * (size - 1));
                for r in 1..size {
                    for cc in 0..size {
                        if cc != c {
                            sub.push(entries[r * size + cc]);
                        }
                    }
                }
                let mut term = res_mul(entries[c], det_rec(&sub, size - 1, n), n);
                if c % 2 == 1 {
                    term = res_neg(term, n);
                }
                acc = res_add(acc, term, n);
            }
            acc
        }
        det_rec(&self.entries, self.size, self.modulus)
    }
}

fn check_modulus(n: u64) -> Result<(), ArithError> {
    if n < 2 {
        return Err(ArithError::ModulusTooSmall(n));
    }
    if n > MAX_PACKED_MODULUS {
        return Err(ArithError::ModulusTooLarge(n));
    }
    Ok(())
}

/// Entry-wise reduction mod N. This is a ring homomorphism:
/// `reduce(M·M') = reduce(M)·reduce(M')`.
pub fn reduce_mod(m: &ZSqrt2Matrix, modulus: u64) -> Result<QuotientElement, ArithError> {
    check_modulus(modulus)?;
    let s = m.size();
    let mut entries = Vec::with_capacity(s * s);
    for r in 0..s {
        for c in 0..s {
            let e = m.get(r, c);
            entries.push((big_mod(&e.a, modulus), big_mod(&e.b, modulus)));
        }
    }
    Ok(QuotientElement {
        size: s,
        modulus,
        entries,
    })
}

/// Result of a breadth-first closure in the quotient.
#[derive(Clone, Debug)]
pub struct ClosureSummary {
    pub order: usize,
    /// False when the element cap stopped the search early.
    pub complete: bool,
    /// The a-priori cardinality bound `N^{2·size²}`.
    pub bound: BigUint,
    pub within_bound: bool,
    /// Sorted canonical keys (hex) of every element found.
    pub transversal: Option<Vec<String>>,
}

/// Breadth-first closure of the reduced generators under multiplication.
/// In a finite group the multiplicative closure of a generating set is the
/// generated subgroup, so no explicit inverses are needed. Stops (flagged
/// incomplete) once more than `cap` elements have been found.
pub fn quotient_closure(
    generators: &[ZSqrt2Matrix],
    modulus: u64,
    cap: usize,
    want_transversal: bool,
) -> Result<ClosureSummary, ArithError> {
    check_modulus(modulus)?;
    let first = generators.first().ok_or(ArithError::NoGenerators)?;
    let size = first.size();
    let reduced: Vec<QuotientElement> = generators
        .iter()
        .map(|g| {
            if g.size() != size {
                Err(ArithError::SizeMismatch(g.size(), size))
            } else {
                reduce_mod(g, modulus)
            }
        })
        .collect::<Result<_, _>>()?;

    let identity = QuotientElement::identity(size, modulus);
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue: VecDeque<QuotientElement> = VecDeque::new();
    seen.insert(identity.canonical_key());
    queue.push_back(identity);
    let mut elements: Vec<QuotientElement> = Vec::new();
    let mut complete = true;
    while let Some(elem) = queue.pop_front() {
        if want_transversal {
            elements.push(elem.clone());
        }
        for g in &reduced {
            let next = elem.mul(g)?;
            let key = next.canonical_key();
            if !seen.contains(&key) {
                if seen.len() >= cap {
                    complete = false;
                    queue.clear();
                    break;
                }
                seen.insert(key);
                queue.push_back(next);
            }
        }
        if !complete {
            break;
        }
    }

    let bound = BigUint::from(modulus).pow(2 * (size * size) as u32);
    let order = seen.len();
    let transversal = want_transversal.then(|| {
        let mut keys: Vec<String> = elements.iter().map(QuotientElement::key_hex).collect();
        keys.sort();
        keys
    });
    Ok(ClosureSummary {
        order,
        complete,
        within_bound: BigUint::from(order as u64) <= bound,
        bound,
        transversal,
    })
}

/// Brute-force enumeration of every matrix over (Z/NZ)[√2] (or over Z/NZ
/// when `integer_only`) that preserves the reduced form and has
/// determinant 1. Column-by-column with orthogonality pruning; refuses
/// search spaces past ~2·10⁶ candidate columns.
pub fn ambient_so_elements(
    form: &QuadraticForm,
    modulus: u64,
    integer_only: bool,
) -> Result<Vec<QuotientElement>, ArithError> {
    check_modulus(modulus)?;
    let size = form.size();
    let coeffs: Vec<Res> = form
        .coeffs()
        .iter()
        .map(|c| (big_mod(&c.a, modulus), big_mod(&c.b, modulus)))
        .collect();
    if coeffs.iter().any(|&(a, b)| a == 0 && b == 0) {
        return Err(ArithError::DegenerateForm);
    }

    let per_entry = if integer_only {
        modulus as u128
    } else {
        (modulus as u128) * (modulus as u128)
    };
    let total = per_entry.pow(size as u32);
    if total > 2_000_000 {
        return Err(ArithError::SearchTooLarge(format!(
            "{total} candidate columns (limit 2000000)"
        )));
    }

    // all candidate columns, then bucket by the diagonal value they attain
    let mut columns: Vec<Vec<Res>> = Vec::with_capacity(total as usize);
    let mut current = vec![(0u64, 0u64); size];
    build_columns(&mut columns, &mut current, 0, size, modulus, integer_only);

    let q_value = |col: &[Res]| -> Res {
        let mut acc = (0, 0);
        for i in 0..size {
            acc = res_add(acc, res_mul(coeffs[i], res_mul(col[i], col[i], modulus), modulus), modulus);
        }
        acc
    };
    let pair_value = |x: &[Res], y: &[Res]| -> Res {
        let mut acc = (0, 0);
        for i in 0..size {
            acc = res_add(acc, res_mul(coeffs[i], res_mul(x[i], y[i], modulus), modulus), modulus);
        }
        acc
    };

    let buckets: Vec<Vec<&Vec<Res>>> = (0..size)
        .map(|j| {
            columns
                .iter()
                .filter(|col| q_value(col) == coeffs[j])
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut chosen: Vec<&Vec<Res>> = Vec::with_capacity(size);
    select_columns(
        &buckets,
        &pair_value,
        &mut chosen,
        size,
        modulus,
        &mut out,
    );
    Ok(out)
}

fn build_columns(
    columns: &mut Vec<Vec<Res>>,
    current: &mut Vec<Res>,
    depth: usize,
    size: usize,
    modulus: u64,
    integer_only: bool,
) {
    if depth == size {
        columns.push(current.clone());
        return;
    }
    for a in 0..modulus {
        let b_range = if integer_only { 1 } else { modulus };
        for b in 0..b_range {
            current[depth] = (a, b);
            build_columns(columns, current, depth + 1, size, modulus, integer_only);
        }
    }
}

fn select_columns<'a>(
    buckets: &'a [Vec<&'a Vec<Res>>],
    pair_value: &dyn Fn(&[Res], &[Res]) -> Res,
    chosen: &mut Vec<&'a Vec<Res>>,
    size: usize,
    modulus: u64,
    out: &mut Vec<QuotientElement>,
) {
    let j = chosen.len();
    if j == size {
        let mut entries = vec![(0, 0); size * size];
        for (col_idx, col) in chosen.iter().enumerate() {
            for (row_idx, &v) in col.iter().enumerate() {
                entries[row_idx * size + col_idx] = v;
            }
        }
        let elem = QuotientElement {
            size,
            modulus,
            entries,
        };
        if elem.det() == (1 % modulus, 0) {
            out.push(elem);
        }
        return;
    }
    for col in &buckets[j] {
        if chosen
            .iter()
            .all(|prev| pair_value(prev, col) == (0, 0))
        {
            chosen.push(col);
            select_columns(buckets, pair_value, chosen, size, modulus, out);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::matrix::samples;
    use crate::arith::ZSqrt2;

    #[test]
    fn identity_reduces_to_identity() {
        let id = ZSqrt2Matrix::identity(3);
        for n in [2u64, 3, 7] {
            assert!(reduce_mod(&id, n).unwrap().is_identity());
        }
        assert!(reduce_mod(&id, 1).is_err());
    }

    #[test]
    fn unit_times_identity_reduces_to_paired_identities() {
        // (1+√2)·Id mod 3 has A = Id and B = Id
        let mut m = ZSqrt2Matrix::zero(3);
        for i in 0..3 {
            m.set(i, i, ZSqrt2::new(1, 1));
        }
        let r = reduce_mod(&m, 3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { (1, 1) } else { (0, 0) };
                assert_eq!(r.get(i, j), expected);
            }
        }
    }

    #[test]
    fn reduction_is_a_homomorphism() {
        let g = samples::sqrt2_boost_3();
        let h = samples::rotation_12();
        let mut words = vec![g.clone(), h.clone(), g.mul(&h).unwrap()];
        for _ in 0..5 {
            let last = words.last().unwrap().clone();
            words.push(last.mul(&g).unwrap());
        }
        for n in [2u64, 3, 5] {
            for a in &words {
                for b in &words {
                    let lhs = reduce_mod(&a.mul(b).unwrap(), n).unwrap();
                    let rhs = reduce_mod(a, n).unwrap().mul(&reduce_mod(b, n).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn negative_entries_reduce_into_range() {
        let m = samples::rotation_12();
        let r = reduce_mod(&m, 5).unwrap();
        assert_eq!(r.get(1, 2), (4, 0));
    }

    #[test]
    fn trivial_generator_closure_is_one() {
        let summary = quotient_closure(&[ZSqrt2Matrix::identity(3)], 5, 1000, true).unwrap();
        assert_eq!(summary.order, 1);
        assert!(summary.complete);
        assert!(summary.within_bound);
        assert_eq!(summary.transversal.unwrap().len(), 1);
    }

    #[test]
    fn lorentz_closure_mod_2_matches_ambient_intersection() {
        let gens = [samples::lorentz_boost_3(), samples::rotation_12()];
        let summary = quotient_closure(&gens, 2, 100_000, true).unwrap();
        assert!(summary.complete);
        assert!(summary.within_bound);

        let ambient =
            ambient_so_elements(&QuadraticForm::lorentz(2), 2, true).unwrap();
        // Lagrange: the closure is a subgroup of the ambient group
        assert_eq!(ambient.len() % summary.order, 0);
        // the closure is exactly the set of ambient elements it reached
        let keys: std::collections::HashSet<String> =
            summary.transversal.clone().unwrap().into_iter().collect();
        let inter = ambient
            .iter()
            .filter(|e| keys.contains(&e.key_hex()))
            .count();
        assert_eq!(inter, summary.order);
    }

    #[test]
    fn closure_cap_flags_partial_results() {
        let gens = [samples::lorentz_boost_3(), samples::rotation_12()];
        let summary = quotient_closure(&gens, 7, 10, false).unwrap();
        assert!(!summary.complete);
        assert!(summary.order >= 10);
    }

    #[test]
    fn quotient_det_multiplicative() {
        let g = reduce_mod(&samples::lorentz_boost_3(), 5).unwrap();
        let h = reduce_mod(&samples::rotation_12(), 5).unwrap();
        let gh = g.mul(&h).unwrap();
        assert_eq!(gh.det(), res_mul(g.det(), h.det(), 5));
        assert_eq!(g.det(), (1, 0));
    }
}
