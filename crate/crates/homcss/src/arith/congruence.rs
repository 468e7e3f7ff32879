//! Principal congruence subgroups Γ_N and the entry-size lower bound that
//! drives the injectivity-radius estimate.
//!
//! A matrix `A + B√2` lies in Γ_N exactly when `A ≡ Id` and `B ≡ 0`
//! mod N. Any such non-identity element must carry an entry of absolute
//! value at least `N − 1`, and since a word of length `w` in a generating
//! set has entries at most `C₂^w`, every non-identity element of Γ_N has
//! word length at least `log(N−1) / log C₂`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::ZSqrt2Matrix;
use super::quotient::reduce_mod;
use super::ArithError;

/// Literal congruence check: `A ≡ Id (mod N)` and `B ≡ 0 (mod N)`.
pub fn gamma_member(m: &ZSqrt2Matrix, modulus: u64) -> Result<bool, ArithError> {
    if modulus < 2 {
        return Err(ArithError::ModulusTooSmall(modulus));
    }
    let n = BigInt::from(modulus);
    for r in 0..m.size() {
        for c in 0..m.size() {
            let e = m.get(r, c);
            let target = if r == c { BigInt::one() } else { BigInt::zero() };
            if !((&e.a - target) % &n).is_zero() || !(&e.b % &n).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatrixPart {
    A,
    B,
}

/// The entry of largest absolute value in the off-identity residual
/// (`A − Id` and `B`) of a Γ_N element.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EntryBoundWitness {
    pub part: MatrixPart,
    pub row: usize,
    pub col: usize,
    /// Decimal value of the residual entry.
    pub value: String,
    /// Decimal absolute value.
    pub norm: String,
    /// `N − 1`.
    pub threshold: u64,
    /// Whether `norm ≥ N − 1` (always true for genuine Γ_N elements).
    pub satisfied: bool,
}

/// Locates the largest residual entry of a non-identity Γ_N element and
/// checks it against the `N − 1` lower bound.
pub fn entry_bound_check(
    m: &ZSqrt2Matrix,
    modulus: u64,
) -> Result<EntryBoundWitness, ArithError> {
    if m.is_identity() {
        return Err(ArithError::IdentityElement);
    }
    if !gamma_member(m, modulus)? {
        return Err(ArithError::NotInGamma(modulus));
    }
    let mut best: Option<(BigUint, MatrixPart, usize, usize, BigInt)> = None;
    for r in 0..m.size() {
        for c in 0..m.size() {
            let e = m.get(r, c);
            let residual_a = if r == c { &e.a - BigInt::one() } else { e.a.clone() };
            for (part, value) in [(MatrixPart::A, residual_a), (MatrixPart::B, e.b.clone())] {
                let norm = value.magnitude().clone();
                let better = match &best {
                    None => true,
                    Some((bn, ..)) => norm > *bn,
                };
                if better {
                    best = Some((norm, part, r, c, value));
                }
            }
        }
    }
    let (norm, part, row, col, value) = best.expect("non-identity matrix has entries");
    Ok(EntryBoundWitness {
        part,
        row,
        col,
        value: value.to_string(),
        norm: norm.to_string(),
        threshold: modulus - 1,
        satisfied: norm >= BigUint::from(modulus - 1),
    })
}

/// A non-identity Γ_N element produced by the quotient-order search,
/// together with the word that produced it.
#[derive(Clone, Debug)]
pub struct GammaElement {
    pub word: String,
    pub order: usize,
    pub matrix: ZSqrt2Matrix,
}

/// Finds non-identity Γ_N elements: for every generator and every pairwise
/// product `w`, computes the multiplicative order `m` of `w` in the mod-N
/// quotient and returns `w^m` (exactly) whenever it is not the identity.
/// Elements of infinite order in the integral group always yield one.
pub fn find_gamma_elements(
    generators: &[ZSqrt2Matrix],
    modulus: u64,
    order_cap: usize,
) -> Result<Vec<GammaElement>, ArithError> {
    if generators.is_empty() {
        return Err(ArithError::NoGenerators);
    }
    let mut words: Vec<(String, ZSqrt2Matrix)> = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        words.push((format!("g{i}"), g.clone()));
    }
    for (i, g) in generators.iter().enumerate() {
        for (j, h) in generators.iter().enumerate() {
            if i != j {
                words.push((format!("g{i}*g{j}"), g.mul(h)?));
            }
        }
    }

    let mut out: Vec<GammaElement> = Vec::new();
    for (name, w) in words {
        if w.is_identity() {
            continue;
        }
        let reduced = reduce_mod(&w, modulus)?;
        let mut acc = reduced.clone();
        let mut order = 1usize;
        while !acc.is_identity() && order <= order_cap {
            acc = acc.mul(&reduced)?;
            order += 1;
        }
        if !acc.is_identity() {
            continue; // order cap exceeded
        }
        let element = power(&w, order)?;
        if !element.is_identity()
            && !out.iter().any(|e| e.matrix == element)
        {
            debug_assert!(gamma_member(&element, modulus).unwrap());
            out.push(GammaElement {
                word: format!("({name})^{order}"),
                order,
                matrix: element,
            });
        }
    }
    Ok(out)
}

fn power(m: &ZSqrt2Matrix, exp: usize) -> Result<ZSqrt2Matrix, ArithError> {
    let mut result = ZSqrt2Matrix::identity(m.size());
    let mut base = m.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base)?;
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base)?;
        }
    }
    Ok(result)
}

/// `w ≥ log(N−1) / log C₂`: the word-length lower bound for non-identity
/// Γ_N elements, needing no geometric constants.
pub fn word_length_lower_bound(modulus: u64, c2: &BigUint) -> Result<f64, ArithError> {
    if modulus < 2 {
        return Err(ArithError::ModulusTooSmall(modulus));
    }
    let ln_c2 = big_ln(c2);
    if ln_c2 <= 0.0 {
        return Err(ArithError::NonpositiveConstant(ln_c2));
    }
    Ok(((modulus - 1) as f64).ln() / ln_c2)
}

fn big_ln(x: &BigUint) -> f64 {
    match x.to_f64() {
        Some(v) if v.is_finite() => v.ln(),
        _ => x.bits() as f64 * std::f64::consts::LN_2,
    }
}

/// The geometric injectivity-radius lower bound `c₁ log N − c₂` with
/// caller-supplied constants (they depend on data the construction leaves
/// symbolic: fundamental-domain diameter and friends).
pub fn injectivity_radius_bound(modulus: u64, c1: f64, c2: f64) -> Result<f64, ArithError> {
    if c1 <= 0.0 {
        return Err(ArithError::NonpositiveConstant(c1));
    }
    if modulus < 2 {
        return Err(ArithError::ModulusTooSmall(modulus));
    }
    Ok(c1 * (modulus as f64).ln() - c2)
}
