//! Square matrices over Z[√2], diagonal quadratic forms, and the exact
//! checks for membership in the special orthogonal group of a form.
//!
//! Determinants use fraction-free (Bareiss) elimination over the ring's
//! fraction field: every division along the way is exact in the integral
//! domain, so no rational normalization is ever needed.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::zsqrt2::ZSqrt2;
use super::ArithError;

/// A square matrix `A + B√2` over Z[√2].
#[derive(Clone, PartialEq, Eq)]
pub struct ZSqrt2Matrix {
    size: usize,
    entries: Vec<ZSqrt2>,
}

impl ZSqrt2Matrix {
    pub fn zero(size: usize) -> Self {
        ZSqrt2Matrix {
            size,
            entries: vec![ZSqrt2::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size);
        for i in 0..size {
            m.set(i, i, ZSqrt2::one());
        }
        m
    }

    /// Builds `A + B√2` from the two integer parts.
    pub fn from_parts(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Result<Self, ArithError> {
        let size = a.len();
        if b.len() != size {
            return Err(ArithError::SizeMismatch(b.len(), size));
        }
        let mut m = Self::zero(size);
        for r in 0..size {
            if a[r].len() != size || b[r].len() != size {
                return Err(ArithError::SizeMismatch(a[r].len().max(b[r].len()), size));
            }
            for c in 0..size {
                m.set(r, c, ZSqrt2::new(a[r][c].clone(), b[r][c].clone()));
            }
        }
        Ok(m)
    }

    /// Convenience constructor from machine-integer parts.
    pub fn from_i64_parts(a: &[Vec<i64>], b: &[Vec<i64>]) -> Result<Self, ArithError> {
        let to_big = |m: &[Vec<i64>]| -> Vec<Vec<BigInt>> {
            m.iter()
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        Self::from_parts(&to_big(a), &to_big(b))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &ZSqrt2 {
        &self.entries[r * self.size + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ZSqrt2) {
        self.entries[r * self.size + c] = v;
    }

    /// The integer part `A` of `A + B√2`.
    pub fn a_part(&self) -> Vec<Vec<BigInt>> {
        (0..self.size)
            .map(|r| (0..self.size).map(|c| self.get(r, c).a.clone()).collect())
            .collect()
    }

    /// The √2 part `B` of `A + B√2`.
    pub fn b_part(&self) -> Vec<Vec<BigInt>> {
        (0..self.size)
            .map(|r| (0..self.size).map(|c| self.get(r, c).b.clone()).collect())
            .collect()
    }

    pub fn transpose(&self) -> ZSqrt2Matrix {
        let mut t = Self::zero(self.size);
        for r in 0..self.size {
            for c in 0..self.size {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &ZSqrt2Matrix) -> Result<ZSqrt2Matrix, ArithError> {
        if self.size != rhs.size {
            return Err(ArithError::SizeMismatch(rhs.size, self.size));
        }
        let n = self.size;
        let mut out = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = ZSqrt2::zero();
                for k in 0..n {
                    acc = acc.add(&self.get(r, k).mul(rhs.get(k, c)));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.size)
    }

    /// Entry-wise Galois conjugate (√2 ↦ −√2 applied to every entry).
    pub fn conjugate_entries(&self) -> ZSqrt2Matrix {
        ZSqrt2Matrix {
            size: self.size,
            entries: self.entries.iter().map(ZSqrt2::conjugate).collect(),
        }
    }

    /// `max(|entries of A| ∪ |entries of B|)`.
    pub fn entry_norm(&self) -> BigUint {
        self.entries
            .iter()
            .map(ZSqrt2::height)
            .max()
            .unwrap_or_else(BigUint::zero)
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> ZSqrt2 {
        let n = self.size;
        if n == 0 {
            return ZSqrt2::one();
        }
        let mut m = self.entries.clone();
        let at = |m: &Vec<ZSqrt2>, r: usize, c: usize| m[r * n + c].clone();
        let mut prev = ZSqrt2::one();
        let mut sign_flip = false;
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                match (k + 1..n).find(|&r| !at(&m, r, k).is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            m.swap(k * n + c, r * n + c);
                        }
                        sign_flip = !sign_flip;
                    }
                    None => return ZSqrt2::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&m, k, k)
                        .mul(&at(&m, i, j))
                        .sub(&at(&m, i, k).mul(&at(&m, k, j)));
                    m[i * n + j] = num
                        .div_exact(&prev)
                        .expect("Bareiss divisions are exact over an integral domain");
                }
            }
            prev = at(&m, k, k);
        }
        let d = at(&m, n - 1, n - 1);
        if sign_flip {
            d.neg()
        } else {
            d
        }
    }

    /// Inverse of a determinant-1 matrix, via the adjugate.
    pub fn inverse(&self) -> Result<ZSqrt2Matrix, ArithError> {
        if !self.det().is_one() {
            return Err(ArithError::NotUnimodular);
        }
        let n = self.size;
        let mut inv = Self::zero(n);
        for r in 0..n {
            for c in 0..n {
                let minor = self.minor(c, r).det();
                let cof = if (r + c) % 2 == 0 { minor } else { minor.neg() };
                inv.set(r, c, cof);
            }
        }
        Ok(inv)
    }

    fn minor(&self, drop_row: usize, drop_col: usize) -> ZSqrt2Matrix {
        let n = self.size;
        let mut m = Self::zero(n - 1);
        let mut ri = 0;
        for r in 0..n {
            if r == drop_row {
                continue;
            }
            let mut ci = 0;
            for c in 0..n {
                if c == drop_col {
                    continue;
                }
                m.set(ri, ci, self.get(r, c).clone());
                ci += 1;
            }
            ri += 1;
        }
        m
    }
}

impl std::fmt::Debug for ZSqrt2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ZSqrt2Matrix {}x{}", self.size, self.size)?;
        for r in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A non-degenerate diagonal quadratic form over Z[√2].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    coeffs: Vec<ZSqrt2>,
}

impl QuadraticForm {
    pub fn new(coeffs: Vec<ZSqrt2>) -> Result<Self, ArithError> {
        if coeffs.iter().any(ZSqrt2::is_zero) {
            return Err(ArithError::DegenerateForm);
        }
        Ok(QuadraticForm { coeffs })
    }

    /// `−√2 x₀² + x₁² + … + x_D²` on D+1 variables.
    pub fn sqrt2_hyperbolic(d: usize) -> Self {
        let mut coeffs = vec![ZSqrt2::new(0, -1)];
        coeffs.extend(std::iter::repeat_with(ZSqrt2::one).take(d));
        QuadraticForm { coeffs }
    }

    /// The Galois twist `+√2 x₀² + x₁² + … + x_D²`: definite, so its real
    /// orthogonal group is compact.
    pub fn sqrt2_definite(d: usize) -> Self {
        let mut coeffs = vec![ZSqrt2::new(0, 1)];
        coeffs.extend(std::iter::repeat_with(ZSqrt2::one).take(d));
        QuadraticForm { coeffs }
    }

    /// The integral form `−x₀² + x₁² + … + x_D²`.
    pub fn lorentz(d: usize) -> Self {
        let mut coeffs = vec![ZSqrt2::new(-1, 0)];
        coeffs.extend(std::iter::repeat_with(ZSqrt2::one).take(d));
        QuadraticForm { coeffs }
    }

    pub fn size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &ZSqrt2 {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[ZSqrt2] {
        &self.coeffs
    }

    /// Coefficient-wise Galois conjugate of the form.
    pub fn conjugate(&self) -> QuadraticForm {
        QuadraticForm {
            coeffs: self.coeffs.iter().map(ZSqrt2::conjugate).collect(),
        }
    }

    /// `Σ f_i x_i y_i`, the bilinear pairing of the form.
    pub fn pair(&self, x: &[ZSqrt2], y: &[ZSqrt2]) -> ZSqrt2 {
        let mut acc = ZSqrt2::zero();
        for i in 0..self.coeffs.len() {
            acc = acc.add(&self.coeffs[i].mul(&x[i]).mul(&y[i]));
        }
        acc
    }
}

/// Exact check that `MᵀFM = F` and `det M = 1`.
pub fn preserves_form(m: &ZSqrt2Matrix, q: &QuadraticForm) -> Result<bool, ArithError> {
    let n = q.size();
    if m.size() != n {
        return Err(ArithError::SizeMismatch(m.size(), n));
    }
    for i in 0..n {
        for j in i..n {
            // (MᵀFM)_{ij} = Σ_k f_k m_{ki} m_{kj}
            let mut acc = ZSqrt2::zero();
            for k in 0..n {
                acc = acc.add(&q.coeff(k).mul(m.get(k, i)).mul(m.get(k, j)));
            }
            let expected = if i == j {
                q.coeff(i).clone()
            } else {
                ZSqrt2::zero()
            };
            if acc != expected {
                return Ok(false);
            }
        }
    }
    Ok(m.det().is_one())
}

/// Applies the Galois conjugation entry-wise. The input must preserve `q`;
/// the output then preserves the conjugate form, which is asserted exactly
/// before returning.
pub fn galois_twist(
    m: &ZSqrt2Matrix,
    q: &QuadraticForm,
) -> Result<(ZSqrt2Matrix, QuadraticForm), ArithError> {
    if !preserves_form(m, q)? {
        return Err(ArithError::FormNotPreserved);
    }
    let twisted = m.conjugate_entries();
    let twisted_form = q.conjugate();
    if !preserves_form(&twisted, &twisted_form)? {
        return Err(ArithError::FormNotPreserved);
    }
    Ok((twisted, twisted_form))
}

/// The word-length growth constant `C₂ = 3(D+1) · max_i |s_i|`: a product
/// of `w` generators has entry norm at most `C₂^w`, because each entry of
/// `A₁A₂ + 2B₁B₂` (and of `A₁B₂ + B₁A₂`) is a sum of `D+1` terms bounded by
/// `3 |M₁| |M₂|`.
pub fn growth_constant(generators: &[ZSqrt2Matrix]) -> Result<BigUint, ArithError> {
    let first = generators.first().ok_or(ArithError::NoGenerators)?;
    let max_norm = generators
        .iter()
        .map(ZSqrt2Matrix::entry_norm)
        .max()
        .unwrap_or_else(BigUint::zero);
    Ok(BigUint::from(3 * first.size()) * max_norm)
}

/// Known elements of small orthogonal groups, used by tests and as
/// ready-made generator sets.
pub mod samples {
    use super::*;

    /// A hyperbolic element of the integral Lorentz group SO(2,1,Z).
    pub fn lorentz_boost_3() -> ZSqrt2Matrix {
        ZSqrt2Matrix::from_i64_parts(
            &[vec![3, 2, 2], vec![2, 2, 1], vec![2, 1, 2]],
            &[vec![0; 3], vec![0; 3], vec![0; 3]],
        )
        .unwrap()
    }

    /// A rotation in the last two coordinates; preserves any diagonal form
    /// whose last two coefficients are equal.
    pub fn rotation_12() -> ZSqrt2Matrix {
        ZSqrt2Matrix::from_i64_parts(
            &[vec![1, 0, 0], vec![0, 0, -1], vec![0, 1, 0]],
            &[vec![0; 3], vec![0; 3], vec![0; 3]],
        )
        .unwrap()
    }

    /// A hyperbolic element of SO_f(Z[√2]) for `f = −√2x₀² + x₁² + x₂²`,
    /// acting in the first two coordinates.
    pub fn sqrt2_boost_3() -> ZSqrt2Matrix {
        ZSqrt2Matrix::from_i64_parts(
            &[vec![3, 2, 0], vec![4, 3, 0], vec![0, 0, 1]],
            &[vec![2, 2, 0], vec![2, 2, 0], vec![0, 0, 0]],
        )
        .unwrap()
    }
}
