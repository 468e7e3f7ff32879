//! The ring Z[√2]: elements `a + b√2` with arbitrary-precision integer
//! parts. The representation is unique, so no normalization is needed.
//!
//! The two real embeddings send √2 to ±√2; the second one is realized
//! symbolically by [`ZSqrt2::conjugate`] and numerically by
//! [`ZSqrt2::embed`].

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

/// An element `a + b√2` of Z[√2].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZSqrt2 {
    pub a: BigInt,
    pub b: BigInt,
}

impl ZSqrt2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        ZSqrt2 {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        ZSqrt2::new(0, 0)
    }

    pub fn one() -> Self {
        ZSqrt2::new(1, 0)
    }

    pub fn sqrt2() -> Self {
        ZSqrt2::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a == BigInt::from(1) && self.b.is_zero()
    }

    pub fn add(&self, rhs: &ZSqrt2) -> ZSqrt2 {
        ZSqrt2 {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }

    pub fn sub(&self, rhs: &ZSqrt2) -> ZSqrt2 {
        ZSqrt2 {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }

    pub fn neg(&self) -> ZSqrt2 {
        ZSqrt2 {
            a: -&self.a,
            b: -&self.b,
        }
    }

    /// `(a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2`.
    pub fn mul(&self, rhs: &ZSqrt2) -> ZSqrt2 {
        ZSqrt2 {
            a: &self.a * &rhs.a + 2 * (&self.b * &rhs.b),
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }

    /// The Galois conjugate `a − b√2` (the image of the embedding that
    /// sends √2 to −√2).
    pub fn conjugate(&self) -> ZSqrt2 {
        ZSqrt2 {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Field norm `a² − 2b²` (an ordinary integer).
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - 2 * (&self.b * &self.b)
    }

    /// The two real images `(a + b√2, a − b√2)`.
    pub fn embed(&self) -> (f64, f64) {
        let a = big_to_f64(&self.a);
        let b = big_to_f64(&self.b);
        let s = std::f64::consts::SQRT_2;
        (a + b * s, a - b * s)
    }

    /// Exact division; `None` when `rhs` is zero or does not divide.
    pub fn div_exact(&self, rhs: &ZSqrt2) -> Option<ZSqrt2> {
        if rhs.is_zero() {
            return None;
        }
        let num = self.mul(&rhs.conjugate());
        let den = rhs.norm();
        if (&num.a % &den).is_zero() && (&num.b % &den).is_zero() {
            Some(ZSqrt2 {
                a: num.a / &den,
                b: num.b / den,
            })
        } else {
            None
        }
    }

    /// `max(|a|, |b|)`, the height used by the entry-growth estimates.
    pub fn height(&self) -> BigUint {
        self.a.magnitude().max(self.b.magnitude()).clone()
    }
}

pub(crate) fn big_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(if x.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

impl fmt::Display for ZSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}√2", self.b)
        } else if self.b.is_negative() {
            write!(f, "{}{}√2", self.a, self.b)
        } else {
            write!(f, "{}+{}√2", self.a, self.b)
        }
    }
}

impl fmt::Debug for ZSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
