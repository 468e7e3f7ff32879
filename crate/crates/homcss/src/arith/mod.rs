//! Exact arithmetic in Z[√2] and in orthogonal groups of diagonal
//! quadratic forms: congruence subgroups, quotient enumeration, and the
//! entry-growth machinery behind word-length lower bounds.
//!
//! Everything here is exact. Matrix entries are arbitrary-precision
//! because entry growth is exponential in word length by design; silent
//! overflow would invalidate the central inequalities.

mod congruence;
mod matrix;
mod quotient;
mod search;
mod zsqrt2;

pub use congruence::{
    entry_bound_check, find_gamma_elements, gamma_member, injectivity_radius_bound,
    word_length_lower_bound, EntryBoundWitness, GammaElement, MatrixPart,
};
pub use matrix::{
    galois_twist, growth_constant, preserves_form, samples, QuadraticForm, ZSqrt2Matrix,
};
pub use quotient::{
    ambient_so_elements, quotient_closure, reduce_mod, ClosureSummary, QuotientElement,
};
pub use search::height_bounded_search;
pub use zsqrt2::ZSqrt2;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ArithError {
    #[error("matrix size {0} does not match expected size {1}")]
    SizeMismatch(usize, usize),
    #[error("matrix does not preserve the form with determinant 1")]
    FormNotPreserved,
    #[error("determinant is not 1, matrix is not invertible over the ring")]
    NotUnimodular,
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("modulus {0} exceeds the packed-residue limit 2^31")]
    ModulusTooLarge(u64),
    #[error("the identity element has no entry-bound witness")]
    IdentityElement,
    #[error("matrix is not a member of Γ_{0}")]
    NotInGamma(u64),
    #[error("quadratic form has a zero diagonal coefficient")]
    DegenerateForm,
    #[error("search space too large: {0}")]
    SearchTooLarge(String),
    #[error("constant c1 must be positive, got {0}")]
    NonpositiveConstant(f64),
    #[error("generator list is empty")]
    NoGenerators,
}
