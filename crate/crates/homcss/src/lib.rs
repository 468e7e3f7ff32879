//! Workbench for homological CSS quantum codes over GF(2).
//!
//! The crate is organized around a small set of exact kernels:
//!
//! - [`f2linalg`] — bit-packed vectors and matrices over the two-element
//!   field, with deterministic rank / kernel / membership elimination.
//! - [`complex`] — finite chain complexes (boundary matrices with ∂∂ = 0),
//!   mod-2 homology, cochain reversal and tensor products.
//! - [`css`] — the CSS code (B_i, B^i) of a complex, its [[n, k, d]]
//!   parameters, combinatorial systoles and the k·d²/n report.
//! - [`builders`] — simplicial complexes from facet lists, toric grids,
//!   Poincaré-dual complexes, and finite covers from voltage assignments.
//! - [`arith`] — exact arithmetic in Z[√2], orthogonal groups of diagonal
//!   quadratic forms, congruence subgroups Γ_N and quotient enumeration.
//! - [`bounds`] — sphere and hyperbolic ball volumes, the Gauss–Bonnet
//!   volume/Euler-characteristic relation, and systolic volume bounds.
//! - [`corpus`] — seeded random complex generation for the property suites.
//!
//! Everything is exact except `bounds`, which is floating-point numerics
//! with explicit tolerances. All values are immutable after construction
//! and all operations are pure, so the whole API is thread-safe.

pub mod arith;
pub mod bounds;
pub mod builders;
pub mod complex;
pub mod corpus;
pub mod css;
pub mod f2linalg;

pub use complex::ChainComplex;
pub use css::CssCode;
pub use f2linalg::{F2Matrix, F2Vector};
