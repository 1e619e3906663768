//! Exact symbolic machinery for split vertex algebroids over smooth affine
//! algebras, the axioms that govern them, and the Čech-level characteristic
//! cocycles of transition data.
//!
//! Everything is computed over ℚ with canonical normal forms, so identity
//! checking is equality of normalized representations. There is no floating
//! point anywhere.
//!
//! The crate is layered:
//!
//! - [`ambient`], [`poly`], [`ratfunc`], [`matrix`], [`expr`]: the exact
//!   arithmetic kernel (sparse multivariate polynomials, normalized rational
//!   functions on a declared localization, matrices over them, and the
//!   expression grammar).
//! - [`forms`]: derivations, differential p-forms up to degree 4, the de Rham
//!   differential, contraction, Lie derivative, and form-valued matrices.
//! - [`algebroid`]: abelian bases, split vertex algebroids and their twists,
//!   the assembled operations on T⊕Ω, axiom and morphism checkers, and the
//!   transition operators between bases.
//! - [`cech`]: covers, transition cocycles, Čech cochains, the
//!   Pontryagin–Atiyah–Chern–Simons cocycles, and the gerbe cocycle built
//!   from per-chart bases.
//! - [`report`], [`descriptor`], [`sampler`]: report plumbing, descriptor
//!   file formats, and the seeded samplers that drive randomized suites.

pub mod ambient;
pub mod poly;
pub mod ratfunc;
pub mod matrix;
pub mod expr;
pub mod forms;
pub mod algebroid;
pub mod cech;
pub mod report;
pub mod descriptor;
pub mod sampler;
pub mod suites;

mod error;

pub use ambient::{AlgebraDescriptor, Ambient};
pub use error::Error;
pub use matrix::MatrixA;
pub use poly::{Poly, Rat};
pub use ratfunc::RatFunc;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
