//! Exact-arithmetic toolkit for r-matrices and r-n structures on
//! finite-dimensional real Lie algebras.
//!
//! The crate verifies and constructs solutions of the classical Yang-Baxter
//! equation, Nijenhuis operators and their compatibility (r-n structures),
//! carries the full embedded catalog of four-dimensional symplectic real Lie
//! algebras with their r-matrix classes, r-n families, Nijenhuis classes and
//! automorphism groups, decides equivalence questions by exact witness
//! verification, and reproduces the associated integrable-systems
//! construction (Lax-type matrices and trace invariants) with exact
//! polynomial arithmetic.
//!
//! Everything is computed over arbitrary-precision rationals; there are no
//! tolerances anywhere. All values are immutable after construction and can
//! be shared freely across threads.

pub mod rat;
pub mod poly;
pub mod parse;
pub mod matrix;
pub mod sample;
pub mod lie;
pub mod pn;
pub mod catalog;
pub mod equivalence;
pub mod integrable;
pub mod document;

pub use matrix::{Matrix, Scalar};
pub use poly::{Poly, VarSet};
pub use rat::Rat;
