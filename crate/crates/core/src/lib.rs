//! Exact-arithmetic toolkit for symplectic Lie algebras and their associated
//! left-symmetric (Novikov) structures.
//!
//! The crate computes over the rationals with arbitrary precision: structure
//! constants, symplectic forms, the associated left-symmetric product,
//! property chains (left-symmetric / Novikov / associative / LR), symplectic
//! reduction and central symplectic oxidation, and the algebraic avatars of
//! the associated affine and symplectic connections with their curvature and
//! Ricci tensors. A catalog of low-dimensional examples ships with the crate
//! and every table entry is re-verified from the defining equations.

// index-parallel loops over several tables are the clearer idiom here
#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod lsa;
pub mod scalar;
pub mod symplectic;

pub use error::{Error, Result};
pub use scalar::Scalar;
