//! Homological invariants of Artinian local algebras over prime fields.

pub mod algebra;
pub mod cli;
pub mod dualpoly;
pub mod error;
pub mod koszul;
pub mod linalg;
pub mod resolution;
pub mod series;
pub mod structure;

pub use algebra::{ArtinianLocalAlgebra, Classification, Element, ReductionSearch};
pub use dualpoly::DualPolynomial;
pub use error::{Error, Result};
pub use linalg::{FpMatrix, PrimeField};
