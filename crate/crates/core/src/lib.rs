//! Exact decision procedures for nice bases of real Lie algebras.

pub mod error;
pub mod linalg;

pub use error::{Error, Result};
pub mod lie;

pub use lie::LieAlgebra;
pub use linalg::{RatMatrix, RatPoly, Rational, Subspace};
pub mod almost_abelian;
pub mod catalog3;
pub mod derivations;
pub mod graph_lie;
pub mod niceness;
pub mod nu;
pub mod reproduce;
pub mod standard;
