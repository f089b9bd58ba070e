//! Exact linear algebra over the rationals: matrices, polynomials, sparse
//! row reduction and subspaces.

pub mod factor;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod sparse;
pub mod subspace;

pub use matrix::RatMatrix;
pub use poly::RatPoly;
pub use rational::{frac, int, parse_rational, Rational};
pub use sparse::{Echelon, Rref, SparseRow};
pub use subspace::Subspace;

/// Nullspace basis of a sparse homogeneous system with `ncols` unknowns.
pub fn nullspace_sparse(rows: impl IntoIterator<Item = SparseRow>, ncols: usize) -> Vec<Vec<Rational>> {
    Rref::from_rows(rows, ncols).nullspace()
}
