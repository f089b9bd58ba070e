//! Central series and related subspaces.

use crate::linalg::sparse::sparse_from_dense;
use crate::linalg::{Echelon, Rational, Rref, Subspace};

use super::LieAlgebra;

/// `[g, S]`.
pub fn bracket_with_algebra(g: &LieAlgebra, s: &Subspace) -> Subspace {
    let mut e = Echelon::new(g.dim());
    for v in s.basis() {
        for i in 0..g.dim() {
            e.insert(sparse_from_dense(&g.bracket_basis_with(i, &v)));
        }
    }
    Subspace::from_rref(e.finish())
}

/// `[g, g]`.
pub fn derived_algebra(g: &LieAlgebra) -> Subspace {
    let mut e = Echelon::new(g.dim());
    for (_, _, v) in g.brackets() {
        e.insert(v.clone());
    }
    Subspace::from_rref(e.finish())
}

/// `gamma_2, gamma_3, ...` with `gamma_{k+1} = [g, gamma_k]`, ending at the
/// first term that repeats (zero exactly when `g` is nilpotent).
pub fn lower_central_series(g: &LieAlgebra) -> Vec<Subspace> {
    let mut out = vec![derived_algebra(g)];
    loop {
        let last = out.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = bracket_with_algebra(g, last);
        if &next == last {
            break;
        }
        out.push(next);
    }
    out
}

/// `{x : [x, g] is contained in s}`.
pub fn preimage_of(g: &LieAlgebra, s: &Subspace) -> Subspace {
    let n = g.dim();
    let mut e = Echelon::new(n);
    for j in 0..n {
        let res: Vec<Vec<Rational>> = (0..n)
            .map(|m| s.residual(&crate::linalg::sparse::dense_from_sparse(&g.bracket_basis(m, j), n)))
            .collect();
        for c in 0..n {
            let row: Vec<Rational> = res.iter().map(|r| r[c].clone()).collect();
            e.insert(sparse_from_dense(&row));
        }
    }
    Subspace::from_rref(Rref::nullspace_rref(&e.finish(), n))
}

pub fn center(g: &LieAlgebra) -> Subspace {
    preimage_of(g, &Subspace::zero(g.dim()))
}

/// `Z_1, Z_2, ...`, ending at the first term that repeats (all of `g`
/// exactly when `g` is nilpotent).
pub fn upper_central_series(g: &LieAlgebra) -> Vec<Subspace> {
    let mut out = vec![center(g)];
    loop {
        let last = out.last().unwrap();
        if last.dim() == g.dim() {
            break;
        }
        let next = preimage_of(g, last);
        if &next == last {
            break;
        }
        out.push(next);
    }
    out
}

pub fn is_nilpotent(g: &LieAlgebra) -> bool {
    lower_central_series(g).last().is_none_or(|s| s.is_zero())
}
