//! Constructions: direct sums, ideals, quotients, change of basis.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::sparse::{dense_from_sparse, sparse_from_dense};
use crate::linalg::{Echelon, RatMatrix, Rational, Subspace};

use super::LieAlgebra;

/// `g + h` with basis names prefixed `1.` and `2.`.
pub fn direct_sum(g: &LieAlgebra, h: &LieAlgebra) -> LieAlgebra {
    let off = g.dim();
    let entries = g
        .constants()
        .map(|(i, j, k, c)| (i, j, k, c.clone()))
        .chain(h.constants().map(|(i, j, k, c)| (i + off, j + off, k + off, c.clone())))
        .collect::<Vec<_>>();
    let names = g
        .names()
        .iter()
        .map(|n| format!("1.{n}"))
        .chain(h.names().iter().map(|n| format!("2.{n}")))
        .collect();
    LieAlgebra::from_constants_unchecked(off + h.dim(), entries)
        .and_then(|s| s.with_names(names))
        .expect("direct sum of valid algebras")
}

/// Smallest ideal containing the given vectors.
pub fn ideal_closure(g: &LieAlgebra, gens: &[Vec<Rational>]) -> Subspace {
    let n = g.dim();
    let mut e = Echelon::new(n);
    let mut frontier: Vec<Vec<Rational>> = Vec::new();
    for v in gens {
        if e.insert_dense(v) {
            frontier.push(v.clone());
        }
    }
    while let Some(v) = frontier.pop() {
        for i in 0..n {
            let w = g.bracket_basis_with(i, &v);
            if e.insert_dense(&w) {
                frontier.push(w);
            }
        }
    }
    Subspace::from_rref(e.finish())
}

pub fn is_ideal(g: &LieAlgebra, s: &Subspace) -> bool {
    s.basis()
        .iter()
        .all(|v| (0..g.dim()).all(|i| s.contains(&g.bracket_basis_with(i, v))))
}

pub fn is_subalgebra(g: &LieAlgebra, s: &Subspace) -> bool {
    let b = s.basis();
    b.iter()
        .enumerate()
        .all(|(a, u)| b[a + 1..].iter().all(|v| s.contains(&g.bracket(u, v))))
}

/// Quotient `g / ideal` on the cosets of the coordinates complementary to the
/// ideal's echelon pivots, and the projection matrix (quotient dim x dim).
pub fn quotient(g: &LieAlgebra, ideal: &Subspace) -> Result<(LieAlgebra, RatMatrix)> {
    if ideal.ambient_dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: ideal.ambient_dim(),
        });
    }
    if !is_ideal(g, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let n = g.dim();
    let keep = ideal.complement_coordinates();
    let mut proj = RatMatrix::zeros(keep.len(), n);
    for c in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[c] = Rational::from_integer(1.into());
        for (r, x) in ideal.quotient_coordinates(&e).into_iter().enumerate() {
            proj[(r, c)] = x;
        }
    }
    let mut entries = Vec::new();
    for (a, &i) in keep.iter().enumerate() {
        for (b, &j) in keep.iter().enumerate().skip(a + 1) {
            let v = dense_from_sparse(&g.bracket_basis(i, j), n);
            for (k, c) in ideal.quotient_coordinates(&v).into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((a, b, k, c));
                }
            }
        }
    }
    let names = keep.iter().map(|&i| g.name(i).to_string()).collect();
    let q = LieAlgebra::from_constants_unchecked(keep.len(), entries)?.with_names(names)?;
    Ok((q, proj))
}

/// Structure constants in the basis given by the columns of `p`.
pub fn conjugate(g: &LieAlgebra, p: &RatMatrix) -> Result<LieAlgebra> {
    let n = g.dim();
    if p.rows() != n || p.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.rows().max(p.cols()),
        });
    }
    let inv = p.inverse()?;
    let cols = p.column_vectors();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let b = g.bracket(&cols[i], &cols[j]);
            if b.iter().all(|x| x.is_zero()) {
                continue;
            }
            for (k, c) in sparse_from_dense(&inv.mul_vec(&b)?) {
                entries.push((i, j, k, c));
            }
        }
    }
    let names = (1..=n).map(|i| format!("Y{i}")).collect();
    LieAlgebra::from_constants_unchecked(n, entries)?.with_names(names)
}
