//! Derivation algebras and pre-Einstein derivations.
//!
//! A derivation `N` is pre-Einstein when it is semisimple with real
//! eigenvalues and `Tr(N D) = Tr(D)` for every derivation `D`. For a nice
//! basis it can be taken diagonal: the diagonal derivations are solutions of
//! `d_k = d_i + d_j` over the support of the bracket, and `N` is the unique
//! diagonal derivation satisfying the trace condition against them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::rational::format_vec;
use crate::linalg::sparse::sparse_from_entries;
use crate::linalg::{int, nullspace_sparse, RatMatrix, Rational, Rref};
use crate::niceness::check_nice;
use crate::LieAlgebra;

/// Basis of `Der(g)`, as matrices acting on columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    pub ambient_dim: usize,
    pub basis: Vec<RatMatrix>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Solves the linear system `D[x_i, x_j] = [D x_i, x_j] + [x_i, D x_j]` in the
/// `n^2` entries of `D`, by sparse row reduction.
pub fn derivation_space(g: &LieAlgebra) -> DerivationSpace {
    let n = g.dim();
    let var = |a: usize, b: usize| a * n + b;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut eqs: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
            for (m, c) in g.bracket_basis(i, j) {
                for k in 0..n {
                    eqs.entry(k).or_default().push((var(k, m), c.clone()));
                }
            }
            for m in 0..n {
                for (k, c) in g.bracket_basis(m, j) {
                    eqs.entry(k).or_default().push((var(m, i), -c));
                }
                for (k, c) in g.bracket_basis(i, m) {
                    eqs.entry(k).or_default().push((var(m, j), -c));
                }
            }
            for (_, e) in eqs {
                let row = sparse_from_entries(e);
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let basis = nullspace_sparse(rows, n * n)
        .into_iter()
        .map(|v| RatMatrix::from_rows(v.chunks(n.max(1)).map(|r| r.to_vec()).collect()).unwrap())
        .collect();
    DerivationSpace { ambient_dim: n, basis }
}

pub fn is_derivation(g: &LieAlgebra, d: &RatMatrix) -> bool {
    let n = g.dim();
    if d.rows() != n || d.cols() != n {
        return false;
    }
    let cols = d.column_vectors();
    for i in 0..n {
        for j in i + 1..n {
            let b = crate::linalg::sparse::dense_from_sparse(&g.bracket_basis(i, j), n);
            let lhs = d.mul_vec(&b).unwrap();
            let r1 = g.bracket_basis_with(j, &cols[i]);
            let r2 = g.bracket_basis_with(i, &cols[j]);
            // [D x_i, x_j] = -[x_j, D x_i]
            if lhs.iter().zip(r1.iter().zip(&r2)).any(|(l, (a, b))| *l != b - a) {
                return false;
            }
        }
    }
    true
}

/// Basis of the diagonal derivations, each as its diagonal.
pub fn diagonal_derivations(g: &LieAlgebra) -> Vec<Vec<Rational>> {
    let n = g.dim();
    let rows = g
        .constants()
        .map(|(i, j, k, _)| sparse_from_entries([(k, Rational::one()), (i, -Rational::one()), (j, -Rational::one())]));
    Rref::from_rows(rows.filter(|r| !r.is_empty()).collect::<Vec<_>>(), n).nullspace()
}

/// Diagonal pre-Einstein derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreEinstein {
    pub diagonal: Vec<Rational>,
}

impl PreEinstein {
    pub fn matrix(&self) -> RatMatrix {
        RatMatrix::diagonal(&self.diagonal)
    }

    /// Eigenvalues with multiplicities.
    pub fn spectrum(&self) -> BTreeMap<Rational, usize> {
        let mut s = BTreeMap::new();
        for d in &self.diagonal {
            *s.entry(d.clone()).or_insert(0) += 1;
        }
        s
    }

    /// Every eigenvalue has multiplicity one.
    pub fn has_simple_spectrum(&self) -> bool {
        self.spectrum().values().all(|m| *m == 1)
    }

    /// Pre-Einstein derivation of a direct sum.
    pub fn block_sum(&self, other: &PreEinstein) -> PreEinstein {
        let mut diagonal = self.diagonal.clone();
        diagonal.extend(other.diagonal.iter().cloned());
        PreEinstein { diagonal }
    }
}

impl fmt::Display for PreEinstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "diag{}", format_vec(&self.diagonal))
    }
}

/// Outcome of checking a diagonal candidate against the full derivation algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PreEinsteinCheck {
    Certified,
    NotADerivation,
    TraceMismatch {
        derivation: RatMatrix,
        trace_nd: Rational,
        trace_d: Rational,
    },
}

impl PreEinsteinCheck {
    pub fn is_certified(&self) -> bool {
        matches!(self, PreEinsteinCheck::Certified)
    }
}

pub fn pre_einstein_general_check(g: &LieAlgebra, diagonal: &[Rational]) -> Result<PreEinsteinCheck> {
    if diagonal.len() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: diagonal.len(),
        });
    }
    if !is_derivation(g, &RatMatrix::diagonal(diagonal)) {
        return Ok(PreEinsteinCheck::NotADerivation);
    }
    for d in derivation_space(g).basis {
        let trace_d = d.trace()?;
        let trace_nd: Rational = diagonal.iter().zip(d.diagonal_entries()).map(|(a, b)| a * b).sum();
        if trace_nd != trace_d {
            return Ok(PreEinsteinCheck::TraceMismatch {
                derivation: d,
                trace_nd,
                trace_d,
            });
        }
    }
    Ok(PreEinsteinCheck::Certified)
}

/// Leading principal minors of the Gram matrix `Tr(D_a D_b)` are all positive.
pub fn gram_positive_definite(diagonals: &[Vec<Rational>]) -> bool {
    let g = gram(diagonals);
    (1..=diagonals.len()).all(|k| {
        let mut m = RatMatrix::zeros(k, k);
        for r in 0..k {
            for c in 0..k {
                m[(r, c)] = g[(r, c)].clone();
            }
        }
        m.det().unwrap() > Rational::zero()
    })
}

fn gram(diagonals: &[Vec<Rational>]) -> RatMatrix {
    let r = diagonals.len();
    let mut g = RatMatrix::zeros(r, r);
    for a in 0..r {
        for b in 0..r {
            g[(a, b)] = diagonals[a].iter().zip(&diagonals[b]).map(|(x, y)| x * y).sum();
        }
    }
    g
}

/// Pre-Einstein derivation of an algebra given in a nice basis, certified
/// against the full derivation algebra.
pub fn pre_einstein_nice(g: &LieAlgebra) -> Result<PreEinstein> {
    if !check_nice(g).is_nice() {
        return Err(Error::NotNice);
    }
    let ds = diagonal_derivations(g);
    let n = g.dim();
    let mut diagonal = vec![Rational::zero(); n];
    if !ds.is_empty() {
        let traces: Vec<Rational> = ds.iter().map(|d| d.iter().sum()).collect();
        let x = gram(&ds).inverse()?.mul_vec(&traces)?;
        for (xa, d) in x.iter().zip(&ds) {
            for (out, di) in diagonal.iter_mut().zip(d) {
                *out += xa * di;
            }
        }
    }
    match pre_einstein_general_check(g, &diagonal)? {
        PreEinsteinCheck::Certified => Ok(PreEinstein { diagonal }),
        other => Err(Error::PreEinsteinVerification(format!("{other:?}"))),
    }
}

/// Closed form `(d_1, d_2)` of the pre-Einstein derivation of `L_n`, whose
/// diagonal is `(d_1, d_2, d_1 + d_2, ..., (n-2) d_1 + d_2)`.
pub fn filiform_pre_einstein(n: usize) -> Result<(Rational, Rational)> {
    if n < 3 {
        return Err(Error::LnTooSmall(n));
    }
    let n = int(n as i64);
    let denom = &n * &n * &n - int(3) * &n * &n + int(2) * &n + int(12);
    let d1 = int(12) / &denom;
    let d2 = (&n * &n * &n - int(3) * &n * &n - int(4) * &n + int(24)) / denom;
    Ok((d1, d2))
}

/// Diagonal of the closed-form `L_n` pre-Einstein derivation.
pub fn filiform_pre_einstein_diagonal(n: usize) -> Result<Vec<Rational>> {
    let (d1, d2) = filiform_pre_einstein(n)?;
    let mut d = vec![d1.clone()];
    d.extend((0..n - 1).map(|k| &d1 * int(k as i64) + &d2));
    Ok(d)
}

pub fn spectra_disjoint(a: &PreEinstein, b: &PreEinstein) -> bool {
    let sb = b.spectrum();
    a.spectrum().keys().all(|x| !sb.contains_key(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;
    use crate::standard;

    #[test]
    fn heisenberg_derivations() {
        let h = standard::heisenberg3();
        assert_eq!(derivation_space(&h).dim(), 6);
        let p = pre_einstein_nice(&h).unwrap();
        assert_eq!(p.diagonal, vec![frac(2, 3), frac(2, 3), frac(4, 3)]);
    }

    #[test]
    fn wrong_candidate_is_refuted() {
        let h = standard::heisenberg3();
        let r = pre_einstein_general_check(&h, &[frac(1, 2), frac(1, 2), int(1)]).unwrap();
        assert!(matches!(r, PreEinsteinCheck::TraceMismatch { .. }));
        let r = pre_einstein_general_check(&h, &[int(1), int(1), int(1)]).unwrap();
        assert_eq!(r, PreEinsteinCheck::NotADerivation);
    }

    #[test]
    fn semisimple_algebras_have_inner_derivations_only() {
        assert_eq!(derivation_space(&standard::sl2()).dim(), 3);
        assert_eq!(derivation_space(&standard::so3()).dim(), 3);
        assert_eq!(pre_einstein_nice(&standard::sl2()).unwrap().diagonal, vec![int(0); 3]);
    }

    #[test]
    fn non_nice_input_is_rejected() {
        assert_eq!(pre_einstein_nice(&standard::n6()), Err(Error::NotNice));
    }

    #[test]
    fn filiform_closed_form_small() {
        assert_eq!(filiform_pre_einstein(3).unwrap(), (frac(2, 3), frac(2, 3)));
        assert_eq!(filiform_pre_einstein(2), Err(Error::LnTooSmall(2)));
    }

    #[test]
    fn gram_of_independent_diagonals() {
        let ds = diagonal_derivations(&standard::filiform(5).unwrap());
        assert_eq!(ds.len(), 2);
        assert!(gram_positive_definite(&ds));
    }
}
