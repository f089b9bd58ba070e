//! Lie algebras given by structure constants in a fixed basis.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::rational::format_vec;
use crate::linalg::sparse::{dense_from_sparse, sparse_from_entries};
use crate::linalg::{RatMatrix, Rational, SparseRow};

/// A finite-dimensional Lie algebra over `Q` with basis `x_0, ..., x_{n-1}`.
///
/// Only brackets `[x_i, x_j]` with `i < j` and nonzero value are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    dim: usize,
    names: Vec<String>,
    brackets: BTreeMap<(usize, usize), SparseRow>,
}

pub fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("X{i}")).collect()
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            names: default_names(dim),
            brackets: BTreeMap::new(),
        }
    }

    /// Builds from entries `c_{ij}^k` (0-based); entries with `i > j` are
    /// antisymmetrized, repeated entries add up. The Jacobi identity is checked.
    pub fn from_constants(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let g = Self::from_constants_unchecked(dim, entries)?;
        g.validate()?;
        Ok(g)
    }

    /// As [`from_constants`](Self::from_constants) without the Jacobi check.
    pub fn from_constants_unchecked(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut acc: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if i == j {
                return Err(Error::InvalidBracket { i, j });
            }
            let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
            acc.entry(key).or_default().push((k, c));
        }
        let brackets = acc
            .into_iter()
            .map(|(key, e)| (key, sparse_from_entries(e)))
            .filter(|(_, v)| !v.is_empty())
            .collect();
        Ok(LieAlgebra {
            dim,
            names: default_names(dim),
            brackets,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: names.len(),
            });
        }
        let mut seen = std::collections::BTreeSet::new();
        for n in &names {
            if n.is_empty() || n.chars().any(char::is_whitespace) || !seen.insert(n.as_str()) {
                return Err(Error::parse(0, format!("invalid or repeated basis name `{n}`")));
            }
        }
        self.names = names;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// Nonzero brackets `[x_i, x_j]`, `i < j`, in lexicographic order.
    pub fn brackets(&self) -> impl Iterator<Item = (usize, usize, &SparseRow)> {
        self.brackets.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// All nonzero `c_{ij}^k` with `i < j`.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        self.brackets()
            .flat_map(|(i, j, v)| v.iter().map(move |(k, c)| (i, j, *k, c)))
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// `[x_i, x_j]` as a sparse vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseRow {
        if i < j {
            self.brackets.get(&(i, j)).cloned().unwrap_or_default()
        } else if i > j {
            self.brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, -c.clone())).collect())
                .unwrap_or_default()
        } else {
            Vec::new()
        }
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        let (key, neg) = if i < j { ((i, j), false) } else { ((j, i), true) };
        let c = self
            .brackets
            .get(&key)
            .and_then(|v| v.iter().find(|(kk, _)| *kk == k).map(|(_, c)| c.clone()))
            .unwrap_or_else(Rational::zero);
        if neg {
            -c
        } else {
            c
        }
    }

    /// `[x_i, v]` for a dense vector `v`.
    pub fn bracket_basis_with(&self, i: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (m, vm) in v.iter().enumerate() {
            if vm.is_zero() || m == i {
                continue;
            }
            for (k, c) in self.bracket_basis(i, m) {
                out[k] += vm * c;
            }
        }
        out
    }

    /// `[x, y]` for dense vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (&(i, j), v) in &self.brackets {
            let c = &x[i] * &y[j] - &x[j] * &y[i];
            if c.is_zero() {
                continue;
            }
            for (k, ck) in v {
                out[*k] += &c * ck;
            }
        }
        out
    }

    /// Matrix of `ad x`; column `j` holds `[x, x_j]`.
    pub fn ad(&self, x: &[Rational]) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for (&(i, j), v) in &self.brackets {
            for (k, c) in v {
                if !x[i].is_zero() {
                    m[(*k, j)] += &x[i] * c;
                }
                if !x[j].is_zero() {
                    m[(*k, i)] -= &x[j] * c;
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> RatMatrix {
        let mut e = vec![Rational::zero(); self.dim];
        e[i] = Rational::from_integer(1.into());
        self.ad(&e)
    }

    /// Checks the Jacobi identity on all basis triples.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        // Triples with all brackets among them zero are skipped.
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, cm) in self.bracket_basis(a, b) {
                            for (t, ct) in self.bracket_basis(m, c) {
                                *acc.entry(t).or_insert_with(Rational::zero) += &cm * ct;
                            }
                        }
                    }
                    let residual: SparseRow = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                    if !residual.is_empty() {
                        return Err(Error::JacobiViolation {
                            i,
                            j,
                            k,
                            residual: format_vec(&dense_from_sparse(&residual, n)),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Same dimension and structure constants, ignoring basis names.
    pub fn same_structure(&self, other: &LieAlgebra) -> bool {
        self.dim == other.dim && self.brackets == other.brackets
    }

    /// Support of the bracket: indices `k` with `c_{ij}^k != 0` for `i < j`.
    pub fn support(&self, i: usize, j: usize) -> Vec<usize> {
        self.bracket_basis(i, j).into_iter().map(|(k, _)| k).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn antisymmetry_and_lookup() {
        let g = LieAlgebra::from_constants(3, [(1, 0, 2, int(1))]).unwrap();
        assert_eq!(g.structure_constant(0, 1, 2), int(-1));
        assert_eq!(g.structure_constant(1, 0, 2), int(1));
        assert_eq!(g.bracket_basis(1, 1), vec![]);
    }

    #[test]
    fn jacobi_violation_is_reported() {
        let e = LieAlgebra::from_constants(3, [(0, 1, 1, int(1)), (1, 2, 0, int(1))]).unwrap_err();
        assert_eq!(
            e,
            Error::JacobiViolation {
                i: 0,
                j: 1,
                k: 2,
                residual: "(1, 0, 0)".into()
            }
        );
    }

    #[test]
    fn rejects_bad_indices() {
        assert!(matches!(
            LieAlgebra::from_constants(2, [(0, 0, 1, int(1))]),
            Err(Error::InvalidBracket { .. })
        ));
        assert!(matches!(
            LieAlgebra::from_constants(2, [(0, 1, 2, int(1))]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn ad_matches_bracket() {
        let g = LieAlgebra::from_constants(3, [(0, 1, 1, int(2)), (0, 2, 2, int(-2)), (1, 2, 0, int(1))]).unwrap();
        let x = vec![int(1), int(2), int(-1)];
        let y = vec![int(0), int(3), int(5)];
        assert_eq!(g.ad(&x).mul_vec(&y).unwrap(), g.bracket(&x, &y));
    }
}
