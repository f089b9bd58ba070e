//! Subspaces of `Q^n` held in reduced row echelon form.

use num_traits::Zero;

use super::rational::Rational;
use super::sparse::{sparse_from_dense, Echelon, Rref};

/// Equality is equality of subspaces, since the echelon form is canonical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    rref: Rref,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            rref: Rref {
                ncols: ambient,
                rows: Vec::new(),
            },
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(ambient, &super::matrix::RatMatrix::identity(ambient).row_vectors())
    }

    pub fn from_vectors(ambient: usize, vs: &[Vec<Rational>]) -> Self {
        Subspace {
            rref: Rref::from_dense_rows(vs, ambient),
        }
    }

    pub fn from_rref(rref: Rref) -> Self {
        Subspace { rref }
    }

    pub fn ambient_dim(&self) -> usize {
        self.rref.ncols
    }

    pub fn dim(&self) -> usize {
        self.rref.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn rref(&self) -> &Rref {
        &self.rref
    }

    /// Echelon basis vectors.
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.rref.dense_rows()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rref.pivots()
    }

    /// Standard coordinates not used as pivots; their cosets form a basis of the quotient.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        self.rref.free_columns()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.rref.contains(v)
    }

    pub fn residual(&self, v: &[Rational]) -> Vec<Rational> {
        self.rref.residual(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut e = Echelon::new(self.ambient_dim());
        for r in self.rref.rows.iter().chain(other.rref.rows.iter()) {
            e.insert(r.clone());
        }
        Subspace { rref: e.finish() }
    }

    pub fn add_vectors(&self, vs: &[Vec<Rational>]) -> Subspace {
        let mut e = Echelon::new(self.ambient_dim());
        for r in &self.rref.rows {
            e.insert(r.clone());
        }
        for v in vs {
            e.insert(sparse_from_dense(v));
        }
        Subspace { rref: e.finish() }
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let n = self.ambient_dim();
        let basis = self.basis();
        if basis.is_empty() {
            return Subspace::zero(n);
        }
        // x = sum a_i u_i lies in `other` iff the residuals combine to zero.
        let res: Vec<Vec<Rational>> = basis.iter().map(|u| other.residual(u)).collect();
        let rows: Vec<Vec<Rational>> = (0..n).map(|c| res.iter().map(|r| r[c].clone()).collect()).collect();
        let coeffs = Rref::from_dense_rows(&rows, basis.len()).nullspace();
        let vs: Vec<Vec<Rational>> = coeffs
            .iter()
            .map(|a| {
                let mut v = vec![Rational::zero(); n];
                for (ai, u) in a.iter().zip(&basis) {
                    if ai.is_zero() {
                        continue;
                    }
                    for (vc, uc) in v.iter_mut().zip(u) {
                        *vc += ai * uc;
                    }
                }
                v
            })
            .collect();
        Subspace::from_vectors(n, &vs)
    }

    /// Coordinates of the image of `v` in the quotient by this subspace, with
    /// respect to the cosets of the complement coordinates.
    pub fn quotient_coordinates(&self, v: &[Rational]) -> Vec<Rational> {
        let r = self.residual(v);
        self.complement_coordinates()
            .into_iter()
            .map(|c| r[c].clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::int;
    use super::*;
    use proptest::prelude::*;

    fn vecs(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|x| int(*x)).collect()).collect()
    }

    #[test]
    fn intersection_of_planes() {
        let u = Subspace::from_vectors(3, &vecs(&[&[1, 0, 0], &[0, 1, 0]]));
        let w = Subspace::from_vectors(3, &vecs(&[&[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(u.intersection(&w), Subspace::from_vectors(3, &vecs(&[&[0, 5, 0]])));
    }

    proptest! {
        #[test]
        fn dimension_formula(a in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 4), 0..4),
                             b in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 4), 0..4)) {
            let to = |v: &Vec<Vec<i64>>| v.iter().map(|r| r.iter().map(|x| int(*x)).collect()).collect::<Vec<_>>();
            let u = Subspace::from_vectors(4, &to(&a));
            let w = Subspace::from_vectors(4, &to(&b));
            let s = u.sum(&w);
            let i = u.intersection(&w);
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
            prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&w));
            prop_assert!(u.is_subspace_of(&s));
        }
    }
}
