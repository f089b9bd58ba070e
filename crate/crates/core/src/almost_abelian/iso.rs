//! Isomorphism of almost abelian algebras.
//!
//! `R f x|_A R^n` and `R f x|_B R^n` are isomorphic exactly when `A` is
//! similar to `c B` for some nonzero `c`. Similarity is decided by comparing
//! the dimensions of the solution spaces of `X Z = Z Y` (Byrnes-Gauger).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::sparse::sparse_from_entries;
use crate::linalg::{int, nullspace_sparse, RatMatrix, RatPoly, Rational};

/// `a = q^{-1} (c b) q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub c: Rational,
    pub q: RatMatrix,
}

/// Basis of `{Z : x Z = Z y}`.
fn intertwiners(x: &RatMatrix, y: &RatMatrix) -> Vec<RatMatrix> {
    let n = x.rows();
    let var = |r: usize, c: usize| r * n + c;
    let mut rows = Vec::new();
    for r in 0..n {
        for c in 0..n {
            let mut e = Vec::new();
            for k in 0..n {
                if !x[(r, k)].is_zero() {
                    e.push((var(k, c), x[(r, k)].clone()));
                }
                if !y[(k, c)].is_zero() {
                    e.push((var(r, k), -y[(k, c)].clone()));
                }
            }
            rows.push(sparse_from_entries(e));
        }
    }
    nullspace_sparse(rows, n * n)
        .into_iter()
        .map(|v| RatMatrix::from_rows(v.chunks(n).map(|r| r.to_vec()).collect()).unwrap())
        .collect()
}

/// An invertible `q` with `x q = q y`, when `x` and `y` are similar.
pub fn similar(x: &RatMatrix, y: &RatMatrix) -> Result<Option<RatMatrix>> {
    if !x.is_square() || !y.is_square() {
        return Err(Error::NotSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    if x.rows() != y.rows() {
        return Ok(None);
    }
    if x.rows() == 0 {
        return Ok(Some(RatMatrix::zeros(0, 0)));
    }
    let cxy = intertwiners(x, y);
    if cxy.len() != intertwiners(x, x).len() || cxy.len() != intertwiners(y, y).len() {
        return Ok(None);
    }
    let n = x.rows();
    // An invertible element exists; search integer combinations until one is found.
    for bound in 1i64.. {
        let r = cxy.len();
        let total = (2 * bound + 1).pow(r as u32);
        for mut idx in 0..total {
            let mut m = RatMatrix::zeros(n, n);
            for z in &cxy {
                let c = idx % (2 * bound + 1) - bound;
                idx /= 2 * bound + 1;
                if c != 0 {
                    m = m.add(&z.scale(&int(c)))?;
                }
            }
            if !m.det()?.is_zero() {
                return Ok(Some(m));
            }
        }
    }
    unreachable!()
}

/// Nonzero `c` with `c^k = t`, rational.
fn rational_kth_roots(t: &Rational, k: usize) -> Result<Vec<Rational>> {
    Ok(RatPoly::binomial(k, t)
        .rational_roots()?
        .into_iter()
        .map(|(r, _)| r)
        .filter(|r| !r.is_zero())
        .collect())
}

/// Decides whether `R f x|_a R^n` and `R f x|_b R^n` are isomorphic with a
/// rational scale `c`, returning `c` and the conjugating matrix.
pub fn iso_test_almost_abelian(a: &RatMatrix, b: &RatMatrix) -> Result<Option<IsoWitness>> {
    if !a.is_square() || !b.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if b.rows() != n {
        return Ok(None);
    }
    let pa = a.char_poly()?;
    let pb = b.char_poly()?;
    // Coefficient of x^{n-k} scales by c^k under b -> c b.
    let k = (1..=n).find(|k| !pb.coeff(n - k).is_zero());
    let cands = match k {
        None => vec![int(1)],
        Some(k) => {
            let ca = pa.coeff(n - k);
            if ca.is_zero() {
                return Ok(None);
            }
            rational_kth_roots(&(ca / pb.coeff(n - k)), k)?
        }
    };
    for c in cands {
        let cb = b.scale(&c);
        if cb.char_poly()? != pa {
            continue;
        }
        if let Some(q) = similar(&cb, a)? {
            return Ok(Some(IsoWitness { c, q }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(a: &RatMatrix, b: &RatMatrix, w: &IsoWitness) {
        let lhs = w.q.inverse().unwrap().mul(&b.scale(&w.c)).unwrap().mul(&w.q).unwrap();
        assert_eq!(&lhs, a);
    }

    #[test]
    fn scaled_rotation() {
        let a = RatMatrix::from_i64(&[&[0, 2], &[-2, 0]]);
        let b = RatMatrix::from_i64(&[&[0, -1], &[1, 0]]);
        let w = iso_test_almost_abelian(&a, &b).unwrap().unwrap();
        check(&a, &b, &w);
    }

    #[test]
    fn jordan_vs_diagonal() {
        let a = RatMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let b = RatMatrix::identity(2);
        assert_eq!(iso_test_almost_abelian(&a, &b).unwrap(), None);
    }

    #[test]
    fn nilpotent_types() {
        let j = RatMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(iso_test_almost_abelian(&j.scale(&int(5)), &j).unwrap().is_some());
        assert_eq!(iso_test_almost_abelian(&RatMatrix::zeros(2, 2), &j).unwrap(), None);
    }

    proptest! {
        #[test]
        fn conjugates_are_detected(entries in proptest::collection::vec(-3i64..=3, 9),
                                   p in proptest::collection::vec(-2i64..=2, 9),
                                   c in prop_oneof![Just(1i64), Just(-2), Just(3)]) {
            let a = RatMatrix::from_rows(entries.chunks(3).map(|r| r.iter().map(|x| int(*x)).collect()).collect()).unwrap();
            let p = RatMatrix::from_rows(p.chunks(3).map(|r| r.iter().map(|x| int(*x)).collect()).collect()).unwrap();
            prop_assume!(!p.det().unwrap().is_zero());
            let b = p.inverse().unwrap().mul(&a).unwrap().mul(&p).unwrap().scale(&int(c));
            let w = iso_test_almost_abelian(&a, &b).unwrap();
            prop_assert!(w.is_some());
            let w = w.unwrap();
            let lhs = w.q.inverse().unwrap().mul(&b.scale(&w.c)).unwrap().mul(&w.q).unwrap();
            prop_assert_eq!(lhs, a);
        }
    }
}
