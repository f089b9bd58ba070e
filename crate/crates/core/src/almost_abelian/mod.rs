//! Almost abelian Lie algebras `R f x|_A R^n`, where `[f, X] = A X` and
//! `R^n` is an abelian ideal.
//!
//! Such an algebra has a nice basis exactly when `A` is semisimple off its
//! nilpotent part and the characteristic polynomial, with the factor `x^N`
//! of the nilpotent part removed, splits into real binomials `x^d - r`.
//! Nice bases up to equivalence correspond to equivalence classes of such
//! splittings. All decisions here are exact; a numeric hint is reported only
//! when real but irrational constants `r` could occur.

mod factorization;
mod iso;
pub mod numeric;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{int, RatMatrix, RatPoly, Rational, Subspace};
use crate::LieAlgebra;

pub use factorization::{
    common_real_root, enumerate_factorizations, equivalence_classes, factorizations_equivalent, rationally_complete,
    BinomialFactorization,
};
pub use iso::{iso_test_almost_abelian, similar, IsoWitness};
pub use numeric::NumericHint;

/// `R f x|_A R^n` with basis `f, X1, ..., Xn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostAbelian {
    matrix: RatMatrix,
    algebra: LieAlgebra,
}

impl AlmostAbelian {
    pub fn new(a: RatMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let n = a.rows();
        let mut entries = Vec::new();
        for i in 0..n {
            for k in 0..n {
                if !a[(k, i)].is_zero() {
                    entries.push((0, i + 1, k + 1, a[(k, i)].clone()));
                }
            }
        }
        let names = std::iter::once("f".to_string())
            .chain((1..=n).map(|i| format!("X{i}")))
            .collect();
        let algebra = LieAlgebra::from_constants_unchecked(n + 1, entries)?.with_names(names)?;
        Ok(AlmostAbelian { matrix: a, algebra })
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }
}

/// Recognizes `g` as almost abelian in its given basis: some basis element
/// `f` enters every nonzero bracket and never appears in an output.
/// Returns the index of `f` and `A = ad f` on the span of the other basis vectors.
pub fn detect_almost_abelian(g: &LieAlgebra) -> Option<(usize, RatMatrix)> {
    let n = g.dim();
    let candidates: Vec<usize> = match g.brackets().next() {
        None => return None,
        Some((i, j, _)) => vec![i, j],
    };
    'cand: for f in candidates {
        for (i, j, v) in g.brackets() {
            if i != f && j != f {
                continue 'cand;
            }
            if v.iter().any(|(k, _)| *k == f) {
                continue 'cand;
            }
        }
        let others: Vec<usize> = (0..n).filter(|x| *x != f).collect();
        let mut a = RatMatrix::zeros(n - 1, n - 1);
        for (c, &x) in others.iter().enumerate() {
            for (k, val) in g.bracket_basis(f, x) {
                let r = others.iter().position(|o| *o == k).unwrap();
                a[(r, c)] = val;
            }
        }
        return Some((f, a));
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nonexistence {
    /// `A` restricted to its invertible part is not diagonalizable over `C`.
    NotSemisimple,
    /// Certified: no splitting into real binomials exists.
    NoBinomialFactorization,
}

/// A nice basis `f, X_1, ..., X_n` as the columns of an `(n+1) x (n+1)` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceWitness {
    pub basis: RatMatrix,
    pub factorization: BinomialFactorization,
    /// Jordan chain lengths of the nilpotent part.
    pub nilpotent_blocks: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum NiceExistence {
    Exists(NiceWitness),
    Absent(Nonexistence),
    /// Only irrational real binomial constants could work; not decided exactly.
    UnknownIrrational(NumericHint),
}

#[derive(Clone, Debug, PartialEq)]
pub enum NiceCount {
    Exact(u64),
    UnknownIrrational(NumericHint),
}

struct Split {
    nilpotent_multiplicity: usize,
    invertible_part: RatPoly,
    semisimple: bool,
}

fn split(a: &RatMatrix) -> Result<Split> {
    let chi = a.char_poly()?;
    let (nm, q) = chi.strip_zero_roots();
    let s = q.squarefree_part()?;
    let semisimple = a.pow(nm)?.mul(&s.eval_matrix(a)?)?.is_zero();
    Ok(Split {
        nilpotent_multiplicity: nm,
        invertible_part: q,
        semisimple,
    })
}

/// `w, A w, ..., A^{d-1} w`.
pub fn cyclic_basis(a: &RatMatrix, w: &[Rational], d: usize) -> Result<Vec<Vec<Rational>>> {
    let mut out = vec![w.to_vec()];
    for _ in 1..d {
        let next = a.mul_vec(out.last().unwrap())?;
        out.push(next);
    }
    Ok(out)
}

fn kernel(m: &RatMatrix) -> Subspace {
    Subspace::from_vectors(m.cols(), &m.nullspace())
}

/// Candidate vectors in a subspace: echelon basis vectors, their sum, then
/// integer combinations over growing boxes.
fn candidates(basis: &[Vec<Rational>], max_box: i64) -> impl Iterator<Item = Vec<Rational>> + '_ {
    let r = basis.len();
    let combine = move |coeffs: &[i64]| {
        let mut v = vec![Rational::zero(); basis[0].len()];
        for (c, b) in coeffs.iter().zip(basis) {
            if *c != 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x += int(*c) * y;
                }
            }
        }
        v
    };
    let singles = (0..r).map(move |i| {
        let mut c = vec![0; r];
        c[i] = 1;
        combine(&c)
    });
    let sum = std::iter::once(combine(&vec![1; r]));
    let boxes = (2..=max_box).flat_map(move |b| {
        let total = (b + 1).pow(r as u32);
        (0..total).filter_map(move |mut idx| {
            let mut c = vec![0; r];
            for slot in c.iter_mut() {
                *slot = idx % (b + 1);
                idx /= b + 1;
            }
            (c.iter().copied().max() == Some(b)).then(|| combine(&c))
        })
    });
    singles.chain(sum).chain(boxes)
}

/// Jordan chains `v, A v, ..., A^{k-1} v` spanning `ker A^N`, longest first.
fn jordan_chains(a: &RatMatrix, nm: usize) -> Result<Vec<Vec<Vec<Rational>>>> {
    let kernels: Vec<Subspace> = (0..=nm).map(|j| a.pow(j).map(|p| kernel(&p))).collect::<Result<_>>()?;
    let mut chains: Vec<Vec<Vec<Rational>>> = Vec::new();
    for j in (1..=nm).rev() {
        let level: Vec<Vec<Rational>> = chains.iter().map(|c| c[c.len() - j].clone()).collect();
        let mut span = kernels[j - 1].add_vectors(&level);
        for b in kernels[j].basis() {
            if span.contains(&b) {
                continue;
            }
            span = span.add_vectors(std::slice::from_ref(&b));
            chains.push(cyclic_basis(a, &b, j)?);
        }
    }
    debug_assert_eq!(chains.iter().map(|c| c.len()).sum::<usize>(), kernels[nm].dim());
    Ok(chains)
}

fn witness(a: &RatMatrix, nm: usize, fact: &BinomialFactorization) -> Result<NiceWitness> {
    let n = a.rows();
    let chains = jordan_chains(a, nm)?;
    let mut vectors: Vec<Vec<Rational>> = chains.iter().flatten().cloned().collect();
    for (d, r) in &fact.factors {
        let m = a.pow(*d)?.sub(&RatMatrix::identity(n).scale(r))?;
        let k = kernel(&m).basis();
        let before = vectors.len();
        for w in candidates(&k, 6) {
            let block = cyclic_basis(a, &w, *d)?;
            let mut trial = vectors.clone();
            trial.extend(block.iter().cloned());
            if RatMatrix::from_rows(trial.clone())?.rank() == trial.len() {
                vectors = trial;
                break;
            }
        }
        if vectors.len() == before {
            return Err(Error::Internal(format!("no cyclic vector for x^{d} - {r}")));
        }
    }
    let mut p = RatMatrix::zeros(n + 1, n + 1);
    p[(0, 0)] = Rational::one();
    for (c, v) in vectors.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            p[(r + 1, c + 1)] = x.clone();
        }
    }
    Ok(NiceWitness {
        basis: p,
        factorization: fact.clone(),
        nilpotent_blocks: chains.iter().map(|c| c.len()).collect(),
    })
}

pub fn exists_nice(a: &RatMatrix) -> Result<NiceExistence> {
    let s = split(a)?;
    if !s.semisimple {
        return Ok(NiceExistence::Absent(Nonexistence::NotSemisimple));
    }
    let q = &s.invertible_part;
    let fs = if q.degree() == Some(0) {
        vec![BinomialFactorization::new(Vec::new())]
    } else {
        enumerate_factorizations(q)?
    };
    if let Some(f) = fs.first() {
        return Ok(NiceExistence::Exists(witness(a, s.nilpotent_multiplicity, f)?));
    }
    if rationally_complete(q)? {
        Ok(NiceExistence::Absent(Nonexistence::NoBinomialFactorization))
    } else {
        Ok(NiceExistence::UnknownIrrational(numeric::numeric_hint(q)?))
    }
}

/// Number of nice bases of `R f x|_A R^n` up to equivalence.
pub fn count_nice(a: &RatMatrix) -> Result<NiceCount> {
    let s = split(a)?;
    if !s.semisimple {
        return Ok(NiceCount::Exact(0));
    }
    let q = &s.invertible_part;
    if q.degree() == Some(0) {
        return Ok(NiceCount::Exact(1));
    }
    if !rationally_complete(q)? {
        return Ok(NiceCount::UnknownIrrational(numeric::numeric_hint(q)?));
    }
    let fs = enumerate_factorizations(q)?;
    Ok(NiceCount::Exact(equivalence_classes(&fs)?.len() as u64))
}

/// One nice basis per equivalence class, or `None` when the count is not
/// decided exactly.
pub fn nice_witnesses(a: &RatMatrix) -> Result<Option<Vec<NiceWitness>>> {
    let s = split(a)?;
    if !s.semisimple {
        return Ok(Some(Vec::new()));
    }
    let q = &s.invertible_part;
    let nm = s.nilpotent_multiplicity;
    if q.degree() == Some(0) {
        return Ok(Some(vec![witness(a, nm, &BinomialFactorization::new(Vec::new()))?]));
    }
    if !rationally_complete(q)? {
        return Ok(None);
    }
    let fs = enumerate_factorizations(q)?;
    let out = equivalence_classes(&fs)?
        .iter()
        .map(|class| witness(a, nm, &fs[class[0]]))
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(out))
}

/// Indecomposable member with `nu = n`: `A` is the companion matrix of
/// `x^{2^{n-1}} - 1`.
pub fn indecomposable_family(n: usize) -> Result<AlmostAbelian> {
    if !(2..=8).contains(&n) {
        return Err(Error::SizeOutOfRange {
            size: n,
            min: 2,
            max: 8,
        });
    }
    let m = 1usize << (n - 1);
    let mut a = RatMatrix::zeros(m, m);
    a[(0, m - 1)] = Rational::one();
    for i in 0..m - 1 {
        a[(i + 1, i)] = Rational::one();
    }
    AlmostAbelian::new(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::conjugate;
    use crate::niceness::check_nice;

    fn witness_is_nice(a: &RatMatrix) -> NiceWitness {
        let NiceExistence::Exists(w) = exists_nice(a).unwrap() else {
            panic!("expected a nice basis for {a}");
        };
        let g = AlmostAbelian::new(a.clone()).unwrap();
        let t = conjugate(g.algebra(), &w.basis).unwrap();
        assert!(check_nice(&t).is_nice(), "{a}");
        w
    }

    #[test]
    fn reflection_has_two_nice_bases() {
        let a = RatMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        witness_is_nice(&a);
        assert_eq!(count_nice(&a).unwrap(), NiceCount::Exact(2));
    }

    #[test]
    fn jordan_block_with_nonzero_eigenvalue() {
        let a = RatMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            exists_nice(&a).unwrap(),
            NiceExistence::Absent(Nonexistence::NotSemisimple)
        );
        assert_eq!(count_nice(&a).unwrap(), NiceCount::Exact(0));
    }

    #[test]
    fn rotation_with_dilation_is_certified_absent() {
        let a = RatMatrix::from_i64(&[&[1, 1], &[-1, 1]]);
        assert_eq!(
            exists_nice(&a).unwrap(),
            NiceExistence::Absent(Nonexistence::NoBinomialFactorization)
        );
    }

    #[test]
    fn mixed_nilpotent_and_cyclic_parts() {
        let a = RatMatrix::block_diagonal(&[
            &RatMatrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]),
            &RatMatrix::from_i64(&[&[0, 0], &[1, 0]]),
            &RatMatrix::from_i64(&[&[0, -1], &[1, 0]]),
            &RatMatrix::from_i64(&[&[3]]),
        ]);
        let w = witness_is_nice(&a);
        assert_eq!(w.nilpotent_blocks, vec![3, 2]);
        assert_eq!(count_nice(&a).unwrap(), NiceCount::Exact(1));
    }

    #[test]
    fn irrational_case_reports_hint() {
        let a = RatMatrix::from_i64(&[&[0, 2], &[1, 0]]);
        match exists_nice(&a).unwrap() {
            NiceExistence::Exists(_) => {}
            other => panic!("x^2 - 2 is itself binomial: {other:?}"),
        }
        let NiceCount::UnknownIrrational(h) = count_nice(&a).unwrap() else {
            panic!("sqrt 2 eigenvalues are not rationally certified");
        };
        assert_eq!(h.classes, 2);
    }

    #[test]
    fn detection_recovers_matrix() {
        let a = RatMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let g = AlmostAbelian::new(a.clone()).unwrap();
        assert_eq!(detect_almost_abelian(g.algebra()), Some((0, a)));
        assert_eq!(detect_almost_abelian(&crate::standard::sl2()), None);
    }

    #[test]
    fn family_shape() {
        let g = indecomposable_family(3).unwrap();
        assert_eq!(g.matrix().rows(), 4);
        assert!(indecomposable_family(1).is_err());
        assert!(indecomposable_family(9).is_err());
    }
}
