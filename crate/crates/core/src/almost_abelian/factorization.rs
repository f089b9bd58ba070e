//! Factorizations of a polynomial into binomials `x^d - r`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{RatPoly, Rational};

/// Binomial factors `(d, r)` standing for `x^d - r`, sorted by `(d, r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinomialFactorization {
    pub factors: Vec<(usize, Rational)>,
}

impl BinomialFactorization {
    pub fn new(mut factors: Vec<(usize, Rational)>) -> Self {
        factors.sort();
        BinomialFactorization { factors }
    }

    pub fn product(&self) -> RatPoly {
        self.factors
            .iter()
            .fold(RatPoly::one(), |acc, (d, r)| acc.mul(&RatPoly::binomial(*d, r)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|(d, _)| *d).collect()
    }
}

impl fmt::Display for BinomialFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (d, r) in &self.factors {
            write!(f, "({})", RatPoly::binomial(*d, r))?;
        }
        Ok(())
    }
}

/// Values `r` (nonzero, rational) with `x^d - r` dividing `p`.
fn binomial_divisors(p: &RatPoly, d: usize) -> Result<Vec<Rational>> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    // p mod (x^d - r) = sum_j R_j(r) x^j with R_j(r) = sum_{k = j mod d} p_k r^(k / d).
    let mut g = RatPoly::zero();
    for j in 0..d {
        let mut coeffs = vec![Rational::zero(); deg / d + 1];
        let mut k = j;
        while k <= deg {
            coeffs[k / d] = p.coeff(k);
            k += d;
        }
        g = g.gcd(&RatPoly::new(coeffs));
    }
    if g.is_zero() || g.degree() == Some(0) {
        return Ok(Vec::new());
    }
    Ok(g.rational_roots()?
        .into_iter()
        .map(|(r, _)| r)
        .filter(|r| !r.is_zero())
        .collect())
}

/// Every factorization of the monic `p` into binomials with rational
/// constants, each listed once, in increasing order.
pub fn enumerate_factorizations(p: &RatPoly) -> Result<Vec<BinomialFactorization>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if p.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let mut out = Vec::new();
    recurse(p, None, &mut Vec::new(), &mut out)?;
    out.sort();
    Ok(out)
}

fn recurse(
    p: &RatPoly,
    min: Option<&(usize, Rational)>,
    current: &mut Vec<(usize, Rational)>,
    out: &mut Vec<BinomialFactorization>,
) -> Result<()> {
    let deg = p.degree().unwrap();
    if deg == 0 {
        out.push(BinomialFactorization::new(current.clone()));
        return Ok(());
    }
    let start = min.map_or(1, |m| m.0);
    for d in start..=deg {
        for r in binomial_divisors(p, d)? {
            let f = (d, r.clone());
            if min.is_some_and(|m| &f < m) {
                continue;
            }
            let q = p.div_exact(&RatPoly::binomial(d, &r))?;
            current.push(f.clone());
            recurse(&q, Some(&f), current, out)?;
            current.pop();
        }
    }
    Ok(())
}

/// Whether some real `eta` satisfies `eta^{n_i} = q_i` for all `i`.
///
/// With `g = gcd(n_i)`, `m_i = n_i / g` and `sum a_i m_i = 1`, any solution
/// has `eta^g = t := prod q_i^{a_i}`; conversely `t^{m_i} = q_i` and a real
/// `g`-th root of `t` give one.
pub fn common_real_root(pairs: &[(usize, Rational)]) -> bool {
    if pairs.is_empty() {
        return true;
    }
    if pairs.iter().any(|(_, q)| q.is_zero()) {
        return false;
    }
    let g = pairs.iter().fold(0usize, |acc, (n, _)| acc.gcd(n));
    let ms: Vec<i64> = pairs.iter().map(|(n, _)| (n / g) as i64).collect();
    let coeffs = bezout(&ms);
    let mut t = Rational::one();
    for (a, (_, q)) in coeffs.iter().zip(pairs) {
        t *= Pow::pow(q.clone(), *a as i32);
    }
    let powers_match = ms
        .iter()
        .zip(pairs)
        .all(|(m, (_, q))| &Pow::pow(t.clone(), *m as i32) == q);
    powers_match && (g % 2 == 1 || t.is_positive())
}

/// Integers `a_i` with `sum a_i m_i = gcd(m)`.
fn bezout(ms: &[i64]) -> Vec<i64> {
    let mut coeffs = vec![0i64; ms.len()];
    let mut g = 0i64;
    for (i, &m) in ms.iter().enumerate() {
        let e = g.extended_gcd(&m);
        for c in coeffs.iter_mut().take(i) {
            *c *= e.x;
        }
        coeffs[i] = e.y;
        g = e.gcd;
    }
    coeffs
}

fn matchings<T>(
    f1: &[(usize, T)],
    f2: &[(usize, T)],
    used: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let i = chosen.len();
    if i == f1.len() {
        return visit(chosen);
    }
    for j in 0..f2.len() {
        if used[j] || f2[j].0 != f1[i].0 {
            continue;
        }
        used[j] = true;
        chosen.push(j);
        let found = matchings(f1, f2, used, chosen, visit);
        chosen.pop();
        used[j] = false;
        if found {
            return true;
        }
    }
    false
}

/// Two factorizations of the same polynomial are equivalent when, after
/// matching factors of equal degree, a single real `eta` has `eta^{n_i} = r_i / s_i`.
pub fn factorizations_equivalent(f1: &BinomialFactorization, f2: &BinomialFactorization) -> Result<bool> {
    if f1.product() != f2.product() {
        return Err(Error::DifferentTargets);
    }
    let mut d1 = f1.degrees();
    let mut d2 = f2.degrees();
    d1.sort();
    d2.sort();
    if d1 != d2 {
        return Ok(false);
    }
    let a = &f1.factors;
    let b = &f2.factors;
    let mut visit = |m: &[usize]| {
        let pairs: Vec<(usize, Rational)> = m
            .iter()
            .enumerate()
            .map(|(i, &j)| (a[i].0, &a[i].1 / &b[j].1))
            .collect();
        common_real_root(&pairs)
    };
    Ok(matchings(a, b, &mut vec![false; b.len()], &mut Vec::new(), &mut visit))
}

/// Greedy grouping into equivalence classes; returns class representatives' indices.
pub fn equivalence_classes(fs: &[BinomialFactorization]) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'outer: for (i, f) in fs.iter().enumerate() {
        for c in classes.iter_mut() {
            if factorizations_equivalent(&fs[c[0]], f)? {
                c.push(i);
                continue 'outer;
            }
        }
        classes.push(vec![i]);
    }
    Ok(classes)
}

/// True when every real number of the form `alpha^d` (`alpha` a root, `d` up
/// to the degree) is rational, so rational enumeration finds every real
/// binomial factorization.
pub fn rationally_complete(p: &RatPoly) -> Result<bool> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    for d in 1..=deg {
        let q = p.root_powers(d)?;
        if q.degree() == Some(0) {
            continue;
        }
        if q.count_real_roots()? != q.rational_roots()?.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};
    use proptest::prelude::*;

    fn count_classes(p: &RatPoly) -> usize {
        equivalence_classes(&enumerate_factorizations(p).unwrap())
            .unwrap()
            .len()
    }

    #[test]
    fn x4_minus_1() {
        let p = RatPoly::from_i64(&[-1, 0, 0, 0, 1]);
        let fs = enumerate_factorizations(&p).unwrap();
        let shown: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
        assert_eq!(
            shown,
            vec!["(x + 1)(x - 1)(x^2 + 1)", "(x^2 + 1)(x^2 - 1)", "(x^4 - 1)"]
        );
        assert_eq!(count_classes(&p), 3);
    }

    #[test]
    fn four_distinct_eigenvalues() {
        // diag(1, -1, -2, 2): (x^2 - 1)(x^2 - 4) and its splittings.
        let p = RatPoly::from_i64(&[4, 0, -5, 0, 1]);
        let fs = enumerate_factorizations(&p).unwrap();
        assert_eq!(fs.len(), 4);
        assert_eq!(count_classes(&p), 4);
    }

    #[test]
    fn equivalence_basics() {
        let a = BinomialFactorization::new(vec![(1, int(1)), (1, int(-1))]);
        assert!(factorizations_equivalent(&a, &a).unwrap());
        let b = BinomialFactorization::new(vec![(2, int(1))]);
        assert!(!factorizations_equivalent(&a, &b).unwrap());
        assert_eq!(
            factorizations_equivalent(&a, &BinomialFactorization::new(vec![(2, int(4))])),
            Err(Error::DifferentTargets)
        );
    }

    #[test]
    fn same_degrees_but_no_common_scale() {
        let p = RatPoly::from_i64(&[4, 0, -5, 0, 1]);
        let b = BinomialFactorization::new(vec![(1, int(-1)), (1, int(1)), (2, int(4))]);
        let c = BinomialFactorization::new(vec![(1, int(-2)), (1, int(2)), (2, int(1))]);
        assert_eq!(b.product(), p);
        assert!(!factorizations_equivalent(&b, &c).unwrap());
    }

    #[test]
    fn common_root_criterion() {
        assert!(common_real_root(&[(2, int(4)), (3, int(8))]));
        assert!(common_real_root(&[(2, int(4)), (3, int(-8))]));
        assert!(!common_real_root(&[(2, int(4)), (3, int(27))]));
        assert!(common_real_root(&[(2, int(4)), (1, int(-2))]));
        assert!(!common_real_root(&[(2, int(-1))]));
        assert!(common_real_root(&[(4, int(16)), (6, int(64))]));
        assert!(!common_real_root(&[(2, frac(1, 2)), (1, int(1))]));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            enumerate_factorizations(&RatPoly::from_i64(&[0, 1])),
            Err(Error::ZeroConstantTerm)
        );
        assert_eq!(
            enumerate_factorizations(&RatPoly::from_i64(&[1, 2])),
            Err(Error::NotMonic)
        );
    }

    #[test]
    fn completeness_detects_irrational_powers() {
        assert!(rationally_complete(&RatPoly::from_i64(&[2, -2, 1])).unwrap());
        assert!(rationally_complete(&RatPoly::from_i64(&[1, 0, 1])).unwrap());
        assert!(!rationally_complete(&RatPoly::from_i64(&[-2, 0, 1])).unwrap());
        assert!(!rationally_complete(&RatPoly::from_i64(&[-1, -1, 1])).unwrap());
    }

    /// Oracle: brute-force search over monic binomial products with small constants.
    fn brute_force(p: &RatPoly) -> Vec<BinomialFactorization> {
        fn go(
            p: &RatPoly,
            min: (usize, Rational),
            cur: &mut Vec<(usize, Rational)>,
            out: &mut Vec<BinomialFactorization>,
            cands: &[Rational],
        ) {
            if p.degree() == Some(0) {
                out.push(BinomialFactorization::new(cur.clone()));
                return;
            }
            for d in 1..=p.degree().unwrap() {
                for r in cands {
                    let f = (d, r.clone());
                    if f < min {
                        continue;
                    }
                    let (q, rem) = p.div_rem(&RatPoly::binomial(d, r)).unwrap();
                    if rem.is_zero() {
                        cur.push(f.clone());
                        go(&q, f, cur, out, cands);
                        cur.pop();
                    }
                }
            }
        }
        let cands: Vec<Rational> = (-64..=64).filter(|x| *x != 0).map(int).collect();
        let mut out = Vec::new();
        go(p, (0, int(-1000)), &mut Vec::new(), &mut out, &cands);
        out.sort();
        out
    }

    proptest! {
        #[test]
        fn enumeration_matches_brute_force(fs in proptest::collection::vec((1usize..=3, -2i64..=2), 1..=3)) {
            let fs: Vec<(usize, Rational)> = fs.into_iter().filter(|(_, r)| *r != 0).map(|(d, r)| (d, int(r))).collect();
            prop_assume!(!fs.is_empty());
            let p = BinomialFactorization::new(fs).product();
            prop_assert_eq!(enumerate_factorizations(&p).unwrap(), brute_force(&p));
        }

        #[test]
        fn equivalence_is_reflexive_and_symmetric(fs in proptest::collection::vec((1usize..=3, -3i64..=3), 1..=3)) {
            let fs: Vec<(usize, Rational)> = fs.into_iter().filter(|(_, r)| *r != 0).map(|(d, r)| (d, int(r))).collect();
            prop_assume!(!fs.is_empty());
            let all = enumerate_factorizations(&BinomialFactorization::new(fs).product()).unwrap();
            for a in &all {
                prop_assert!(factorizations_equivalent(a, a).unwrap());
                for b in &all {
                    prop_assert_eq!(factorizations_equivalent(a, b).unwrap(), factorizations_equivalent(b, a).unwrap());
                }
            }
        }
    }
}
