//! Monomial equivalence of two nice bases.
//!
//! Two nice bases `{Y_i}` and `{Z_i}` are equivalent when some map
//! `Y_i -> t_i Z_sigma(i)` is an automorphism. Permutations are searched in
//! lexicographic order with support and degree pruning; for each candidate
//! the scales solve `t_i t_j / t_k = a_ij^k / b_{sigma}` in log space: one
//! linear system over `Q` per prime, plus a sign system over GF(2).

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::factor::factorize;
use crate::linalg::{RatMatrix, Rational, Rref};
use crate::LieAlgebra;

use super::check_nice;

/// A nonzero real `(-1)^negative * prod p^e` with rational exponents.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Scale {
    pub negative: bool,
    pub exponents: BTreeMap<BigUint, Rational>,
}

impl Scale {
    pub fn from_rational(q: &Rational) -> Self {
        assert!(!q.is_zero());
        let mut exponents: BTreeMap<BigUint, Rational> = BTreeMap::new();
        for (p, e) in factorize(q.numer().magnitude()) {
            *exponents.entry(p).or_insert_with(Rational::zero) += Rational::from_integer(e.into());
        }
        for (p, e) in factorize(q.denom().magnitude()) {
            *exponents.entry(p).or_insert_with(Rational::zero) -= Rational::from_integer(e.into());
        }
        exponents.retain(|_, e| !e.is_zero());
        Scale {
            negative: q.is_negative(),
            exponents,
        }
    }

    /// Exact value when every exponent is an integer.
    pub fn to_rational(&self) -> Option<Rational> {
        let mut v = Rational::one();
        for (p, e) in &self.exponents {
            if !e.is_integer() {
                return None;
            }
            let base = Rational::from_integer(BigInt::from(p.clone()));
            let k: i32 = e.to_integer().try_into().ok()?;
            v *= Pow::pow(base, k);
        }
        Some(if self.negative { -v } else { v })
    }

    fn mul_pow(&mut self, other: &Scale, k: i64) {
        if k % 2 != 0 && other.negative {
            self.negative = !self.negative;
        }
        for (p, e) in &other.exponents {
            *self.exponents.entry(p.clone()).or_insert_with(Rational::zero) += e * Rational::from_integer(k.into());
        }
        self.exponents.retain(|_, e| !e.is_zero());
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        let parts: Vec<String> = self.exponents.iter().map(|(p, e)| format!("{p}^({e})")).collect();
        write!(f, "{}{}", if self.negative { "-" } else { "" }, parts.join("*"))
    }
}

/// `Y_i -> scales[i] * Z_{sigma[i]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    pub sigma: Vec<usize>,
    pub scales: Vec<Scale>,
}

impl MonomialMap {
    /// Matrix with column `i` equal to `scales[i] e_{sigma[i]}`, when all scales are rational.
    pub fn to_matrix(&self) -> Option<RatMatrix> {
        let n = self.sigma.len();
        let mut m = RatMatrix::zeros(n, n);
        for (i, s) in self.scales.iter().enumerate() {
            m[(self.sigma[i], i)] = s.to_rational()?;
        }
        Some(m)
    }

    /// Exact check on tensors `a` and `b` in log space.
    pub fn verify(&self, a: &LieAlgebra, b: &LieAlgebra) -> bool {
        let n = a.dim();
        if b.dim() != n || self.sigma.len() != n || self.scales.len() != n {
            return false;
        }
        let mut image = vec![false; n];
        for &s in &self.sigma {
            if s >= n || std::mem::replace(&mut image[s], true) {
                return false;
            }
        }
        let count_a = a.constants().count();
        let count_b = b.constants().count();
        if count_a != count_b {
            return false;
        }
        a.constants().all(|(i, j, k, c)| {
            let bc = b.structure_constant(self.sigma[i], self.sigma[j], self.sigma[k]);
            if bc.is_zero() {
                return false;
            }
            let mut lhs = Scale::default();
            lhs.mul_pow(&self.scales[i], 1);
            lhs.mul_pow(&self.scales[j], 1);
            lhs.mul_pow(&self.scales[k], -1);
            lhs == Scale::from_rational(&(c / bc))
        })
    }
}

type Triple = (usize, usize, usize);

fn support(g: &LieAlgebra) -> Vec<Triple> {
    g.constants().map(|(i, j, k, _)| (i, j, k)).collect()
}

fn signature(triples: &[Triple], n: usize) -> Vec<(usize, usize, usize)> {
    let mut sig = vec![(0, 0, 0); n];
    for &(i, j, k) in triples {
        sig[i].0 += 1;
        sig[j].0 += 1;
        sig[k].1 += 1;
        if k == i || k == j {
            sig[k].2 += 1;
        }
    }
    sig
}

struct Search<'a> {
    a: &'a LieAlgebra,
    b: &'a LieAlgebra,
    sig_a: Vec<(usize, usize, usize)>,
    sig_b: Vec<(usize, usize, usize)>,
    // Triples of A whose largest index is the key.
    closing: Vec<Vec<Triple>>,
    supp_b: HashSet<Triple>,
}

impl Search<'_> {
    fn image_in_b(&self, sigma: &[usize], (i, j, k): Triple) -> bool {
        let (x, y) = (sigma[i], sigma[j]);
        self.supp_b.contains(&(x.min(y), x.max(y), sigma[k]))
    }

    fn run(&self, sigma: &mut Vec<usize>, used: &mut [bool]) -> Option<MonomialMap> {
        let d = sigma.len();
        let n = self.a.dim();
        if d == n {
            return solve_scales(self.a, self.b, sigma);
        }
        for cand in 0..n {
            if used[cand] || self.sig_a[d] != self.sig_b[cand] {
                continue;
            }
            sigma.push(cand);
            if self.closing[d].iter().all(|t| self.image_in_b(sigma, *t)) {
                used[cand] = true;
                if let Some(m) = self.run(sigma, used) {
                    return Some(m);
                }
                used[cand] = false;
            }
            sigma.pop();
        }
        None
    }
}

fn solve_scales(a: &LieAlgebra, b: &LieAlgebra, sigma: &[usize]) -> Option<MonomialMap> {
    let n = a.dim();
    let mut rows: Vec<(Triple, Scale)> = Vec::new();
    let mut primes: BTreeSet<BigUint> = BTreeSet::new();
    for (i, j, k, c) in a.constants() {
        let bc = b.structure_constant(sigma[i], sigma[j], sigma[k]);
        let rho = Scale::from_rational(&(c / bc));
        primes.extend(rho.exponents.keys().cloned());
        rows.push(((i, j, k), rho));
    }
    let primes: Vec<BigUint> = primes.into_iter().collect();
    let width = n + primes.len();
    let mut dense: Vec<Vec<Rational>> = Vec::with_capacity(rows.len());
    for ((i, j, k), rho) in &rows {
        let mut r = vec![Rational::zero(); width];
        r[*i] += Rational::one();
        r[*j] += Rational::one();
        r[*k] -= Rational::one();
        for (c, p) in primes.iter().enumerate() {
            r[n + c] = rho.exponents.get(p).cloned().unwrap_or_else(Rational::zero);
        }
        dense.push(r);
    }
    let rref = Rref::from_dense_rows(&dense, width);
    let mut exps = vec![vec![Rational::zero(); primes.len()]; n];
    for row in rref.dense_rows() {
        let p = row.iter().position(|x| !x.is_zero()).unwrap();
        if p >= n {
            return None;
        }
        exps[p] = row[n..].to_vec();
    }
    let signs = solve_gf2(
        n,
        &rows
            .iter()
            .map(|((i, j, k), rho)| {
                let mut r = vec![false; n];
                for x in [i, j, k] {
                    r[*x] ^= true;
                }
                (r, rho.negative)
            })
            .collect::<Vec<_>>(),
    )?;
    let scales = (0..n)
        .map(|i| Scale {
            negative: signs[i],
            exponents: primes
                .iter()
                .zip(&exps[i])
                .filter(|(_, e)| !e.is_zero())
                .map(|(p, e)| (p.clone(), e.clone()))
                .collect(),
        })
        .collect();
    Some(MonomialMap {
        sigma: sigma.to_vec(),
        scales,
    })
}

/// One solution of a linear system over GF(2), free variables zero.
fn solve_gf2(n: usize, eqs: &[(Vec<bool>, bool)]) -> Option<Vec<bool>> {
    let mut rows: Vec<(Vec<bool>, bool)> = eqs.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0[c]) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i].0[c] {
                let (src, rhs) = rows[r].clone();
                for (x, s) in rows[i].0.iter_mut().zip(&src) {
                    *x ^= s;
                }
                rows[i].1 ^= rhs;
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    if rows[r..].iter().any(|(_, rhs)| *rhs) {
        return None;
    }
    let mut sol = vec![false; n];
    for (row, c) in pivots {
        sol[c] = rows[row].1;
    }
    Some(sol)
}

/// Searches for a monomial automorphism taking the basis given by the columns
/// of `basis_a` to the one given by `basis_b` (both in `g`-coordinates).
pub fn monomial_equivalent(g: &LieAlgebra, basis_a: &RatMatrix, basis_b: &RatMatrix) -> Result<Option<MonomialMap>> {
    let a = crate::lie::conjugate(g, basis_a)?;
    let b = crate::lie::conjugate(g, basis_b)?;
    if !check_nice(&a).is_nice() {
        return Err(Error::InputBasisNotNice { which: 'a' });
    }
    if !check_nice(&b).is_nice() {
        return Err(Error::InputBasisNotNice { which: 'b' });
    }
    Ok(monomial_equivalent_tensors(&a, &b))
}

/// As [`monomial_equivalent`] on structure constants already in the two bases.
pub fn monomial_equivalent_tensors(a: &LieAlgebra, b: &LieAlgebra) -> Option<MonomialMap> {
    let n = a.dim();
    if b.dim() != n {
        return None;
    }
    let supp_a = support(a);
    let supp_b = support(b);
    if supp_a.len() != supp_b.len() {
        return None;
    }
    let mut closing = vec![Vec::new(); n];
    for &t in &supp_a {
        closing[t.0.max(t.1).max(t.2)].push(t);
    }
    let search = Search {
        a,
        b,
        sig_a: signature(&supp_a, n),
        sig_b: signature(&supp_b, n),
        closing,
        supp_b: supp_b.into_iter().collect(),
    };
    search.run(&mut Vec::with_capacity(n), &mut vec![false; n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};
    use crate::standard;

    #[test]
    fn scaled_filiform_is_equivalent() {
        let g = standard::filiform(3).unwrap();
        let b = RatMatrix::diagonal(&[int(2), int(1), int(2)]);
        let m = monomial_equivalent(&g, &RatMatrix::identity(3), &b).unwrap().unwrap();
        assert_eq!(m.sigma, vec![0, 1, 2]);
        let tb = crate::lie::conjugate(&g, &b).unwrap();
        assert!(m.verify(&g, &tb));
        let p = m.to_matrix().unwrap();
        assert!(crate::lie::conjugate(&tb, &p).unwrap().same_structure(&g));
    }

    #[test]
    fn sl2_bases_with_different_supports_are_inequivalent() {
        let g = standard::sl2();
        let b = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 1], &[0, 1, -1]]);
        assert_eq!(monomial_equivalent(&g, &RatMatrix::identity(3), &b).unwrap(), None);
    }

    #[test]
    fn non_nice_input_is_rejected() {
        let g = standard::heisenberg3();
        let b = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]]);
        assert_eq!(
            monomial_equivalent(&g, &RatMatrix::identity(3), &b),
            Err(Error::InputBasisNotNice { which: 'b' })
        );
    }

    #[test]
    fn rational_rescaling() {
        let a = LieAlgebra::from_constants(2, [(0, 1, 1, int(1))]).unwrap();
        let b = LieAlgebra::from_constants(2, [(0, 1, 1, int(2))]).unwrap();
        let m = monomial_equivalent_tensors(&a, &b).unwrap();
        assert_eq!(m.scales[0].to_rational(), Some(frac(1, 2)));
        assert!(m.verify(&a, &b));
    }

    #[test]
    fn irrational_scales_are_found() {
        // Rotation-type almost abelian algebra; matching needs t_1^2 = 1/2.
        let a = LieAlgebra::from_constants(3, [(0, 1, 2, int(1)), (0, 2, 1, int(-1))]).unwrap();
        let b = LieAlgebra::from_constants(3, [(0, 1, 2, int(2)), (0, 2, 1, int(-1))]).unwrap();
        let m = monomial_equivalent_tensors(&a, &b).unwrap();
        assert!(m.verify(&a, &b));
        assert_eq!(m.scales[0].to_rational(), None);
        assert_eq!(m.scales[0].to_string(), "2^(-1/2)");
    }

    #[test]
    fn sign_obstruction() {
        // t_1^2 = -1 has no real solution.
        let a = LieAlgebra::from_constants(3, [(0, 1, 2, int(1)), (0, 2, 1, int(-1))]).unwrap();
        let b = LieAlgebra::from_constants(3, [(0, 1, 2, int(1)), (0, 2, 1, int(1))]).unwrap();
        assert_eq!(monomial_equivalent_tensors(&a, &b), None);
    }

    #[test]
    fn gf2_solver() {
        let eqs = vec![(vec![true, true, false], true), (vec![false, true, true], false)];
        let s = solve_gf2(3, &eqs).unwrap();
        assert!(s[0] ^ s[1]);
        assert!(!(s[1] ^ s[2]));
        assert!(solve_gf2(1, &[(vec![true], true), (vec![true], false)]).is_none());
    }
}
