//! Univariate polynomials over the rationals.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor::divisors;
use super::matrix::RatMatrix;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Coefficients stored lowest degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|c| int(*c)).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut v = vec![Rational::zero(); deg + 1];
        v[deg] = c;
        Self::new(v)
    }

    /// `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    /// `x^d - r`.
    pub fn binomial(d: usize, r: &Rational) -> Self {
        let mut v = vec![Rational::zero(); d + 1];
        v[0] = -r.clone();
        v[d] += Rational::one();
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Multiplicity of 0 as a root.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `x^k` for the largest possible `k`.
    pub fn strip_zero_roots(&self) -> (usize, RatPoly) {
        let k = self.zero_root_multiplicity();
        (k, RatPoly::new(self.coeffs[k.min(self.coeffs.len())..].to_vec()))
    }

    pub fn add(&self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, s: &Rational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        RatPoly::new(v)
    }

    pub fn pow(&self, k: usize) -> RatPoly {
        (0..k).fold(RatPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_matrix(&self, a: &RatMatrix) -> Result<RatMatrix> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let n = a.rows();
        let mut acc = RatMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a)?.add(&RatMatrix::identity(n).scale(c))?;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Result<RatPoly> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lc.recip()))
    }

    /// Quotient and remainder with `deg r < deg d`.
    pub fn div_rem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((RatPoly::zero(), RatPoly::zero()));
        };
        if nd < dd {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &r[k + dd] / lc;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((RatPoly::new(q), RatPoly::new(r)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, d: &RatPoly) -> Result<RatPoly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!("{d} does not divide {self}")));
        }
        Ok(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic().unwrap()
        }
    }

    /// Monic product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Result<RatPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g)?.monic()
    }

    /// Yun's decomposition: `self = lc * prod_i s_i^i` with squarefree, coprime `s_i`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(RatPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic()?;
        let mut out = Vec::new();
        if f.degree() == Some(0) {
            return Ok(out);
        }
        let fp = f.derivative();
        let mut a = f.gcd(&fp);
        let mut b = f.div_exact(&a)?;
        let mut c = fp.div_exact(&a)?;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree() != Some(0) {
            a = b.gcd(&d);
            b = b.div_exact(&a)?;
            c = d.div_exact(&a)?;
            if a.degree() != Some(0) {
                out.push((a.clone(), i));
            }
            d = c.sub(&b.derivative());
            i += 1;
        }
        Ok(out)
    }

    /// Integer coefficients with gcd 1 and positive leading coefficient.
    pub fn primitive_integer_coeffs(&self) -> Result<Vec<BigInt>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().sign() == Sign::Minus {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Ok(ints.into_iter().map(|c| c / &g * &sign).collect())
    }

    /// Distinct rational roots with multiplicities, in increasing order.
    pub fn rational_roots(&self) -> Result<Vec<(Rational, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (zeros, rest) = self.strip_zero_roots();
        let mut roots: Vec<(Rational, usize)> = Vec::new();
        if zeros > 0 {
            roots.push((Rational::zero(), zeros));
        }
        if rest.degree().unwrap_or(0) > 0 {
            let sf = rest.squarefree_part()?;
            let ints = sf.primitive_integer_coeffs()?;
            let a0 = ints[0].magnitude().clone();
            let an = ints.last().unwrap().magnitude().clone();
            let ps = divisors(&a0);
            let qs = divisors(&an);
            let mut cands: Vec<Rational> = Vec::new();
            for p in &ps {
                for q in &qs {
                    let r = Rational::new(BigInt::from(p.clone()), BigInt::from(q.clone()));
                    cands.push(-r.clone());
                    cands.push(r);
                }
            }
            cands.sort();
            cands.dedup();
            let mut remaining = sf.degree().unwrap();
            for r in cands {
                if remaining == 0 {
                    break;
                }
                if sf.eval(&r).is_zero() {
                    remaining -= 1;
                    let lin = RatPoly::linear_root(&r);
                    let mut m = 0;
                    let mut p = rest.clone();
                    loop {
                        let (q, rem) = p.div_rem(&lin)?;
                        if !rem.is_zero() {
                            break;
                        }
                        m += 1;
                        p = q;
                    }
                    roots.push((r, m));
                }
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(roots)
    }

    /// Number of distinct real roots, by Sturm's theorem.
    pub fn count_real_roots(&self) -> Result<usize> {
        let s0 = self.squarefree_part()?;
        if s0.degree() == Some(0) {
            return Ok(0);
        }
        let mut seq = vec![s0.clone(), s0.derivative()];
        loop {
            let n = seq.len();
            let r = seq[n - 2].div_rem(&seq[n - 1])?.1;
            if r.is_zero() {
                break;
            }
            seq.push(r.neg());
        }
        let changes = |signs: Vec<Ordering>| {
            let nz: Vec<Ordering> = signs.into_iter().filter(|s| *s != Ordering::Equal).collect();
            nz.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let sign = |c: &Rational| c.cmp(&Rational::zero());
        let at_pos = seq.iter().map(|p| sign(p.leading().unwrap())).collect();
        let at_neg = seq
            .iter()
            .map(|p| {
                let s = sign(p.leading().unwrap());
                if p.degree().unwrap() % 2 == 1 {
                    s.reverse()
                } else {
                    s
                }
            })
            .collect();
        Ok(changes(at_neg) - changes(at_pos))
    }

    /// Polynomial whose roots are the `d`-th powers of the roots of `self`
    /// (monic, same degree, multiplicities kept).
    pub fn root_powers(&self, d: usize) -> Result<RatPoly> {
        let f = self.monic()?;
        let m = f.degree().unwrap();
        if m == 0 {
            return Ok(RatPoly::one());
        }
        let a = |i: usize| f.coeff(i);
        // Newton's identities for the power sums p_k of the roots.
        let top = m * d;
        let mut p = vec![Rational::zero(); top + 1];
        for k in 1..=top {
            let mut s = Rational::zero();
            for i in 1..k.min(m + 1) {
                s += a(m - i) * &p[k - i];
            }
            if k <= m {
                s += a(m - k) * int(k as i64);
            }
            p[k] = -s;
        }
        let power: Vec<Rational> = (0..=m).map(|j| p[j * d].clone()).collect();
        let mut e = vec![Rational::one()];
        for k in 1..=m {
            let mut s = Rational::zero();
            for i in 1..=k {
                let t = &e[k - i] * &power[i];
                if i % 2 == 1 {
                    s += t;
                } else {
                    s -= t;
                }
            }
            e.push(s / int(k as i64));
        }
        let mut coeffs = vec![Rational::zero(); m + 1];
        for (k, ek) in e.into_iter().enumerate() {
            coeffs[m - k] = if k % 2 == 0 { ek } else { -ek };
        }
        Ok(RatPoly::new(coeffs))
    }

    /// Numeric coefficients, lowest degree first.
    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(super::rational::to_f64).collect()
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::frac;
    use super::*;
    use proptest::prelude::*;

    fn from_roots(roots: &[Rational]) -> RatPoly {
        roots
            .iter()
            .fold(RatPoly::one(), |acc, r| acc.mul(&RatPoly::linear_root(r)))
    }

    #[test]
    fn display() {
        assert_eq!(RatPoly::from_i64(&[-1, 0, 0, 0, 1]).to_string(), "x^4 - 1");
        assert_eq!(
            RatPoly::new(vec![frac(1, 2), int(-3), int(2)]).to_string(),
            "2*x^2 - 3*x + 1/2"
        );
    }

    #[test]
    fn division() {
        let p = RatPoly::from_i64(&[-1, 0, 0, 0, 1]);
        let (q, r) = p.div_rem(&RatPoly::from_i64(&[1, 0, 1])).unwrap();
        assert_eq!(q, RatPoly::from_i64(&[-1, 0, 1]));
        assert!(r.is_zero());
        assert_eq!(p.div_rem(&RatPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn roots_with_multiplicity() {
        let p = from_roots(&[frac(2, 3), frac(2, 3), int(-5), int(0)]).mul(&RatPoly::from_i64(&[1, 0, 1]));
        assert_eq!(
            p.rational_roots().unwrap(),
            vec![(int(-5), 1), (int(0), 1), (frac(2, 3), 2)]
        );
        assert_eq!(RatPoly::from_i64(&[-2, 0, 1]).rational_roots().unwrap(), vec![]);
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(RatPoly::from_i64(&[-2, 0, 1]).count_real_roots().unwrap(), 2);
        assert_eq!(RatPoly::from_i64(&[1, 0, 1]).count_real_roots().unwrap(), 0);
        assert_eq!(from_roots(&[int(1), int(1), int(3)]).count_real_roots().unwrap(), 2);
        assert_eq!(RatPoly::from_i64(&[-1, 0, 0, 1]).count_real_roots().unwrap(), 1);
    }

    #[test]
    fn root_powers_of_cyclotomic() {
        let q = RatPoly::from_i64(&[1, 0, 1]);
        assert_eq!(q.root_powers(2).unwrap(), RatPoly::from_i64(&[1, 2, 1]));
        assert_eq!(q.root_powers(4).unwrap(), RatPoly::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn squarefree_decomposition() {
        let a = RatPoly::from_i64(&[1, 0, 1]);
        let b = RatPoly::from_i64(&[-3, 1]);
        let p = a.mul(&b).mul(&b).mul(&b);
        assert_eq!(p.squarefree_decomposition().unwrap(), vec![(a, 1), (b, 3)]);
    }

    fn small_roots() -> impl Strategy<Value = Vec<Rational>> {
        proptest::collection::vec((-6i64..=6, 1i64..=4), 1..=5)
            .prop_map(|v| v.into_iter().map(|(n, d)| frac(n, d)).collect())
    }

    proptest! {
        #[test]
        fn rational_roots_recovers_planted(roots in small_roots(), extra in 0i64..3) {
            let p = from_roots(&roots).mul(&RatPoly::from_i64(&[extra * extra + 2, 0, 1]));
            let found = p.rational_roots().unwrap();
            let mut expanded: Vec<Rational> = found.iter().flat_map(|(r, m)| std::iter::repeat_n(r.clone(), *m)).collect();
            let mut want = roots.clone();
            want.sort();
            expanded.sort();
            prop_assert_eq!(expanded, want);
        }

        #[test]
        fn div_rem_identity(a in proptest::collection::vec(-9i64..=9, 0..7), b in proptest::collection::vec(-9i64..=9, 1..5)) {
            let a = RatPoly::from_i64(&a);
            let b = RatPoly::from_i64(&b);
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.is_zero() || r.degree() < b.degree());
        }

        #[test]
        fn root_powers_matches_companion_power(c in proptest::collection::vec(-5i64..=5, 1..5), d in 1usize..4) {
            let mut coeffs = c.clone();
            coeffs.push(1);
            let p = RatPoly::from_i64(&coeffs);
            let m = p.degree().unwrap();
            let mut comp = RatMatrix::zeros(m, m);
            for i in 1..m {
                comp[(i, i - 1)] = Rational::one();
            }
            for i in 0..m {
                comp[(i, m - 1)] = -p.coeff(i);
            }
            let oracle = comp.pow(d).unwrap().char_poly().unwrap();
            prop_assert_eq!(p.root_powers(d).unwrap(), oracle);
        }

        #[test]
        fn sturm_counts_planted_real_roots(roots in small_roots()) {
            let p = from_roots(&roots).mul(&RatPoly::from_i64(&[1, 0, 1]));
            let mut distinct = roots.clone();
            distinct.sort();
            distinct.dedup();
            prop_assert_eq!(p.count_real_roots().unwrap(), distinct.len());
        }
    }
}
