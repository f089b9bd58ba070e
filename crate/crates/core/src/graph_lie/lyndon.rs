//! Free nilpotent Lie algebras in the Lyndon basis.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::LieAlgebra;

pub const DIMENSION_CAP: usize = 256;

/// Lyndon words over `0..d` of length at most `c`, ordered by (length, lex).
pub fn lyndon_words(d: usize, c: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if d == 0 || c == 0 {
        return out;
    }
    // Duval's generation in lexicographic order.
    let mut w = vec![0usize];
    loop {
        out.push(w.clone());
        let m = w.len();
        while w.len() < c {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&(d - 1)) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(x) => *x += 1,
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

pub fn is_lyndon(w: &[usize]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// `w = u v` with `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[usize]) -> Option<(&[usize], &[usize])> {
    (1..w.len()).find(|&i| is_lyndon(&w[i..])).map(|i| (&w[..i], &w[i..]))
}

/// Bracketing of a Lyndon word, e.g. `[v1,[v1,v2]]`, with letters `v{label}`.
pub fn bracket_string(w: &[usize], label: &dyn Fn(usize) -> usize) -> String {
    match standard_factorization(w) {
        None => format!("v{}", label(w[0])),
        Some((u, v)) => format!("[{},{}]", bracket_string(u, label), bracket_string(v, label)),
    }
}

/// Number of Lyndon words of length `n` over `d` letters.
pub fn witt_dimension(d: usize, n: usize) -> usize {
    fn mobius(mut n: usize) -> i64 {
        let mut result = 1;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                result = -result;
            }
            p += 1;
        }
        if n > 1 {
            result = -result;
        }
        result
    }
    let total: i128 = (1..=n)
        .filter(|m| n.is_multiple_of(*m))
        .map(|m| mobius(m) as i128 * (d as i128).pow((n / m) as u32))
        .sum();
    (total / n as i128) as usize
}

type WordPoly = BTreeMap<Vec<usize>, Rational>;

fn commutator(a: &WordPoly, b: &WordPoly) -> WordPoly {
    let mut out = WordPoly::new();
    for (u, x) in a {
        for (v, y) in b {
            let xy = x * y;
            let mut uv = u.clone();
            uv.extend(v);
            *out.entry(uv).or_insert_with(Rational::zero) += &xy;
            let mut vu = v.clone();
            vu.extend(u);
            *out.entry(vu).or_insert_with(Rational::zero) -= xy;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Free `c`-step nilpotent Lie algebra on `d` generators.
#[derive(Clone, Debug)]
pub struct FreeNilpotent {
    pub algebra: LieAlgebra,
    /// Lyndon word of each basis element.
    pub words: Vec<Vec<usize>>,
}

pub fn free_nilpotent_dimension(d: usize, c: usize) -> usize {
    (1..=c).map(|n| witt_dimension(d, n)).sum()
}

pub fn free_nilpotent(d: usize, c: usize) -> Result<FreeNilpotent> {
    let dim = free_nilpotent_dimension(d, c);
    if dim > DIMENSION_CAP {
        return Err(Error::DimensionCapExceeded {
            dim,
            cap: DIMENSION_CAP,
        });
    }
    let words = lyndon_words(d, c);
    debug_assert_eq!(words.len(), dim);
    let index: HashMap<&[usize], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    // Expansion of each basis element in the tensor algebra; P_w = w + higher words.
    let mut polys: Vec<WordPoly> = Vec::with_capacity(words.len());
    for w in &words {
        let p = match standard_factorization(w) {
            None => WordPoly::from([(w.clone(), Rational::from_integer(1.into()))]),
            Some((u, v)) => commutator(&polys[index[u]], &polys[index[v]]),
        };
        polys.push(p);
    }
    let mut entries = Vec::new();
    for a in 0..words.len() {
        for b in a + 1..words.len() {
            if words[a].len() + words[b].len() > c {
                continue;
            }
            let mut q = commutator(&polys[a], &polys[b]);
            while let Some((u, coef)) = q.iter().next().map(|(u, c)| (u.clone(), c.clone())) {
                let k = *index
                    .get(u.as_slice())
                    .ok_or_else(|| Error::Internal(format!("non-Lyndon leading word {u:?}")))?;
                for (w, x) in &polys[k] {
                    *q.entry(w.clone()).or_insert_with(Rational::zero) -= &coef * x;
                }
                q.retain(|_, c| !c.is_zero());
                entries.push((a, b, k, coef));
            }
        }
    }
    let names = words.iter().map(|w| bracket_string(w, &|x| x + 1)).collect();
    let algebra = LieAlgebra::from_constants_unchecked(words.len(), entries)?.with_names(names)?;
    Ok(FreeNilpotent { algebra, words })
}
