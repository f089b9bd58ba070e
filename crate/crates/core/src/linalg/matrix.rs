//! Dense exact matrices.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use super::poly::RatPoly;
use super::rational::{int, Rational};
use super::sparse::{sparse_from_dense, Echelon, Rref};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RatMatrix { rows: r, cols: c, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Rational>]) -> Result<Self> {
        Ok(Self::from_rows(cols.to_vec())?.transpose())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|x| int(*x)).collect()).collect())
            .expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn row(&self, r: usize) -> Vec<Rational> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut s = Rational::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = &self[(r, c)];
                    if !a.is_zero() && !x.is_zero() {
                        s += a * x;
                    }
                }
                s
            })
            .collect())
    }

    fn zip_with(&self, other: &RatMatrix, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &RatMatrix) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        let n = self.require_square()?;
        let mut out = Self::identity(n);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<Rational> {
        let n = self.require_square()?;
        Ok((0..n).map(|i| self[(i, i)].clone()).sum())
    }

    pub fn diagonal_entries(&self) -> Vec<Rational> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self[(r, c)].is_zero()))
    }

    pub fn rref(&self) -> Rref {
        Rref::from_rows(self.row_vectors().iter().map(|r| sparse_from_dense(r)), self.cols)
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for r in 0..self.rows {
            e.insert_dense(&self.row(r));
        }
        e.rank()
    }

    /// Basis of `{x : self * x = 0}` read off the reduced row echelon form.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        self.rref().nullspace()
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.require_square()?;
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row = self.row(r);
                row.extend((0..n).map(|c| if c == r { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        let rref = Rref::from_dense_rows(&rows, 2 * n);
        if rref.rank() < n || (n > 0 && rref.pivots()[n - 1] >= n) {
            return Err(Error::Singular);
        }
        let dense = rref.dense_rows();
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = dense[r][n + c].clone();
            }
        }
        Ok(inv)
    }

    pub fn det(&self) -> Result<Rational> {
        let n = self.require_square()?;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|r| !m[(*r, c)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            for r in c + 1..n {
                if m[(r, c)].is_zero() {
                    continue;
                }
                let f = &m[(r, c)] / &piv;
                for k in c..n {
                    let v = &f * &m[(c, k)];
                    m[(r, k)] -= v;
                }
            }
        }
        Ok(det)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// Characteristic polynomial `det(xI - A)` via Hessenberg reduction.
    pub fn char_poly(&self) -> Result<RatPoly> {
        let n = self.require_square()?;
        let mut h = self.clone();
        // Similarity transforms reducing to upper Hessenberg form.
        for m in 1..n.saturating_sub(1) {
            let Some(p) = (m..n).find(|r| !h[(*r, m - 1)].is_zero()) else {
                continue;
            };
            h.swap_rows(p, m);
            h.swap_cols(p, m);
            let piv = h[(m, m - 1)].clone();
            for i in m + 1..n {
                if h[(i, m - 1)].is_zero() {
                    continue;
                }
                let u = &h[(i, m - 1)] / &piv;
                for k in 0..n {
                    let v = &u * &h[(m, k)];
                    h[(i, k)] -= v;
                }
                for k in 0..n {
                    let v = &u * &h[(k, i)];
                    h[(k, m)] += v;
                }
            }
        }
        // p_k is the characteristic polynomial of the leading k x k block.
        let mut p: Vec<RatPoly> = vec![RatPoly::one()];
        for k in 1..=n {
            let kk = k - 1;
            let mut next = RatPoly::linear_root(&h[(kk, kk)]).mul(&p[k - 1]);
            let mut prod = Rational::one();
            for i in (1..k).rev() {
                prod *= &h[(i, i - 1)];
                if prod.is_zero() {
                    break;
                }
                let c = &h[(i - 1, kk)] * &prod;
                if !c.is_zero() {
                    next = next.sub(&p[i - 1].scale(&c));
                }
            }
            p.push(next);
        }
        Ok(p.pop().unwrap())
    }

    /// Least `k` with `A^k = 0`, or `None` when `A` is not nilpotent.
    pub fn nilpotency_index(&self) -> Result<Option<usize>> {
        let n = self.require_square()?;
        let mut p = Self::identity(n);
        for k in 0..=n {
            if p.is_zero() {
                return Ok(Some(k));
            }
            p = p.mul(self)?;
        }
        Ok(None)
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        Ok(self.nilpotency_index()?.is_some())
    }

    pub fn block_diagonal(blocks: &[&RatMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Text form: dimension line then one whitespace-separated row per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.rows);
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the square-matrix text form; `#` starts a comment.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
            .filter(|(_, l)| !l.is_empty());
        let (ln, first) = lines.next().ok_or_else(|| Error::parse(1, "empty matrix file"))?;
        let n: usize = first
            .parse()
            .map_err(|_| Error::parse(ln, format!("expected dimension, found `{first}`")))?;
        let mut rows = Vec::with_capacity(n);
        for (ln, l) in lines {
            let row = l
                .split_whitespace()
                .map(|t| super::rational::parse_rational_at(t, ln))
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::parse(ln, format!("expected {n} entries, found {}", row.len())));
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::parse(0, format!("expected {n} rows, found {}", rows.len())));
        }
        if n == 0 {
            return Ok(Self::zeros(0, 0));
        }
        Self::from_rows(rows)
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::frac;
    use super::*;

    /// Faddeev-LeVerrier, used only as an independent oracle.
    fn char_poly_leverrier(a: &RatMatrix) -> RatPoly {
        let n = a.rows();
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = RatMatrix::zeros(n, n);
        for k in 1..=n {
            m = a
                .mul(&m)
                .unwrap()
                .add(&RatMatrix::identity(n).scale(&coeffs[n - k + 1]))
                .unwrap();
            coeffs[n - k] = -a.mul(&m).unwrap().trace().unwrap() / int(k as i64);
        }
        RatPoly::new(coeffs)
    }

    #[test]
    fn char_poly_small_cases() {
        let a = RatMatrix::from_i64(&[&[0, 1], &[-1, 0]]);
        assert_eq!(a.char_poly().unwrap(), RatPoly::from_i64(&[1, 0, 1]));
        let b = RatMatrix::from_i64(&[&[2, 0, 0], &[0, 3, 4], &[0, 4, 9]]);
        assert_eq!(b.char_poly().unwrap(), char_poly_leverrier(&b));
        assert_eq!(RatMatrix::zeros(0, 0).char_poly().unwrap(), RatPoly::one());
    }

    #[test]
    fn char_poly_needs_pivoting() {
        let a = RatMatrix::from_i64(&[&[1, 2, 3, 0], &[0, 0, 1, 5], &[4, 0, 2, 1], &[0, 7, 0, 3]]);
        assert_eq!(a.char_poly().unwrap(), char_poly_leverrier(&a));
    }

    #[test]
    fn inverse_and_det() {
        let a = RatMatrix::from_i64(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.det().unwrap(), int(1));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), RatMatrix::identity(2));
        assert_eq!(RatMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
        assert_eq!(RatMatrix::from_i64(&[&[1, 2], &[2, 4]]).det().unwrap(), int(0));
    }

    #[test]
    fn nilpotency() {
        let n = RatMatrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(n.nilpotency_index().unwrap(), Some(3));
        assert_eq!(RatMatrix::identity(2).nilpotency_index().unwrap(), None);
        assert!(RatMatrix::zeros(2, 3).is_nilpotent().is_err());
    }

    #[test]
    fn text_round_trip() {
        let a = RatMatrix::from_rows(vec![vec![frac(1, 2), int(-3)], vec![int(0), frac(7, 3)]]).unwrap();
        assert_eq!(RatMatrix::parse_text(&a.to_text()).unwrap(), a);
        assert!(RatMatrix::parse_text("2\n1 2\n3\n").is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
            proptest::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
                let rows: Vec<Vec<Rational>> = v.chunks(n).map(|r| r.iter().map(|x| int(*x)).collect()).collect();
                RatMatrix::from_rows(rows).unwrap()
            })
        }

        proptest! {
            #[test]
            fn hessenberg_matches_leverrier(a in (1usize..=5).prop_flat_map(small_matrix)) {
                prop_assert_eq!(a.char_poly().unwrap(), char_poly_leverrier(&a));
            }

            #[test]
            fn cayley_hamilton(a in (1usize..=5).prop_flat_map(small_matrix)) {
                let p = a.char_poly().unwrap();
                prop_assert!(p.eval_matrix(&a).unwrap().is_zero());
            }

            #[test]
            fn rank_nullity(a in (1usize..=5).prop_flat_map(small_matrix)) {
                let ns = a.nullspace();
                prop_assert_eq!(ns.len() + a.rank(), a.cols());
                for v in ns {
                    prop_assert!(a.mul_vec(&v).unwrap().iter().all(|x| x.is_zero()));
                }
            }

            #[test]
            fn det_zero_iff_singular(a in (1usize..=4).prop_flat_map(small_matrix)) {
                prop_assert_eq!(a.det().unwrap().is_zero(), a.inverse().is_err());
            }
        }
    }
}
