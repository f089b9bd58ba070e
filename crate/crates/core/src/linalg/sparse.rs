//! Sparse exact row reduction.
//!
//! Rows are inserted one at a time and reduced against the current pivots, so
//! large homogeneous systems never materialize as dense matrices. The final
//! form is the reduced row echelon form, which is unique; every result derived
//! from it is therefore independent of insertion order.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::rational::Rational;

/// Strictly increasing column indices with nonzero values.
pub type SparseRow = Vec<(usize, Rational)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(row: &SparseRow, ncols: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); ncols];
    for (c, x) in row {
        v[*c] = x.clone();
    }
    v
}

/// Builds a sparse row from unsorted, possibly repeated, entries.
pub fn sparse_from_entries(entries: impl IntoIterator<Item = (usize, Rational)>) -> SparseRow {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (c, x) in entries {
        *acc.entry(c).or_insert_with(Rational::zero) += x;
    }
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// `a - f * b`.
fn sub_scaled(a: &SparseRow, f: &Rational, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(f * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - f * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental echelon builder.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a row; returns whether it enlarged the row space.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|(_, x)| !x.is_zero());
        loop {
            let Some((c, v)) = row.first().cloned() else {
                return false;
            };
            debug_assert!(c < self.ncols);
            match self.pivots.get(&c) {
                Some(p) => row = sub_scaled(&row, &v, p),
                None => {
                    let inv = v.recip();
                    for e in row.iter_mut() {
                        e.1 *= &inv;
                    }
                    self.pivots.insert(c, row);
                    return true;
                }
            }
        }
    }

    pub fn insert_dense(&mut self, v: &[Rational]) -> bool {
        self.insert(sparse_from_dense(v))
    }

    /// Consumes the builder and returns the reduced row echelon form.
    pub fn finish(self) -> Rref {
        let ncols = self.ncols;
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (c, mut row) in self.pivots.into_iter().rev() {
            let hits: Vec<(usize, Rational)> = row
                .iter()
                .filter(|(col, _)| *col > c && done.contains_key(col))
                .cloned()
                .collect();
            for (col, val) in hits {
                row = sub_scaled(&row, &val, &done[&col]);
            }
            done.insert(c, row);
        }
        Rref {
            ncols,
            rows: done.into_values().collect(),
        }
    }
}

/// A matrix in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub ncols: usize,
    /// Sorted by pivot column; each row begins with a 1 at its pivot.
    pub rows: Vec<SparseRow>,
}

impl Rref {
    pub fn from_rows(rows: impl IntoIterator<Item = SparseRow>, ncols: usize) -> Self {
        let mut e = Echelon::new(ncols);
        for r in rows {
            e.insert(r);
        }
        e.finish()
    }

    pub fn from_dense_rows(rows: &[Vec<Rational>], ncols: usize) -> Self {
        Self::from_rows(rows.iter().map(|r| sparse_from_dense(r)), ncols)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let piv = self.pivots();
        let mut k = 0;
        (0..self.ncols)
            .filter(|c| {
                if k < piv.len() && piv[k] == *c {
                    k += 1;
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    /// Basis of the solution space of `rows * x = 0`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let free = self.free_columns();
        let mut index = vec![usize::MAX; self.ncols];
        for (k, f) in free.iter().enumerate() {
            index[*f] = k;
        }
        let mut out: Vec<Vec<Rational>> = free
            .iter()
            .map(|f| {
                let mut v = vec![Rational::zero(); self.ncols];
                v[*f] = Rational::one();
                v
            })
            .collect();
        for row in &self.rows {
            let p = row[0].0;
            for (c, x) in &row[1..] {
                out[index[*c]][p] = -x.clone();
            }
        }
        out
    }

    /// `v` minus its projection along the pivot rows; zero exactly when `v`
    /// lies in the row space.
    pub fn residual(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for row in &self.rows {
            let p = row[0].0;
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (c, x) in row {
                r[*c] -= &f * x;
            }
        }
        r
    }

    /// Echelon form of the nullspace of `rows`.
    pub fn nullspace_rref(rows: &Rref, ncols: usize) -> Rref {
        Rref::from_dense_rows(&rows.nullspace(), ncols)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.residual(v).iter().all(|x| x.is_zero())
    }

    pub fn dense_rows(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|r| dense_from_sparse(r, self.ncols)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::int;
    use super::*;

    fn dense(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|x| int(*x)).collect()).collect()
    }

    #[test]
    fn rref_is_order_independent() {
        let rows = dense(&[&[1, 2, 3, 4], &[2, 4, 7, 1], &[0, 0, 1, -7], &[1, 1, 1, 1]]);
        let a = Rref::from_dense_rows(&rows, 4);
        let mut rev = rows.clone();
        rev.reverse();
        assert_eq!(a, Rref::from_dense_rows(&rev, 4));
        assert_eq!(a.rank(), 3);
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let rows = dense(&[&[1, 2, 0, -1, 3], &[0, 1, 1, 1, 1], &[1, 3, 1, 0, 4]]);
        let r = Rref::from_dense_rows(&rows, 5);
        let ns = r.nullspace();
        assert_eq!(ns.len(), 5 - r.rank());
        for v in &ns {
            for row in &rows {
                let dot: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn residual_detects_membership() {
        let r = Rref::from_dense_rows(&dense(&[&[1, 1, 0], &[0, 1, 1]]), 3);
        assert!(r.contains(&[int(1), int(2), int(1)]));
        assert!(!r.contains(&[int(0), int(0), int(1)]));
    }
}
