//! Nice bases of the real Lie algebras of dimension three.
//!
//! Solvable ones are almost abelian, `R f x|_A R^2` with `A` one of the
//! representatives `A_λ, B, C, D, E_μ` up to scaling and similarity; the
//! simple ones are `sl_2(R)` and `so_3(R)`. Almost abelian rows are
//! recomputed from their matrices.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::almost_abelian::{
    count_nice, iso_test_almost_abelian, nice_witnesses, AlmostAbelian, IsoWitness, NiceCount,
};
use crate::error::{Error, Result};
use crate::lie::{conjugate, derived_algebra};
use crate::linalg::{frac, int, RatMatrix, Rational, Subspace};
use crate::niceness::check_nice;
use crate::{standard, LieAlgebra};

/// Rows of the table, in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TableRow {
    Abelian,
    Heisenberg,
    AMinusOne,
    ALambda,
    D,
    E0,
    EMu,
    Sl2,
    So3,
}

impl TableRow {
    pub const ALL: [TableRow; 9] = [
        TableRow::Abelian,
        TableRow::Heisenberg,
        TableRow::AMinusOne,
        TableRow::ALambda,
        TableRow::D,
        TableRow::E0,
        TableRow::EMu,
        TableRow::Sl2,
        TableRow::So3,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            TableRow::Abelian => "R^3 = Rf x|_B R^2",
            TableRow::Heisenberg => "h_3 = Rf x|_C R^2",
            TableRow::AMinusOne => "Rf x|_A(-1) R^2",
            TableRow::ALambda => "Rf x|_A(λ) R^2, λ in (-1,1]",
            TableRow::D => "Rf x|_D R^2",
            TableRow::E0 => "Rf x|_E(0) R^2",
            TableRow::EMu => "Rf x|_E(μ) R^2, μ > 0",
            TableRow::Sl2 => "sl_2(R)",
            TableRow::So3 => "so_3(R)",
        }
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn a_lambda(lambda: Rational) -> RatMatrix {
    RatMatrix::diagonal(&[int(1), lambda])
}

pub fn matrix_b() -> RatMatrix {
    RatMatrix::zeros(2, 2)
}

pub fn matrix_c() -> RatMatrix {
    RatMatrix::from_i64(&[&[0, 1], &[0, 0]])
}

pub fn matrix_d() -> RatMatrix {
    RatMatrix::from_i64(&[&[1, 1], &[0, 1]])
}

pub fn e_mu(mu: Rational) -> RatMatrix {
    RatMatrix::from_rows(vec![vec![mu.clone(), int(1)], vec![int(-1), mu]]).unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    AlmostAbelian(RatMatrix),
    Simple,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub row: TableRow,
    pub name: String,
    pub construction: Construction,
    pub algebra: LieAlgebra,
    pub nu: u64,
    /// Pairwise non-equivalent nice bases, as columns in the basis of `algebra`.
    pub nice_bases: Vec<RatMatrix>,
}

impl CatalogEntry {
    fn almost_abelian(row: TableRow, name: String, a: RatMatrix) -> Result<Self> {
        let nu = match count_nice(&a)? {
            NiceCount::Exact(k) => k,
            NiceCount::UnknownIrrational(_) => return Err(Error::Internal(format!("{name}: count not exact"))),
        };
        let nice_bases = nice_witnesses(&a)?
            .ok_or_else(|| Error::Internal(format!("{name}: witnesses not exact")))?
            .into_iter()
            .map(|w| w.basis)
            .collect();
        Ok(CatalogEntry {
            row,
            name,
            algebra: AlmostAbelian::new(a.clone())?.algebra().clone(),
            construction: Construction::AlmostAbelian(a),
            nu,
            nice_bases,
        })
    }

    fn simple(row: TableRow, name: &str, algebra: LieAlgebra, nice_bases: Vec<RatMatrix>) -> Self {
        CatalogEntry {
            row,
            name: name.to_string(),
            construction: Construction::Simple,
            algebra,
            nu: nice_bases.len() as u64,
            nice_bases,
        }
    }

    /// Every listed basis is nice and their number is `nu`.
    pub fn verify(&self) -> Result<bool> {
        for p in &self.nice_bases {
            if !check_nice(&conjugate(&self.algebra, p)?).is_nice() {
                return Ok(false);
            }
        }
        Ok(self.nice_bases.len() as u64 == self.nu)
    }
}

/// The two non-equivalent nice bases of `sl_2(R)`: `{e1, e2, e3}` and `{e1, e2 + e3, e2 - e3}`.
pub fn sl2_nice_bases() -> Vec<RatMatrix> {
    vec![
        RatMatrix::identity(3),
        RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 1], &[0, 1, -1]]),
    ]
}

pub fn so3_nice_bases() -> Vec<RatMatrix> {
    vec![RatMatrix::identity(3)]
}

pub const LAMBDA_SAMPLES: [(i64, i64); 4] = [(-1, 2), (0, 1), (1, 2), (1, 1)];
pub const MU_SAMPLES: [i64; 2] = [1, 2];

/// Catalog entries, sampling `λ` and `μ` at rational values.
pub fn catalog() -> Result<Vec<CatalogEntry>> {
    let mut out = vec![
        CatalogEntry::almost_abelian(TableRow::Abelian, "R^3".into(), matrix_b())?,
        CatalogEntry::almost_abelian(TableRow::Heisenberg, "h_3".into(), matrix_c())?,
        CatalogEntry::almost_abelian(TableRow::AMinusOne, "A(-1)".into(), a_lambda(int(-1)))?,
    ];
    for (p, q) in LAMBDA_SAMPLES {
        let l = frac(p, q);
        out.push(CatalogEntry::almost_abelian(
            TableRow::ALambda,
            format!("A({l})"),
            a_lambda(l),
        )?);
    }
    out.push(CatalogEntry::almost_abelian(TableRow::D, "D".into(), matrix_d())?);
    out.push(CatalogEntry::almost_abelian(TableRow::E0, "E(0)".into(), e_mu(int(0)))?);
    for m in MU_SAMPLES {
        out.push(CatalogEntry::almost_abelian(
            TableRow::EMu,
            format!("E({m})"),
            e_mu(int(m)),
        )?);
    }
    out.push(CatalogEntry::simple(
        TableRow::Sl2,
        "sl_2(R)",
        standard::sl2(),
        sl2_nice_bases(),
    ));
    out.push(CatalogEntry::simple(
        TableRow::So3,
        "so_3(R)",
        standard::so3(),
        so3_nice_bases(),
    ));
    Ok(out)
}

/// One line of the reproduced table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableLine {
    pub row: TableRow,
    pub nu: u64,
    /// Names of the sampled entries, all of which gave `nu`.
    pub samples: Vec<String>,
}

/// Groups catalog entries by row; `None` when samples of one row disagree.
pub fn reproduce_table(entries: &[CatalogEntry]) -> Option<Vec<TableLine>> {
    let mut out = Vec::new();
    for row in TableRow::ALL {
        let members: Vec<&CatalogEntry> = entries.iter().filter(|e| e.row == row).collect();
        let nu = members.first()?.nu;
        if members.iter().any(|e| e.nu != nu) {
            return None;
        }
        out.push(TableLine {
            row,
            nu,
            samples: members.iter().map(|e| e.name.clone()).collect(),
        });
    }
    Some(out)
}

/// The values of `nu` listed in the table.
pub fn expected_nu(row: TableRow) -> u64 {
    match row {
        TableRow::AMinusOne | TableRow::Sl2 => 2,
        TableRow::D | TableRow::EMu => 0,
        _ => 1,
    }
}

pub fn killing_form(g: &LieAlgebra) -> RatMatrix {
    let n = g.dim();
    let ads: Vec<RatMatrix> = (0..n).map(|i| g.ad_basis(i)).collect();
    let mut k = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            k[(i, j)] = ads[i].mul(&ads[j]).unwrap().trace().unwrap();
        }
    }
    k
}

/// Sylvester's criterion on leading principal minors.
pub fn is_negative_definite(m: &RatMatrix) -> bool {
    let n = m.rows();
    (1..=n).all(|k| {
        let mut sub = RatMatrix::zeros(k, k);
        for r in 0..k {
            for c in 0..k {
                sub[(r, c)] = -m[(r, c)].clone();
            }
        }
        sub.det().unwrap() > Rational::zero()
    })
}

/// Structure of a nice basis of a 3-dimensional simple algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimpleNiceForm {
    /// `[X2,X3] = αX1, [X3,X1] = βX2, [X1,X2] = γX3`.
    Cyclic {
        alpha: Rational,
        beta: Rational,
        gamma: Rational,
    },
    /// Some bracket lands on one of its own arguments, as for `{e1, e2, e3}` in `sl_2(R)`.
    SelfOutput,
}

impl SimpleNiceForm {
    /// Monomial invariant: `Some(true)` when `α, β, γ` share one sign, `None`
    /// for the self-output form.
    pub fn uniform_signs(&self) -> Option<bool> {
        match self {
            SimpleNiceForm::Cyclic { alpha, beta, gamma } => {
                Some(alpha.is_positive() == beta.is_positive() && beta.is_positive() == gamma.is_positive())
            }
            SimpleNiceForm::SelfOutput => None,
        }
    }
}

/// Reads the form of a nice basis of a 3-dimensional algebra with all three brackets nonzero.
pub fn simple_nice_form(g: &LieAlgebra) -> Option<SimpleNiceForm> {
    if g.dim() != 3 || !check_nice(g).is_nice() {
        return None;
    }
    let pairs = [(1, 2, 0), (2, 0, 1), (0, 1, 2)];
    let mut coeffs = Vec::new();
    let mut cyclic = true;
    for (i, j, k) in pairs {
        let b = g.bracket_basis(i.min(j), i.max(j));
        let [(out, c)] = b.as_slice() else { return None };
        let c = if i < j { c.clone() } else { -c.clone() };
        cyclic &= *out == k;
        coeffs.push(c);
    }
    if cyclic {
        let gamma = coeffs.pop().unwrap();
        let beta = coeffs.pop().unwrap();
        let alpha = coeffs.pop().unwrap();
        Some(SimpleNiceForm::Cyclic { alpha, beta, gamma })
    } else {
        Some(SimpleNiceForm::SelfOutput)
    }
}

/// Result of recognising a 3-dimensional algebra.
#[derive(Clone, Debug)]
pub struct Classification {
    pub row: TableRow,
    /// `λ` or `μ` when it is rational.
    pub parameter: Option<Rational>,
    /// `A` in a basis `f, s1, s2` with `span(s1, s2)` an abelian ideal.
    pub matrix: Option<RatMatrix>,
    pub basis: Option<RatMatrix>,
    /// Isomorphism onto the representative, when one was found.
    pub iso: Option<IsoWitness>,
    pub nu: u64,
    /// Whether `nu` was counted from `A` or read off the table row because
    /// the count involves irrational constants.
    pub nu_from_table: bool,
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut e = vec![Rational::zero(); n];
    e[i] = Rational::one();
    e
}

/// A 2-dimensional abelian ideal of a solvable 3-dimensional algebra.
fn abelian_ideal(g: &LieAlgebra) -> Option<Subspace> {
    let d = derived_algebra(g);
    let ideal = match d.dim() {
        2 => d,
        1 => {
            let z = d.basis().remove(0);
            let centralizer = g.ad(&z).nullspace();
            let w = centralizer.into_iter().find(|w| !d.contains(w))?;
            d.add_vectors(&[w])
        }
        0 => Subspace::from_vectors(3, &[unit(3, 1), unit(3, 2)]),
        _ => return None,
    };
    let b = ideal.basis();
    (g.bracket(&b[0], &b[1]).iter().all(|x| x.is_zero())).then_some(ideal)
}

fn representative(row: TableRow, parameter: &Option<Rational>) -> Option<RatMatrix> {
    match (row, parameter) {
        (TableRow::Abelian, _) => Some(matrix_b()),
        (TableRow::Heisenberg, _) => Some(matrix_c()),
        (TableRow::AMinusOne, _) => Some(a_lambda(int(-1))),
        (TableRow::ALambda, Some(l)) => Some(a_lambda(l.clone())),
        (TableRow::D, _) => Some(matrix_d()),
        (TableRow::E0, _) => Some(e_mu(int(0))),
        (TableRow::EMu, Some(m)) => Some(e_mu(m.clone())),
        _ => None,
    }
}

/// Row and parameter of `R f x|_A R^2` from the trace and determinant of `A`.
fn row_of_matrix(a: &RatMatrix) -> (TableRow, Option<Rational>) {
    let t = a.trace().unwrap();
    let det = a.det().unwrap();
    let disc = &t * &t - int(4) * &det;
    if disc.is_zero() {
        let e = &t / int(2);
        return match (
            e.is_zero(),
            a.is_zero(),
            a.sub(&RatMatrix::identity(2).scale(&e)).unwrap().is_zero(),
        ) {
            (_, true, _) => (TableRow::Abelian, None),
            (true, false, _) => (TableRow::Heisenberg, None),
            (false, _, true) => (TableRow::ALambda, Some(int(1))),
            (false, _, false) => (TableRow::D, None),
        };
    }
    if disc.is_positive() {
        if t.is_zero() {
            return (TableRow::AMinusOne, Some(int(-1)));
        }
        return match rational_sqrt(&disc) {
            Some(s) => {
                let (e1, e2) = ((&t + &s) / int(2), (&t - &s) / int(2));
                let (big, small) = if e1.abs() >= e2.abs() { (e1, e2) } else { (e2, e1) };
                (TableRow::ALambda, Some(small / big))
            }
            None => (TableRow::ALambda, None),
        };
    }
    // Eigenvalues a ± b i with μ = |a| / b.
    if t.is_zero() {
        return (TableRow::E0, Some(int(0)));
    }
    let mu2 = &t * &t / (int(4) * &det - &t * &t);
    (TableRow::EMu, rational_sqrt(&mu2))
}

/// Recognises a 3-dimensional Lie algebra; `None` when no row is matched.
pub fn classify3(g: &LieAlgebra) -> Result<Option<Classification>> {
    if g.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: g.dim(),
        });
    }
    let k = killing_form(g);
    if !k.det()?.is_zero() {
        let row = if is_negative_definite(&k) {
            TableRow::So3
        } else {
            TableRow::Sl2
        };
        return Ok(Some(Classification {
            row,
            parameter: None,
            matrix: None,
            basis: None,
            iso: None,
            nu: expected_nu(row),
            nu_from_table: true,
        }));
    }
    let Some(ideal) = abelian_ideal(g) else { return Ok(None) };
    let f = (0..3)
        .map(|i| unit(3, i))
        .find(|e| !ideal.contains(e))
        .expect("ideal has dimension 2");
    let mut cols = vec![f];
    cols.extend(ideal.basis());
    let p = RatMatrix::from_columns(&cols)?;
    let h = conjugate(g, &p)?;
    let mut a = RatMatrix::zeros(2, 2);
    for i in 1..3 {
        for kk in 1..3 {
            a[(kk - 1, i - 1)] = h.structure_constant(0, i, kk);
        }
    }
    let (row, parameter) = row_of_matrix(&a);
    let iso = match representative(row, &parameter) {
        Some(rep) => iso_test_almost_abelian(&a, &rep)?,
        None => None,
    };
    let (nu, nu_from_table) = match count_nice(&a)? {
        NiceCount::Exact(k) => (k, false),
        NiceCount::UnknownIrrational(_) => (expected_nu(row), true),
    };
    Ok(Some(Classification {
        row,
        parameter,
        matrix: Some(a),
        basis: Some(p),
        iso,
        nu,
        nu_from_table,
    }))
}

/// Whether two sign patterns can be related by a monomial map.
pub fn forms_compatible(a: &SimpleNiceForm, b: &SimpleNiceForm) -> bool {
    a.uniform_signs() == b.uniform_signs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::niceness::{monomial_equivalent, MonomialMap};
    use proptest::prelude::*;

    #[test]
    fn table_is_reproduced() {
        let entries = catalog().unwrap();
        for e in &entries {
            assert!(e.verify().unwrap(), "{}", e.name);
        }
        let table = reproduce_table(&entries).unwrap();
        assert_eq!(table.len(), 9);
        for line in table {
            assert_eq!(line.nu, expected_nu(line.row), "{}", line.row);
        }
    }

    #[test]
    fn a_minus_one_has_the_two_listed_bases() {
        let e = catalog()
            .unwrap()
            .into_iter()
            .find(|e| e.row == TableRow::AMinusOne)
            .unwrap();
        assert_eq!(e.nu, 2);
        let diag = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        let mixed = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 1], &[0, 1, -1]]);
        assert!(e.nice_bases.contains(&diag) || e.nice_bases.contains(&RatMatrix::identity(3)));
        assert!(e.nice_bases.contains(&mixed));
    }

    #[test]
    fn sl2_bases_have_different_forms() {
        let forms: Vec<SimpleNiceForm> = sl2_nice_bases()
            .iter()
            .map(|p| simple_nice_form(&conjugate(&standard::sl2(), p).unwrap()).unwrap())
            .collect();
        assert_eq!(forms[0], SimpleNiceForm::SelfOutput);
        assert_eq!(forms[1].uniform_signs(), Some(false));
        assert!(!forms_compatible(&forms[0], &forms[1]));
        let so3 = simple_nice_form(&standard::so3()).unwrap();
        assert_eq!(so3.uniform_signs(), Some(true));
        let b = sl2_nice_bases();
        assert!(monomial_equivalent(&standard::sl2(), &b[0], &b[1]).unwrap().is_none());
    }

    #[test]
    fn killing_form_separates_simple_algebras() {
        assert!(is_negative_definite(&killing_form(&standard::so3())));
        assert!(!is_negative_definite(&killing_form(&standard::sl2())));
    }

    #[test]
    fn classify_representatives() {
        let h = conjugate(
            &standard::heisenberg3(),
            &RatMatrix::from_i64(&[&[1, 2, 0], &[0, 1, 3], &[1, 0, 1]]),
        )
        .unwrap();
        let c = classify3(&h).unwrap().unwrap();
        assert_eq!((c.row, c.nu), (TableRow::Heisenberg, 1));
        assert!(c.iso.is_some());
        let a1 = AlmostAbelian::new(a_lambda(int(1))).unwrap();
        let c = classify3(a1.algebra()).unwrap().unwrap();
        assert_eq!((c.row, c.parameter.clone(), c.nu), (TableRow::ALambda, Some(int(1)), 1));
        assert_eq!(classify3(&standard::so3()).unwrap().unwrap().row, TableRow::So3);
        assert_eq!(classify3(&standard::sl2()).unwrap().unwrap().row, TableRow::Sl2);
    }

    #[test]
    fn classify_scaled_matrices() {
        let e = AlmostAbelian::new(e_mu(int(2)).scale(&frac(-3, 5))).unwrap();
        let c = classify3(e.algebra()).unwrap().unwrap();
        assert_eq!((c.row, c.parameter, c.nu), (TableRow::EMu, Some(int(2)), 0));
        let a = AlmostAbelian::new(RatMatrix::from_i64(&[&[0, 2], &[1, 0]])).unwrap();
        let c = classify3(a.algebra()).unwrap().unwrap();
        assert_eq!((c.row, c.nu, c.nu_from_table), (TableRow::AMinusOne, 2, true));
        let d = AlmostAbelian::new(matrix_d().scale(&int(4))).unwrap();
        assert_eq!(classify3(d.algebra()).unwrap().unwrap().row, TableRow::D);
    }

    fn invertible3() -> impl Strategy<Value = RatMatrix> {
        proptest::collection::vec(-3i64..=3, 9)
            .prop_map(|v| {
                RatMatrix::from_rows(v.chunks(3).map(|r| r.iter().map(|x| int(*x)).collect()).collect()).unwrap()
            })
            .prop_filter("invertible", |m| !m.det().unwrap().is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn classification_is_basis_independent(p in invertible3(), which in 0usize..6) {
            let g = match which {
                0 => standard::sl2(),
                1 => standard::so3(),
                2 => standard::heisenberg3(),
                3 => AlmostAbelian::new(a_lambda(frac(1, 2))).unwrap().algebra().clone(),
                4 => AlmostAbelian::new(matrix_d()).unwrap().algebra().clone(),
                _ => AlmostAbelian::new(e_mu(int(1))).unwrap().algebra().clone(),
            };
            let a = classify3(&g).unwrap().unwrap();
            let b = classify3(&conjugate(&g, &p).unwrap()).unwrap().unwrap();
            prop_assert_eq!(a.row, b.row);
            prop_assert_eq!(a.parameter, b.parameter);
            prop_assert_eq!(a.nu, b.nu);
        }

        #[test]
        fn sign_pattern_is_monomially_invariant(
            perm in 0usize..6,
            scales in proptest::collection::vec((1i64..=4, any::<bool>()), 3),
            which in 0usize..2,
        ) {
            let sigmas = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            let (g, p) = if which == 0 {
                (standard::so3(), RatMatrix::identity(3))
            } else {
                (standard::sl2(), sl2_nice_bases()[1].clone())
            };
            let base = conjugate(&g, &p).unwrap();
            let map = MonomialMap {
                sigma: sigmas[perm].to_vec(),
                scales: scales
                    .iter()
                    .map(|(m, neg)| crate::niceness::Scale::from_rational(&(if *neg { -int(*m) } else { int(*m) })))
                    .collect(),
            };
            let moved = conjugate(&base, &map.to_matrix().unwrap()).unwrap();
            let before = simple_nice_form(&base).unwrap();
            let after = simple_nice_form(&moved).unwrap();
            prop_assert!(forms_compatible(&before, &after));
        }
    }
}
