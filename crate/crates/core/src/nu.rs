//! The number `ν` of nice bases up to equivalence, from the rules that
//! determine it exactly.

use std::fmt;

use crate::almost_abelian::{count_nice, detect_almost_abelian, NiceCount};
use crate::catalog3::{classify3, TableRow};
use crate::derivations::{pre_einstein_general_check, pre_einstein_nice, spectra_disjoint, PreEinstein};
use crate::error::Result;
use crate::lie::{center, conjugate, derived_algebra};
use crate::linalg::{RatMatrix, Rational};
use crate::niceness::check_nice;
use crate::{standard, LieAlgebra};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nu {
    Exact(u64),
    Unknown,
}

impl fmt::Display for Nu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nu::Exact(k) => write!(f, "{k}"),
            Nu::Unknown => f.write_str("unknown"),
        }
    }
}

/// `ν` of a direct sum whose summands have pairwise disjoint pre-Einstein
/// spectra is the product; `None` when some spectra meet.
pub fn nu_product_rule(parts: &[(PreEinstein, Nu)]) -> Option<Nu> {
    for (i, (a, _)) in parts.iter().enumerate() {
        for (b, _) in &parts[i + 1..] {
            if !spectra_disjoint(a, b) {
                return None;
            }
        }
    }
    if parts.iter().any(|(_, n)| *n == Nu::Exact(0)) {
        return Some(Nu::Exact(0));
    }
    let mut prod = 1u64;
    for (_, n) in parts {
        match n {
            Nu::Exact(k) => prod = prod.checked_mul(*k)?,
            Nu::Unknown => return Some(Nu::Unknown),
        }
    }
    Some(Nu::Exact(prod))
}

/// A nice basis together with a pre-Einstein derivation of simple spectrum forces `ν = 1`.
pub fn simple_spectrum_unique(p: &PreEinstein, has_nice: bool) -> Option<Nu> {
    (has_nice && p.has_simple_spectrum()).then_some(Nu::Exact(1))
}

/// Algebras known to admit no nice basis, with a certified pre-Einstein derivation.
pub struct RegistryEntry {
    pub name: &'static str,
    pub algebra: LieAlgebra,
    pub pre_einstein: Vec<Rational>,
    pub nu: u64,
}

pub fn registry() -> Vec<RegistryEntry> {
    vec![RegistryEntry {
        name: "n6",
        algebra: standard::n6(),
        pre_einstein: standard::n6_pre_einstein(),
        nu: 0,
    }]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NuRule {
    Abelian,
    Registry(&'static str),
    ProductRule,
    AlmostAbelian,
    Dimension3(TableRow),
    SimpleSpectrum,
    Inconclusive,
}

impl fmt::Display for NuRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NuRule::Abelian => f.write_str("abelian: unique nice basis"),
            NuRule::Registry(name) => write!(f, "known algebra {name}"),
            NuRule::ProductRule => f.write_str("direct sum with disjoint pre-Einstein spectra"),
            NuRule::AlmostAbelian => f.write_str("almost abelian: binomial factorization classes"),
            NuRule::Dimension3(row) => write!(f, "3-dimensional classification: {row}"),
            NuRule::SimpleSpectrum => f.write_str("nice basis with simple pre-Einstein spectrum"),
            NuRule::Inconclusive => f.write_str("no rule applies"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct NuReport {
    pub nu: Nu,
    pub rule: NuRule,
    /// Dimension of the abelian direct summand removed first.
    pub abelian_summand: usize,
    pub pre_einstein: Option<PreEinstein>,
}

/// Sub-tensor on basis indices closed under the bracket.
fn restrict(g: &LieAlgebra, idx: &[usize]) -> Result<LieAlgebra> {
    let pos = |k: usize| idx.iter().position(|x| *x == k);
    let mut entries = Vec::new();
    for (i, j, k, c) in g.constants() {
        if let (Some(a), Some(b), Some(t)) = (pos(i), pos(j), pos(k)) {
            entries.push((a, b, t, c.clone()));
        }
    }
    let names = idx.iter().map(|&i| g.name(i).to_string()).collect();
    LieAlgebra::from_constants_unchecked(idx.len(), entries)?.with_names(names)
}

/// Basis indices grouped by co-occurrence in a nonzero structure constant;
/// indices that never occur are returned separately.
fn basis_components(g: &LieAlgebra) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = g.dim();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut used = vec![false; n];
    for (i, j, k, _) in g.constants() {
        for x in [i, j, k] {
            used[x] = true;
        }
        let ri = find(&mut parent, i);
        for x in [j, k] {
            let rx = find(&mut parent, x);
            parent[rx] = ri;
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for x in (0..n).filter(|x| used[*x]) {
        let r = find(&mut parent, x);
        match roots.iter().position(|y| *y == r) {
            Some(p) => groups[p].push(x),
            None => {
                roots.push(r);
                groups.push(vec![x]);
            }
        }
    }
    (groups, (0..n).filter(|x| !used[*x]).collect())
}

/// Splits off an abelian direct summand not aligned with the basis:
/// returns the complementary ideal in an adapted basis and the summand dimension.
fn algebraic_abelian_split(g: &LieAlgebra) -> Result<Option<(LieAlgebra, usize)>> {
    let n = g.dim();
    let z = center(g);
    let d = derived_algebra(g);
    let zd = z.intersection(&d);
    if zd.dim() == z.dim() {
        return Ok(None);
    }
    let mut w = zd.clone();
    let mut w_basis = Vec::new();
    for v in z.basis() {
        if !w.contains(&v) {
            w = w.add_vectors(std::slice::from_ref(&v));
            w_basis.push(v);
        }
    }
    let mut v_basis = d.basis();
    let mut span = d.add_vectors(&w_basis);
    for i in 0..n {
        let mut e = vec![Rational::from_integer(0.into()); n];
        e[i] = Rational::from_integer(1.into());
        if !span.contains(&e) {
            span = span.add_vectors(std::slice::from_ref(&e));
            v_basis.push(e);
        }
    }
    let m = w_basis.len();
    let mut cols = v_basis;
    cols.extend(w_basis);
    let h = conjugate(g, &RatMatrix::from_columns(&cols)?)?;
    let keep: Vec<usize> = (0..n - m).collect();
    Ok(Some((restrict(&h, &keep)?, m)))
}

/// Pre-Einstein derivation usable by the product rule, certified from the
/// registry or computed in a nice basis.
pub fn certified_pre_einstein(g: &LieAlgebra) -> Result<Option<PreEinstein>> {
    for entry in registry() {
        if g.same_structure(&entry.algebra) && pre_einstein_general_check(g, &entry.pre_einstein)?.is_certified() {
            return Ok(Some(PreEinstein {
                diagonal: entry.pre_einstein,
            }));
        }
    }
    if check_nice(g).is_nice() {
        return Ok(Some(pre_einstein_nice(g)?));
    }
    Ok(None)
}

fn report_core(g: &LieAlgebra, abelian_summand: usize, allow_split: bool) -> Result<NuReport> {
    let done = |nu, rule, pre_einstein| {
        Ok(NuReport {
            nu,
            rule,
            abelian_summand,
            pre_einstein,
        })
    };
    if g.dim() == 0 {
        return done(Nu::Exact(1), NuRule::Abelian, None);
    }
    let (groups, _) = basis_components(g);
    if groups.len() > 1 {
        let mut parts = Vec::new();
        for idx in &groups {
            let h = restrict(g, idx)?;
            let sub = report_core(&h, 0, false)?;
            match certified_pre_einstein(&h)? {
                Some(p) => parts.push((p, sub.nu)),
                None => {
                    parts.clear();
                    break;
                }
            }
        }
        if parts.len() == groups.len() {
            if let Some(nu) = nu_product_rule(&parts) {
                let mut diag = Vec::new();
                let mut inverse = vec![0; g.dim()];
                for (idx, (p, _)) in groups.iter().zip(&parts) {
                    for (k, &i) in idx.iter().enumerate() {
                        inverse[i] = diag.len() + k;
                    }
                    diag.extend(p.diagonal.iter().cloned());
                }
                let diagonal = (0..g.dim()).map(|i| diag[inverse[i]].clone()).collect();
                return done(nu, NuRule::ProductRule, Some(PreEinstein { diagonal }));
            }
        }
    }
    for entry in registry() {
        if g.same_structure(&entry.algebra) && pre_einstein_general_check(g, &entry.pre_einstein)?.is_certified() {
            let p = PreEinstein {
                diagonal: entry.pre_einstein,
            };
            return done(Nu::Exact(entry.nu), NuRule::Registry(entry.name), Some(p));
        }
    }
    let nice = check_nice(g).is_nice();
    let pre = if nice { Some(pre_einstein_nice(g)?) } else { None };
    if let Some((_, a)) = detect_almost_abelian(g) {
        if let NiceCount::Exact(k) = count_nice(&a)? {
            return done(Nu::Exact(k), NuRule::AlmostAbelian, pre);
        }
    }
    if g.dim() == 3 {
        if let Some(c) = classify3(g)? {
            return done(Nu::Exact(c.nu), NuRule::Dimension3(c.row), pre);
        }
    }
    if let Some(p) = &pre {
        if let Some(nu) = simple_spectrum_unique(p, nice) {
            return done(nu, NuRule::SimpleSpectrum, pre);
        }
    }
    if allow_split {
        if let Some((h, m)) = algebraic_abelian_split(g)? {
            return report_core(&h, abelian_summand + m, false);
        }
    }
    done(Nu::Unknown, NuRule::Inconclusive, pre)
}

/// `ν(g)`, after removing basis vectors that occur in no bracket (an abelian
/// summand, which does not change `ν`).
pub fn report_nu(g: &LieAlgebra) -> Result<NuReport> {
    let (_, isolated) = basis_components(g);
    let keep: Vec<usize> = (0..g.dim()).filter(|i| !isolated.contains(i)).collect();
    let h = restrict(g, &keep)?;
    report_core(&h, isolated.len(), true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::almost_abelian::{indecomposable_family, AlmostAbelian};
    use crate::lie::direct_sum;
    use crate::linalg::int;

    #[test]
    fn product_rule_examples() {
        let n6 = PreEinstein {
            diagonal: registry()[0].pre_einstein.clone(),
        };
        let l5 = pre_einstein_nice(&standard::filiform(5).unwrap()).unwrap();
        assert_eq!(
            nu_product_rule(&[(n6, Nu::Exact(0)), (l5.clone(), Nu::Exact(1))]),
            Some(Nu::Exact(0))
        );
        assert_eq!(nu_product_rule(&[(l5, Nu::Exact(1))]), Some(Nu::Exact(1)));
        let h = pre_einstein_nice(&standard::heisenberg3()).unwrap();
        assert_eq!(nu_product_rule(&[(h.clone(), Nu::Exact(1)), (h, Nu::Exact(1))]), None);
    }

    #[test]
    fn simple_spectrum_examples() {
        for n in 4..=9 {
            let p = pre_einstein_nice(&standard::filiform(n).unwrap()).unwrap();
            assert_eq!(simple_spectrum_unique(&p, true), Some(Nu::Exact(1)), "n={n}");
        }
        let r2 = pre_einstein_nice(&LieAlgebra::abelian(2)).unwrap();
        assert_eq!(r2.diagonal, vec![int(1), int(1)]);
        assert_eq!(simple_spectrum_unique(&r2, true), None);
        let h = pre_einstein_nice(&standard::heisenberg3()).unwrap();
        assert_eq!(simple_spectrum_unique(&h, true), None);
    }

    #[test]
    fn reports() {
        let r = report_nu(&standard::n6()).unwrap();
        assert_eq!((r.nu, r.rule), (Nu::Exact(0), NuRule::Registry("n6")));
        let sum = direct_sum(&standard::n6(), &standard::filiform(5).unwrap());
        let r = report_nu(&sum).unwrap();
        assert_eq!((r.nu, r.rule), (Nu::Exact(0), NuRule::ProductRule));
        assert_eq!(report_nu(&standard::filiform(7).unwrap()).unwrap().nu, Nu::Exact(1));
        assert_eq!(report_nu(&standard::sl2()).unwrap().nu, Nu::Exact(2));
        assert_eq!(report_nu(&standard::so3()).unwrap().nu, Nu::Exact(1));
        let aa = indecomposable_family(3).unwrap();
        assert_eq!(report_nu(aa.algebra()).unwrap().nu, Nu::Exact(3));
        let hh = direct_sum(&standard::heisenberg3(), &standard::heisenberg3());
        assert_eq!(report_nu(&hh).unwrap().nu, Nu::Unknown);
        assert_eq!(report_nu(&LieAlgebra::abelian(4)).unwrap().nu, Nu::Exact(1));
    }

    #[test]
    fn abelian_summands_do_not_change_nu() {
        let cases = [
            standard::n6(),
            standard::n7(),
            standard::sl2(),
            standard::filiform(6).unwrap(),
            AlmostAbelian::new(crate::catalog3::matrix_d())
                .unwrap()
                .algebra()
                .clone(),
        ];
        for g in cases {
            let base = report_nu(&g).unwrap();
            for m in 1..=3 {
                let r = report_nu(&direct_sum(&g, &LieAlgebra::abelian(m))).unwrap();
                assert_eq!(r.nu, base.nu);
                assert_eq!(r.abelian_summand, m);
            }
        }
    }

    #[test]
    fn hidden_abelian_summand_is_split() {
        let g = direct_sum(&standard::filiform(5).unwrap(), &LieAlgebra::abelian(1));
        let mut p = RatMatrix::identity(6);
        p[(0, 5)] = int(1);
        p[(5, 0)] = int(2);
        let h = conjugate(&g, &p).unwrap();
        let r = report_nu(&h).unwrap();
        assert_eq!(r.abelian_summand, 1);
        assert_eq!(r.nu, Nu::Exact(1));
    }
}
