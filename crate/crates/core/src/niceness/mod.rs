//! Niceness of a basis and compatibility with the central series.
//!
//! A basis is nice when every bracket of two basis elements is a multiple of a
//! single basis element, and two brackets landing on the same basis element
//! either come from the same pair or from disjoint pairs.

mod monomial;

use std::collections::BTreeMap;
use std::fmt;

use crate::lie::{lower_central_series, upper_central_series};
use crate::linalg::Subspace;
use crate::LieAlgebra;

pub use crate::lie::conjugate;
pub use monomial::{monomial_equivalent, MonomialMap, Scale};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `[x_i, x_j]` has more than one nonzero coordinate.
    MultipleOutputs { i: usize, j: usize, outputs: Vec<usize> },
    /// `[x_a, x_b]` and `[x_c, x_d]` both hit `x_k` although the pairs overlap.
    SharedOutput {
        k: usize,
        first: (usize, usize),
        second: (usize, usize),
    },
}

impl Violation {
    /// Human-readable form using the algebra's basis names.
    pub fn describe(&self, g: &LieAlgebra) -> String {
        match self {
            Violation::MultipleOutputs { i, j, outputs } => {
                let outs: Vec<&str> = outputs.iter().map(|k| g.name(*k)).collect();
                format!(
                    "[{}, {}] has {} nonzero components: {}",
                    g.name(*i),
                    g.name(*j),
                    outs.len(),
                    outs.join(", ")
                )
            }
            Violation::SharedOutput { k, first, second } => format!(
                "[{}, {}] and [{}, {}] both hit {} but share an index",
                g.name(first.0),
                g.name(first.1),
                g.name(second.0),
                g.name(second.1),
                g.name(*k)
            ),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MultipleOutputs { i, j, outputs } => {
                let outs: Vec<String> = outputs.iter().map(|k| (k + 1).to_string()).collect();
                write!(f, "bracket ({}, {}) has outputs {}", i + 1, j + 1, outs.join(", "))
            }
            Violation::SharedOutput { k, first, second } => write!(
                f,
                "brackets ({}, {}) and ({}, {}) share output {}",
                first.0 + 1,
                first.1 + 1,
                second.0 + 1,
                second.1 + 1,
                k + 1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NiceVerdict {
    pub violations: Vec<Violation>,
}

impl NiceVerdict {
    pub fn is_nice(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_nice(g: &LieAlgebra) -> NiceVerdict {
    let mut violations = Vec::new();
    let mut hits: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, j, v) in g.brackets() {
        if v.len() > 1 {
            violations.push(Violation::MultipleOutputs {
                i,
                j,
                outputs: v.iter().map(|(k, _)| *k).collect(),
            });
        }
        for (k, _) in v {
            hits.entry(*k).or_default().push((i, j));
        }
    }
    for (k, pairs) in hits {
        for (a, p) in pairs.iter().enumerate() {
            for q in &pairs[a + 1..] {
                if p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1 {
                    violations.push(Violation::SharedOutput {
                        k,
                        first: *p,
                        second: *q,
                    });
                }
            }
        }
    }
    NiceVerdict { violations }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Series {
    Lower,
    Upper,
}

/// A central series term not spanned by basis vectors. `index` is `k` for
/// `gamma_k` or `Z_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptednessFailure {
    pub series: Series,
    pub index: usize,
    pub term_dim: usize,
    pub basis_vectors_inside: usize,
}

impl fmt::Display for AdaptednessFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.series {
            Series::Lower => "gamma",
            Series::Upper => "Z",
        };
        write!(
            f,
            "{name}_{} has dimension {} but contains only {} basis vectors",
            self.index, self.term_dim, self.basis_vectors_inside
        )
    }
}

fn basis_vectors_inside(s: &Subspace) -> usize {
    let n = s.ambient_dim();
    (0..n)
        .filter(|i| {
            let mut e = vec![crate::Rational::from_integer(0.into()); n];
            e[*i] = crate::Rational::from_integer(1.into());
            s.contains(&e)
        })
        .count()
}

/// Failures of the basis to span every lower and upper central series term;
/// empty when adapted.
pub fn check_adapted(g: &LieAlgebra) -> Vec<AdaptednessFailure> {
    let mut out = Vec::new();
    let mut check = |series, index, s: &Subspace| {
        let inside = basis_vectors_inside(s);
        if inside != s.dim() {
            out.push(AdaptednessFailure {
                series,
                index,
                term_dim: s.dim(),
                basis_vectors_inside: inside,
            });
        }
    };
    for (k, s) in lower_central_series(g).iter().enumerate() {
        check(Series::Lower, k + 2, s);
    }
    for (k, s) in upper_central_series(g).iter().enumerate() {
        check(Series::Upper, k + 1, s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, RatMatrix};
    use crate::standard;

    #[test]
    fn standard_bases_are_nice() {
        for g in [
            standard::n7(),
            standard::sl2(),
            standard::so3(),
            standard::filiform(6).unwrap(),
        ] {
            assert!(check_nice(&g).is_nice());
            assert!(check_adapted(&g).is_empty());
        }
    }

    #[test]
    fn n6_standard_basis_fails_second_condition() {
        let v = check_nice(&standard::n6()).violations;
        assert_eq!(
            v,
            vec![Violation::SharedOutput {
                k: 5,
                first: (1, 2),
                second: (1, 3)
            }]
        );
    }

    #[test]
    fn two_outputs_violate_first_condition() {
        let g = LieAlgebra::from_constants(
            3,
            [
                (0, 1, 1, int(1)),
                (0, 1, 2, int(1)),
                (0, 2, 2, int(1)),
                (0, 2, 1, int(-1)),
            ],
        )
        .unwrap();
        let v = check_nice(&g);
        assert!(!v.is_nice());
        assert!(v.violations.contains(&Violation::MultipleOutputs {
            i: 0,
            j: 1,
            outputs: vec![1, 2]
        }));
    }

    #[test]
    fn overlapping_pairs_violate_second_condition() {
        // [x1, x2] = x4 and [x1, x3] = x4.
        let g = LieAlgebra::from_constants(4, [(0, 1, 3, int(1)), (0, 2, 3, int(1))]).unwrap();
        assert_eq!(
            check_nice(&g).violations,
            vec![Violation::SharedOutput {
                k: 3,
                first: (0, 1),
                second: (0, 2)
            }]
        );
    }

    #[test]
    fn sheared_heisenberg_basis_stays_adapted() {
        let p = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1]]);
        let h = conjugate(&standard::heisenberg3(), &p).unwrap();
        assert!(check_nice(&h).is_nice());
        assert!(check_adapted(&h).is_empty());
    }

    #[test]
    fn unadapted_basis_is_detected() {
        // h3 in the basis {X1, X2, X2 + X3}: the center is no longer spanned.
        let p = RatMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]]);
        let h = conjugate(&standard::heisenberg3(), &p).unwrap();
        assert!(!check_adapted(&h).is_empty());
    }
}
