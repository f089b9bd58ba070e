//! Which graph algebras admit a nice basis, and explicit nice bases when they do.

use std::fmt;

use crate::error::{Error, Result};
use crate::lie::conjugate;
use crate::linalg::{RatMatrix, Rational};
use crate::LieAlgebra;

use super::{graph_algebra, GraphAlgebra, GraphSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NiceReason {
    /// Every graph algebra of class at most two has a nice basis.
    ClassAtMostTwo,
    TriangleFree,
    ContainsTriangle,
    /// No vertex of degree two or more: the algebra is a sum of copies of `n_{2,4}` and a line.
    Matching,
    ContainsPath3,
    Edgeless,
    HasEdge,
}

impl NiceReason {
    pub fn theorem(&self) -> &'static str {
        match self {
            NiceReason::ClassAtMostTwo => "class <= 2: nice basis from vertices and edge brackets",
            NiceReason::TriangleFree => "class 3: nice basis exists iff the graph has no 3-cycle",
            NiceReason::ContainsTriangle => "class 3: a 3-cycle rules out a nice basis",
            NiceReason::Matching => "class 4: nice basis exists iff no path on three vertices is a subgraph",
            NiceReason::ContainsPath3 => "class 4: a path on three vertices rules out a nice basis",
            NiceReason::Edgeless => "class >= 5: nice basis exists iff the graph has no edges",
            NiceReason::HasEdge => "class >= 5: any edge rules out a nice basis",
        }
    }
}

impl fmt::Display for NiceReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.theorem())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NicePredicate {
    pub nice: bool,
    pub reason: NiceReason,
}

pub fn nice_predicate(g: &GraphSpec) -> NicePredicate {
    let (nice, reason) = match g.class() {
        0..=2 => (true, NiceReason::ClassAtMostTwo),
        3 if g.has_triangle() => (false, NiceReason::ContainsTriangle),
        3 => (true, NiceReason::TriangleFree),
        4 if g.has_path3() => (false, NiceReason::ContainsPath3),
        4 => (true, NiceReason::Matching),
        _ if g.edges().next().is_some() => (false, NiceReason::HasEdge),
        _ => (true, NiceReason::Edgeless),
    };
    NicePredicate { nice, reason }
}

/// Whether the free `c`-step nilpotent algebra on `d` generators has a nice basis.
pub fn free_nice_predicate(d: usize, c: usize) -> bool {
    d <= 1 || c <= 2 || (d == 2 && c <= 4)
}

/// A nice basis of a graph algebra: the columns of `basis`, in the
/// coordinates of `algebra`, with `nice` the conjugated structure constants.
#[derive(Clone, Debug)]
pub struct GraphNiceBasis {
    pub graph_algebra: GraphAlgebra,
    pub basis: RatMatrix,
    pub labels: Vec<String>,
    pub nice: LieAlgebra,
}

/// Right-normed bracket `[v_{l_0}, [v_{l_1}, [..., v_{l_k}]]]`.
fn right_normed(ga: &GraphAlgebra, letters: &[usize]) -> Result<Vec<Rational>> {
    let n = ga.algebra.dim();
    let unit = |v: usize| -> Result<Vec<Rational>> {
        let i = ga
            .vertex_index(v)
            .ok_or_else(|| Error::Internal(format!("vertex {v} missing")))?;
        let mut e = vec![Rational::from_integer(0.into()); n];
        e[i] = Rational::from_integer(1.into());
        Ok(e)
    };
    let (last, rest) = letters
        .split_last()
        .ok_or_else(|| Error::Internal("empty bracket".into()))?;
    let mut acc = unit(*last)?;
    for &v in rest.iter().rev() {
        acc = ga.algebra.bracket(&unit(v)?, &acc);
    }
    Ok(acc)
}

fn label(letters: &[usize]) -> String {
    match letters {
        [v] => format!("v{}", v + 1),
        [v, rest @ ..] => format!("[v{},{}]", v + 1, label(rest)),
        [] => String::new(),
    }
}

/// Bracket words making up the nice basis, in order.
fn basis_words(g: &GraphSpec) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..g.vertices()).map(|v| vec![v]).collect();
    let c = g.class();
    if c < 2 || (c >= 5 && g.edges().next().is_none()) {
        return out;
    }
    out.extend(g.edges().map(|(i, j)| vec![i, j]));
    if c == 2 {
        return out;
    }
    if c == 3 {
        for i in 0..g.vertices() {
            for k in i + 1..g.vertices() {
                for j in 0..g.vertices() {
                    if g.has_edge(i, j) && g.has_edge(j, k) {
                        out.push(vec![i, j, k]);
                    }
                }
            }
        }
    }
    for (i, j) in g.edges() {
        out.push(vec![i, i, j]);
        out.push(vec![j, i, j]);
    }
    if c == 4 {
        for (i, j) in g.edges() {
            out.push(vec![i, i, i, j]);
            out.push(vec![j, i, i, j]);
            out.push(vec![j, j, i, j]);
        }
    }
    out
}

pub fn construct_nice_basis(g: &GraphSpec) -> Result<GraphNiceBasis> {
    if !nice_predicate(g).nice {
        return Err(Error::PredicateFalse);
    }
    let ga = graph_algebra(g)?;
    let words = basis_words(g);
    let cols = words.iter().map(|w| right_normed(&ga, w)).collect::<Result<Vec<_>>>()?;
    if cols.len() != ga.algebra.dim() {
        return Err(Error::Internal(format!(
            "constructed {} vectors for an algebra of dimension {}",
            cols.len(),
            ga.algebra.dim()
        )));
    }
    let basis = RatMatrix::from_columns(&cols)?;
    let labels: Vec<String> = words.iter().map(|w| label(w)).collect();
    let nice = conjugate(&ga.algebra, &basis)?.with_names(labels.clone())?;
    Ok(GraphNiceBasis {
        graph_algebra: ga,
        basis,
        labels,
        nice,
    })
}
