//! Nilpotent Lie algebras associated to graphs.
//!
//! `n_{G,c}` is the free `c`-step nilpotent Lie algebra on the vertices of `G`
//! modulo the ideal generated by brackets of non-adjacent vertices.

mod carnot;
mod lyndon;
mod nice;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::lie::{ideal_closure, quotient};
use crate::linalg::{RatMatrix, Rational};
use crate::LieAlgebra;

pub use carnot::{carnot_check, CarnotReport};
pub use lyndon::{
    bracket_string, free_nilpotent, free_nilpotent_dimension, is_lyndon, lyndon_words, standard_factorization,
    witt_dimension, FreeNilpotent, DIMENSION_CAP,
};
pub use nice::{construct_nice_basis, free_nice_predicate, nice_predicate, GraphNiceBasis, NicePredicate, NiceReason};

/// Simple graph on vertices `0..vertices` together with a nilpotency class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    vertices: usize,
    edges: BTreeSet<(usize, usize)>,
    class: usize,
}

impl GraphSpec {
    /// Edges are unordered 0-based pairs; duplicates and loops are rejected.
    pub fn new(vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>, class: usize) -> Result<Self> {
        if vertices == 0 {
            return Err(Error::InvalidGraph("at least one vertex is required".into()));
        }
        if class == 0 {
            return Err(Error::InvalidGraph("class must be at least 1".into()));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", a + 1)));
            }
            if a >= vertices || b >= vertices {
                return Err(Error::InvalidGraph(format!("edge {} {} out of range", a + 1, b + 1)));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!("edge {} {} given twice", a + 1, b + 1)));
            }
        }
        Ok(GraphSpec {
            vertices,
            edges: set,
            class,
        })
    }

    pub fn complete(d: usize, class: usize) -> Result<Self> {
        Self::new(d, (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))), class)
    }

    /// Path `v_1 - v_2 - ... - v_n`.
    pub fn path(n: usize, class: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|a| (a - 1, a)), class)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn with_class(&self, class: usize) -> Result<Self> {
        Self::new(self.vertices, self.edges.iter().copied(), class)
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|(a, b)| *a == v || *b == v).count()
    }

    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertices)
            .flat_map(|a| (a + 1..self.vertices).map(move |b| (a, b)))
            .filter(|&(a, b)| !self.has_edge(a, b))
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertices];
        let mut out = Vec::new();
        for s in 0..self.vertices {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                for (u, flag) in seen.iter_mut().enumerate() {
                    if !*flag && self.has_edge(u, v) {
                        *flag = true;
                        comp.push(u);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced on `vs`, relabelled `0..vs.len()` in the given order.
    pub fn induced(&self, vs: &[usize]) -> Result<Self> {
        let edges = (0..vs.len())
            .flat_map(|a| (a + 1..vs.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| self.has_edge(vs[a], vs[b]))
            .collect::<Vec<_>>();
        Self::new(vs.len(), edges, self.class)
    }

    pub fn has_triangle(&self) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (b + 1..self.vertices).any(|c| self.has_edge(a, c) && self.has_edge(b, c)))
    }

    /// Whether a path on three vertices occurs as a (not necessarily induced) subgraph.
    pub fn has_path3(&self) -> bool {
        (0..self.vertices).any(|v| self.degree(v) >= 2)
    }

    /// Parses `vertices n`, `class c` and `edge i j` lines (1-based vertices).
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices = None;
        let mut class = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::parse(line, format!("expected an integer, got `{s}`")))
            };
            match fields.as_slice() {
                ["vertices", n] if vertices.is_none() => vertices = Some(num(n)?),
                ["class", c] if class.is_none() => class = Some(num(c)?),
                ["edge", a, b] => {
                    let n = vertices.ok_or_else(|| Error::parse(line, "edge before vertices line"))?;
                    let (a, b) = (num(a)?, num(b)?);
                    if a == 0 || b == 0 || a > n || b > n {
                        return Err(Error::parse(line, format!("vertex out of range 1..={n}")));
                    }
                    edges.push((a - 1, b - 1));
                }
                _ => return Err(Error::parse(line, format!("unrecognised line `{content}`"))),
            }
        }
        let vertices = vertices.ok_or_else(|| Error::parse(0, "missing vertices line"))?;
        let class = class.ok_or_else(|| Error::parse(0, "missing class line"))?;
        Self::new(vertices, edges, class)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.vertices)?;
        writeln!(f, "class {}", self.class)?;
        for (a, b) in &self.edges {
            writeln!(f, "edge {} {}", a + 1, b + 1)?;
        }
        Ok(())
    }
}

/// Every labelled simple graph on `n` vertices.
pub fn all_graphs(n: usize, class: usize) -> impl Iterator<Item = GraphSpec> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| *p);
        GraphSpec::new(n, edges, class).expect("generated graphs are simple")
    })
}

/// `n_{G,c}` with each basis element labelled by a Lyndon word over the vertices.
#[derive(Clone, Debug)]
pub struct GraphAlgebra {
    pub algebra: LieAlgebra,
    pub words: Vec<Vec<usize>>,
    /// Projection from the free algebra, when the algebra was built as a quotient of it.
    pub projection: Option<RatMatrix>,
}

impl GraphAlgebra {
    /// Index of the basis element of the single vertex `v`.
    pub fn vertex_index(&self, v: usize) -> Option<usize> {
        self.words.iter().position(|w| w.as_slice() == [v])
    }
}

/// Quotient of the free algebra on all vertices by the closure of the
/// non-edge brackets.
pub fn graph_algebra_direct(g: &GraphSpec) -> Result<GraphAlgebra> {
    let free = free_nilpotent(g.vertices, g.class)?;
    let n = free.algebra.dim();
    let index = |w: &[usize]| free.words.iter().position(|u| u.as_slice() == w);
    let mut gens = Vec::new();
    if g.class >= 2 {
        for (a, b) in g.non_edges() {
            let mut e = vec![Rational::from_integer(0.into()); n];
            let k = index(&[a, b]).ok_or_else(|| Error::Internal("missing length-2 word".into()))?;
            e[k] = Rational::from_integer(1.into());
            gens.push(e);
        }
    }
    let ideal = ideal_closure(&free.algebra, &gens);
    let (algebra, projection) = quotient(&free.algebra, &ideal)?;
    let words = ideal
        .complement_coordinates()
        .into_iter()
        .map(|i| free.words[i].clone())
        .collect();
    Ok(GraphAlgebra {
        algebra,
        words,
        projection: Some(projection),
    })
}

/// `n_{G,c}`, assembled from the connected components of `G` when it is
/// disconnected.
///
/// Basis elements are ordered by word length, then by word, in both routes.
pub fn graph_algebra(g: &GraphSpec) -> Result<GraphAlgebra> {
    let comps = g.components();
    if comps.len() == 1 {
        return graph_algebra_direct(g);
    }
    let mut parts = Vec::new();
    for vs in &comps {
        parts.push(graph_algebra_direct(&g.induced(vs)?)?);
    }
    let mut order: Vec<(Vec<usize>, usize, usize)> = Vec::new();
    for (c, part) in parts.iter().enumerate() {
        for (i, w) in part.words.iter().enumerate() {
            order.push((w.iter().map(|&x| comps[c][x]).collect(), c, i));
        }
    }
    order.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(&b.0)));
    let mut pos: Vec<Vec<usize>> = parts.iter().map(|p| vec![0; p.words.len()]).collect();
    for (new, (_, c, i)) in order.iter().enumerate() {
        pos[*c][*i] = new;
    }
    let mut entries = Vec::new();
    for (c, part) in parts.iter().enumerate() {
        for (i, j, k, x) in part.algebra.constants() {
            entries.push((pos[c][i], pos[c][j], pos[c][k], x.clone()));
        }
    }
    let words: Vec<Vec<usize>> = order.into_iter().map(|(w, _, _)| w).collect();
    let names = words.iter().map(|w| bracket_string(w, &|x| x + 1)).collect();
    let algebra = LieAlgebra::from_constants_unchecked(words.len(), entries)?.with_names(names)?;
    Ok(GraphAlgebra {
        algebra,
        words,
        projection: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{lower_central_series, quotient};

    #[test]
    fn path_dimensions() {
        assert_eq!(
            graph_algebra(&GraphSpec::path(3, 3).unwrap()).unwrap().algebra.dim(),
            10
        );
        assert_eq!(
            graph_algebra(&GraphSpec::path(3, 4).unwrap()).unwrap().algebra.dim(),
            20
        );
    }

    #[test]
    fn path_class_four_matches_listed_basis() {
        let ga = graph_algebra(&GraphSpec::path(3, 4).unwrap()).unwrap();
        let by_len: Vec<usize> = (1..=4)
            .map(|l| ga.words.iter().filter(|w| w.len() == l).count())
            .collect();
        assert_eq!(by_len, vec![3, 2, 5, 10]);
        ga.algebra.validate().unwrap();
    }

    #[test]
    fn complete_graph_is_free() {
        for (d, c) in [(2, 4), (3, 3), (4, 2)] {
            let ga = graph_algebra(&GraphSpec::complete(d, c).unwrap()).unwrap();
            let free = free_nilpotent(d, c).unwrap();
            assert_eq!(ga.algebra, free.algebra);
            assert_eq!(ga.words, free.words);
        }
    }

    #[test]
    fn component_route_matches_direct_route() {
        for n in 1..=4 {
            for c in 1..=3 {
                for g in all_graphs(n, c) {
                    let a = graph_algebra(&g).unwrap();
                    let b = graph_algebra_direct(&g).unwrap();
                    assert_eq!(a.algebra, b.algebra, "{g}");
                    assert_eq!(a.words, b.words);
                }
            }
        }
    }

    #[test]
    fn lower_class_is_a_quotient() {
        for n in 1..=4 {
            for g in all_graphs(n, 3) {
                let big = graph_algebra(&g).unwrap();
                let small = graph_algebra(&g.with_class(2).unwrap()).unwrap();
                let lcs = lower_central_series(&big.algebra);
                let gamma3 = lcs
                    .get(1)
                    .cloned()
                    .unwrap_or_else(|| crate::Subspace::zero(big.algebra.dim()));
                let (q, _) = quotient(&big.algebra, &gamma3).unwrap();
                assert_eq!(q, small.algebra, "{g}");
            }
        }
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        let g = GraphSpec::parse("vertices 3\nclass 4\nedge 1 2\nedge 2 3 # path\n").unwrap();
        assert_eq!(g, GraphSpec::path(3, 4).unwrap());
        assert_eq!(GraphSpec::parse(&g.to_string()).unwrap(), g);
        assert!(matches!(
            GraphSpec::parse("vertices 2\nclass 2\nedge 1 1\n"),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            GraphSpec::parse("vertices 2\nclass 2\nedge 1 3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            GraphSpec::parse("vertices 2\nclass 2\nedge 1 2\nedge 2 1\n"),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn components_and_subgraph_tests() {
        let g = GraphSpec::new(5, [(0, 3), (1, 2)], 2).unwrap();
        assert_eq!(g.components(), vec![vec![0, 3], vec![1, 2], vec![4]]);
        assert!(!g.has_path3() && !g.has_triangle());
        assert!(GraphSpec::complete(3, 2).unwrap().has_triangle());
    }
}
