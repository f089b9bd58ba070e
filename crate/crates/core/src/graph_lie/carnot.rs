//! The graded algebra `Car(n)` of the lower central series.

use crate::error::{Error, Result};
use crate::lie::{is_nilpotent, lower_central_series};
use crate::linalg::{RatMatrix, Rational, Subspace};
use crate::LieAlgebra;

#[derive(Clone, Debug)]
pub struct CarnotReport {
    /// `Car(n)` on a basis adapted to the grading, degree 1 first.
    pub carnot: LieAlgebra,
    /// Degree of each basis element of `carnot`.
    pub degrees: Vec<usize>,
    /// The basis of `n` whose classes give the basis of `carnot`.
    pub lift: RatMatrix,
    /// Dimensions of the graded pieces.
    pub graded_dims: Vec<usize>,
    /// `dim γ_i - dim γ_{i+1}` in `n`.
    pub quotient_dims: Vec<usize>,
    pub jacobi_holds: bool,
}

impl CarnotReport {
    pub fn is_ok(&self) -> bool {
        self.jacobi_holds && self.graded_dims == self.quotient_dims
    }

    /// Whether the chosen lift is the standard basis, in which case the input
    /// tensor is graded and `carnot` can be compared with it directly.
    pub fn lift_is_identity(&self) -> bool {
        self.lift == RatMatrix::identity(self.lift.rows())
    }
}

pub fn carnot_check(g: &LieAlgebra) -> Result<CarnotReport> {
    if !is_nilpotent(g) {
        return Err(Error::NotNilpotent);
    }
    let n = g.dim();
    let mut gammas = vec![Subspace::full(n)];
    gammas.extend(lower_central_series(g));
    gammas.push(Subspace::zero(n));
    let end = gammas.iter().position(|s| s.is_zero()).unwrap_or(0);
    gammas.truncate(end + 1);
    let unit = |i: usize| {
        let mut e = vec![Rational::from_integer(0.into()); n];
        e[i] = Rational::from_integer(1.into());
        e
    };
    // Complement of γ_{i+1} inside γ_i, preferring standard basis vectors.
    let mut lift: Vec<Vec<Rational>> = Vec::new();
    let mut degrees = Vec::new();
    let mut quotient_dims = Vec::new();
    for i in (0..gammas.len() - 1).rev() {
        let (upper, lower) = (&gammas[i], &gammas[i + 1]);
        quotient_dims.push(upper.dim() - lower.dim());
        let mut span = lower.clone();
        let mut piece = Vec::new();
        for v in (0..n).map(unit).chain(upper.basis()) {
            if span.dim() == upper.dim() {
                break;
            }
            if upper.contains(&v) && !span.contains(&v) {
                span = span.add_vectors(std::slice::from_ref(&v));
                piece.push(v);
            }
        }
        degrees.push((i + 1, piece));
    }
    degrees.reverse();
    quotient_dims.reverse();
    let graded_dims: Vec<usize> = degrees.iter().map(|(_, p)| p.len()).collect();
    let mut deg = Vec::new();
    for (d, piece) in degrees {
        deg.extend(std::iter::repeat_n(d, piece.len()));
        lift.extend(piece);
    }
    let p = RatMatrix::from_columns(&lift)?;
    let inv = p.inverse()?;
    let mut entries = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let target = deg[a] + deg[b];
            let coords = inv.mul_vec(&g.bracket(&lift[a], &lift[b]))?;
            for (k, c) in coords.into_iter().enumerate() {
                if deg[k] == target && c != Rational::from_integer(0.into()) {
                    entries.push((a, b, k, c));
                }
            }
        }
    }
    let carnot = LieAlgebra::from_constants_unchecked(n, entries)?;
    let jacobi_holds = carnot.validate().is_ok();
    Ok(CarnotReport {
        carnot,
        degrees: deg,
        lift: p,
        graded_dims,
        quotient_dims,
        jacobi_holds,
    })
}
