//! Named algebras used throughout the crate and its fixtures.

use crate::error::{Error, Result};
use crate::linalg::{frac, int, RatMatrix, Rational};
use crate::LieAlgebra;

fn build(dim: usize, entries: &[(usize, usize, usize, i64)]) -> LieAlgebra {
    LieAlgebra::from_constants(dim, entries.iter().map(|&(i, j, k, c)| (i - 1, j - 1, k - 1, int(c))))
        .expect("builtin algebra satisfies Jacobi")
}

fn named(g: LieAlgebra, names: &[&str]) -> LieAlgebra {
    g.with_names(names.iter().map(|s| s.to_string()).collect()).unwrap()
}

/// Six-dimensional nilpotent algebra that admits no nice basis.
pub fn n6() -> LieAlgebra {
    build(
        6,
        &[(1, 2, 4, 1), (1, 4, 5, 1), (1, 5, 6, 1), (2, 3, 6, 1), (2, 4, 6, 1)],
    )
}

/// Seven-dimensional central extension of [`n6`] with center `span{X6, X7}`.
pub fn n7() -> LieAlgebra {
    build(
        7,
        &[(1, 2, 4, 1), (1, 4, 5, 1), (1, 5, 6, 1), (2, 3, 6, 1), (2, 4, 7, 1)],
    )
}

/// Filiform `L_n`: `[e_1, e_i] = e_{i+1}` for `2 <= i < n`.
pub fn filiform(n: usize) -> Result<LieAlgebra> {
    if n < 3 {
        return Err(Error::LnTooSmall(n));
    }
    LieAlgebra::from_constants_unchecked(n, (1..n - 1).map(|i| (0, i, i + 1, int(1))))?
        .with_names((1..=n).map(|i| format!("e{i}")).collect())
}

pub fn heisenberg3() -> LieAlgebra {
    build(3, &[(1, 2, 3, 1)])
}

/// `sl(2, R)`: `[e1, e2] = 2 e2`, `[e1, e3] = -2 e3`, `[e2, e3] = e1`.
pub fn sl2() -> LieAlgebra {
    named(
        build(3, &[(1, 2, 2, 2), (1, 3, 3, -2), (2, 3, 1, 1)]),
        &["e1", "e2", "e3"],
    )
}

/// `so(3)`: `[f2, f3] = f1`, `[f3, f1] = f2`, `[f1, f2] = f3`.
pub fn so3() -> LieAlgebra {
    named(
        build(3, &[(2, 3, 1, 1), (1, 3, 2, -1), (1, 2, 3, 1)]),
        &["f1", "f2", "f3"],
    )
}

/// Certified pre-Einstein derivation of [`n6`]: `(9/32) diag(1, 2, 3, 3, 4, 5)`.
pub fn n6_pre_einstein() -> Vec<Rational> {
    [1, 2, 3, 3, 4, 5].iter().map(|k| frac(9 * k, 32)).collect()
}

/// Cyclic permutation of four coordinates, characteristic polynomial `x^4 - 1`.
pub fn cyclic4() -> RatMatrix {
    RatMatrix::from_i64(&[&[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])
}

pub fn diag4() -> RatMatrix {
    RatMatrix::from_i64(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, -2, 0], &[0, 0, 0, 2]])
}

/// Eigenvalues `1 ± i`, whose squares are not real.
pub fn complex_pair() -> RatMatrix {
    RatMatrix::from_i64(&[&[1, 1], &[-1, 1]])
}

/// `B` with `B^3 = 64 I` and eigenvalues `4, -2 ± 2 sqrt(3) i`.
pub fn root64() -> RatMatrix {
    RatMatrix::from_i64(&[&[-2, 3, 0], &[-4, -2, 0], &[0, 0, 4]])
}

/// Jordan block of size two with eigenvalue one.
pub fn jordan2() -> RatMatrix {
    RatMatrix::from_i64(&[&[1, 1], &[0, 1]])
}

/// Nilpotent matrices with various Jordan types.
pub fn nilpotent_matrices() -> Vec<(&'static str, RatMatrix)> {
    vec![
        ("zero2", RatMatrix::zeros(2, 2)),
        ("jordan_nil2", RatMatrix::from_i64(&[&[0, 1], &[0, 0]])),
        (
            "jordan_nil3",
            RatMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]),
        ),
        (
            "nil_2_2",
            RatMatrix::from_i64(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]),
        ),
        (
            "nil_conjugated",
            RatMatrix::from_i64(&[&[1, 1, 0], &[-1, -1, 0], &[2, 3, 0]]),
        ),
    ]
}
