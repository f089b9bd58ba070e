//! Floating-point estimate of binomial factorizations, used only when the
//! exact rational enumeration cannot be certified complete.

use num_complex::Complex64;

use crate::error::Result;
use crate::linalg::RatPoly;

pub const TOLERANCE: f64 = 1e-9;

/// Non-certified numeric estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericHint {
    /// Roots with multiplicity.
    pub roots: Vec<Complex64>,
    /// Real binomial factorizations found at [`TOLERANCE`].
    pub factorizations: Vec<Vec<(usize, f64)>>,
    /// Equivalence classes among them.
    pub classes: usize,
}

/// Simple roots of a squarefree polynomial by the Aberth-Ehrlich iteration.
fn aberth(coeffs: &[f64]) -> Vec<Complex64> {
    let m = coeffs.len() - 1;
    if m == 0 {
        return Vec::new();
    }
    let lead = coeffs[m];
    let p: Vec<Complex64> = coeffs.iter().map(|c| Complex64::new(c / lead, 0.0)).collect();
    let dp: Vec<Complex64> = (1..=m).map(|i| p[i] * i as f64).collect();
    let eval = |c: &[Complex64], z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a);
    let radius = 1.0 + p[..m].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..m)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / m as f64 + 0.4))
        .collect();
    for _ in 0..2000 {
        let mut worst: f64 = 0.0;
        for k in 0..m {
            let ratio = eval(&p, z[k]) / eval(&dp, z[k]);
            let repulsion: Complex64 = (0..m).filter(|j| *j != k).map(|j| 1.0 / (z[k] - z[j])).sum();
            let step = ratio / (1.0 - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                worst = worst.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    z
}

/// Roots with multiplicity via the squarefree decomposition.
pub fn numeric_roots(p: &RatPoly) -> Result<Vec<Complex64>> {
    let mut out = Vec::new();
    for (s, mult) in p.squarefree_decomposition()? {
        for r in aberth(&s.to_f64()) {
            out.extend(std::iter::repeat_n(r, mult));
        }
    }
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(out)
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= TOLERANCE * a.norm().max(b.norm()).max(1.0)
}

fn enumerate(remaining: &[Complex64], cur: &mut Vec<(usize, f64)>, out: &mut Vec<Vec<(usize, f64)>>) {
    let Some(&alpha) = remaining.first() else {
        let mut f = cur.clone();
        f.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
        out.push(f);
        return;
    };
    for d in 1..=remaining.len() {
        let r = alpha.powu(d as u32);
        if r.im.abs() > TOLERANCE * r.norm().max(1.0) {
            continue;
        }
        let mut left = remaining[1..].to_vec();
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / d as f64);
        let mut ok = true;
        for k in 1..d {
            let target = alpha * omega.powu(k as u32);
            match left.iter().position(|z| close(*z, target)) {
                Some(i) => {
                    left.remove(i);
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            cur.push((d, r.re));
            enumerate(&left, cur, out);
            cur.pop();
        }
    }
}

fn same_factorization(a: &[(usize, f64)], b: &[(usize, f64)]) -> bool {
    a.len() == b.len()
        && a.iter()
            .zip(b)
            .all(|(x, y)| x.0 == y.0 && close(x.1.into(), y.1.into()))
}

fn real_roots_of(q: f64, n: usize) -> Vec<f64> {
    let mag = q.abs().powf(1.0 / n as f64);
    match (q > 0.0, n.is_multiple_of(2)) {
        (true, true) => vec![mag, -mag],
        (true, false) => vec![mag],
        (false, false) => vec![-mag],
        (false, true) => vec![],
    }
}

fn numerically_equivalent(a: &[(usize, f64)], b: &[(usize, f64)]) -> bool {
    fn go(a: &[(usize, f64)], b: &[(usize, f64)], used: &mut [bool], pairs: &mut Vec<(usize, f64)>) -> bool {
        let i = pairs.len();
        if i == a.len() {
            let (n0, q0) = pairs[0];
            return real_roots_of(q0, n0).into_iter().any(|eta| {
                pairs
                    .iter()
                    .all(|(n, q)| close(eta.powi(*n as i32).into(), (*q).into()))
            });
        }
        for j in 0..b.len() {
            if used[j] || b[j].0 != a[i].0 {
                continue;
            }
            used[j] = true;
            pairs.push((a[i].0, a[i].1 / b[j].1));
            let found = go(a, b, used, pairs);
            pairs.pop();
            used[j] = false;
            if found {
                return true;
            }
        }
        false
    }
    a.len() == b.len() && (a.is_empty() || go(a, b, &mut vec![false; b.len()], &mut Vec::new()))
}

pub fn numeric_hint(p: &RatPoly) -> Result<NumericHint> {
    let roots = numeric_roots(p)?;
    let mut raw = Vec::new();
    enumerate(&roots, &mut Vec::new(), &mut raw);
    let mut factorizations: Vec<Vec<(usize, f64)>> = Vec::new();
    for f in raw {
        if !factorizations.iter().any(|g| same_factorization(g, &f)) {
            factorizations.push(f);
        }
    }
    let mut reps: Vec<usize> = Vec::new();
    for (i, f) in factorizations.iter().enumerate() {
        if !reps.iter().any(|r| numerically_equivalent(&factorizations[*r], f)) {
            reps.push(i);
        }
    }
    Ok(NumericHint {
        roots,
        classes: reps.len(),
        factorizations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_x2_minus_2() {
        let r = numeric_roots(&RatPoly::from_i64(&[-2, 0, 1])).unwrap();
        assert!((r[0].re + 2f64.sqrt()).abs() < 1e-12 && (r[1].re - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn hint_for_irrational_split() {
        // x^2 - 2 = (x - sqrt2)(x + sqrt2) and x^2 - 2 itself.
        let h = numeric_hint(&RatPoly::from_i64(&[-2, 0, 1])).unwrap();
        assert_eq!(h.factorizations.len(), 2);
        assert_eq!(h.classes, 2);
    }

    #[test]
    fn hint_agrees_with_exact_count_on_x4_minus_1() {
        let h = numeric_hint(&RatPoly::from_i64(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(h.classes, 3);
    }

    #[test]
    fn repeated_roots() {
        let p = RatPoly::from_i64(&[-1, 1]).pow(3);
        let h = numeric_hint(&p).unwrap();
        assert_eq!(h.roots.len(), 3);
        assert_eq!(h.classes, 1);
    }
}
