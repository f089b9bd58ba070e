//! Integer factorization for rational-root candidate generation.
//!
//! Trial division handles small factors; the remaining cofactor is split with
//! Miller-Rabin and Brent's variant of Pollard rho.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u32 = 10_000;
const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Miller-Rabin with fixed bases: deterministic below 3.3e24, probabilistic above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for p in WITNESSES {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'outer: for a in WITNESSES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut y, mut r, mut q) = (BigUint::from(2u32), 1u64, BigUint::one());
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let m = 64u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u32;
    }
}

fn split(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(&n);
    let rest = &n / &d;
    split(d, out);
    split(rest, out);
}

/// Prime factorization as sorted `(prime, exponent)` pairs; empty for 0 and 1.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut primes: Vec<BigUint> = Vec::new();
    if n.is_zero() {
        return Vec::new();
    }
    let mut m = n.clone();
    let mut p = 2u32;
    while p <= TRIAL_LIMIT {
        let bp = BigUint::from(p);
        if &bp * &bp > m {
            break;
        }
        while (&m % &bp).is_zero() {
            m /= &bp;
            primes.push(bp.clone());
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m.to_u64().is_some_and(|v| v < (TRIAL_LIMIT as u64).pow(2)) {
        if !m.is_one() {
            primes.push(m);
        }
    } else {
        split(m, &mut primes);
    }
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// All positive divisors in increasing order; `[]` for 0.
pub fn divisors(n: &BigUint) -> Vec<BigUint> {
    if n.is_zero() {
        return Vec::new();
    }
    let mut divs = vec![BigUint::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            for _ in 0..=e {
                next.push(pk.clone());
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_divisors(n: u64) -> Vec<BigUint> {
        (1..=n).filter(|d| n.is_multiple_of(*d)).map(BigUint::from).collect()
    }

    #[test]
    fn factors_semiprime_beyond_trial_range() {
        let p = BigUint::from(1_000_000_007u64);
        let q = BigUint::from(998_244_353u64);
        let f = factorize(&(&p * &q * &p));
        assert_eq!(f, vec![(q, 1), (p, 2)]);
    }

    #[test]
    fn primality_of_known_values() {
        assert!(is_probable_prime(&BigUint::from(2_147_483_647u64)));
        assert!(!is_probable_prime(&BigUint::from(3_215_031_751u64)));
        assert!(!is_probable_prime(&BigUint::from(1u32)));
    }

    proptest! {
        #[test]
        fn divisors_match_naive(n in 1u64..5000) {
            prop_assert_eq!(divisors(&BigUint::from(n)), naive_divisors(n));
        }

        #[test]
        fn factorization_multiplies_back(n in 1u64..u64::MAX) {
            let n = BigUint::from(n);
            let mut prod = BigUint::one();
            for (p, e) in factorize(&n) {
                prop_assert!(is_probable_prime(&p));
                prod *= p.pow(e);
            }
            prop_assert_eq!(prod, n);
        }
    }
}
