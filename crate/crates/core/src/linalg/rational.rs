//! Exact rational scalars and their text form (`p` or `p/q`).

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`; panics when `d` is zero.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::parse(0, format!("invalid rational `{s}`"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n).map_err(|_| bad())?;
        let d = BigInt::from_str(d).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::parse(0, format!("zero denominator in `{s}`")));
        }
        Ok(Rational::new(n, d))
    } else {
        BigInt::from_str(s).map(Rational::from_integer).map_err(|_| bad())
    }
}

/// Parses with the error attributed to `line`.
pub fn parse_rational_at(s: &str, line: usize) -> Result<Rational> {
    parse_rational(s).map_err(|e| match e {
        Error::Parse { message, .. } => Error::Parse { line, message },
        other => other,
    })
}

pub fn format_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3/4", "12/5"] {
            assert_eq!(parse_rational(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_rational("6/8").unwrap(), frac(3, 4));
        assert_eq!(parse_rational(" -2/-4 ").unwrap(), frac(1, 2));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "a", "1/2/3", "1.5"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }
}
