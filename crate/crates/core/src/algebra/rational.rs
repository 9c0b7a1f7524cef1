use alloc::format;
use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::AlgebraError;

/// Exact rational number, always reduced with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for `n/d` with small integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p`, `p/q` (optional surrounding whitespace).
pub fn parse_rational(text: &str) -> Result<Rational, AlgebraError> {
    let bad = || AlgebraError::MalformedRational(text.to_string());
    let t = text.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let valid = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(n) || !valid(d) || d.starts_with('-') {
        return Err(bad());
    }
    let n = BigInt::from_str(n.trim_start_matches('+')).map_err(|_| bad())?;
    let d = BigInt::from_str(d.trim_start_matches('+')).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Canonical `p/q` rendering; integers are written with denominator 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}/1", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
