//! Exact rational scalars.
//!
//! All arithmetic goes through [`Rational`], an arbitrary-precision fraction
//! kept in lowest terms with a positive denominator.  On the wire rationals
//! are plain strings such as `"3/2"`, `"-7"` or `"0"`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num/den`.  Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// `Some(k)` when `x` is an integer that fits in an `i64`.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if !is_integer(x) {
        return None;
    }
    i64::try_from(x.numer().clone()).ok()
}

/// True when `y - x` is a non-negative integer.
pub fn is_nonneg_integer_gap(x: &Rational, y: &Rational) -> bool {
    let d = y - x;
    is_integer(&d) && !d.is_negative()
}

pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// Parses `"a"`, `"a/b"` with optional sign.  The typographic minus sign
/// U+2212 is accepted as well as ASCII `-`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let cleaned: String = s.trim().replace('\u{2212}', "-");
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    if cleaned.is_empty() || cleaned.contains('.') || cleaned.contains(char::is_whitespace) {
        return Err(bad());
    }
    let (num, den) = match cleaned.split_once('/') {
        Some((n, d)) => (n, d),
        None => (cleaned.as_str(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

pub fn parse_rationals<S: AsRef<str>>(items: &[S]) -> Result<Vec<Rational>> {
    items.iter().map(|s| parse_rational(s.as_ref())).collect()
}

pub fn format_rationals(items: &[Rational]) -> Vec<String> {
    items.iter().map(format_rational).collect()
}

/// Scales a rational vector to a primitive integer vector (same line),
/// leaving the zero vector unchanged.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() {
        return v.to_vec();
    }
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &gcd))
        .collect()
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}
