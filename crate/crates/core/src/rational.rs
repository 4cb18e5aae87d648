//! Rational scalars: construction, strict parsing, canonical formatting and
//! exact decimal rendering.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value
//! reduced with a positive denominator after each operation. The canonical
//! text form is `"p/q"`, or a bare `"p"` when `q = 1`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical `"p/q"` / `"p"` rendering.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_digits(s: &str, full: &str) -> Result<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not a rational: {full:?}")));
    }
    s.parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("{full:?}: {e}")))
}

/// Parses `"p"`, `"-p"` or `"p/q"` with `q > 0`. Decimal points, exponents and
/// whitespace inside the literal are rejected. Non-reduced input such as
/// `"2/4"` is accepted and reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (neg, body) = match t.as_bytes().first() {
        Some(b'-') => (true, &t[1..]),
        Some(b'+') => (false, &t[1..]),
        _ => (false, t),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (parse_digits(n, s)?, parse_digits(d, s)?),
        None => (parse_digits(body, s)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    let num = if neg { -num } else { num };
    Ok(Rational::new(num, den))
}

/// Parses a comma-separated list of rationals. An empty string is an empty list.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// Exact value of a plain decimal literal such as `"-0.000062594"` or `"1.999"`.
pub fn parse_decimal(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (neg, body) = match t.as_bytes().first() {
        Some(b'-') => (true, &t[1..]),
        Some(b'+') => (false, &t[1..]),
        _ => (false, t),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::Parse(format!("not a decimal: {s:?}")));
    }
    let digits = format!("{int_part}{frac_part}");
    let mantissa = parse_digits(&digits, s)?;
    let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
    let v = Rational::new(mantissa, scale);
    Ok(if neg { -v } else { v })
}

/// Number of digits after the decimal point in a printed decimal literal.
fn fractional_digits(printed: &str) -> usize {
    printed.trim().split_once('.').map_or(0, |(_, f)| f.len())
}

/// Whether `value` rounds to the printed decimal at the printed precision,
/// i.e. `|value - printed| <= 10^-k / 2` where `k` is the number of printed
/// fractional digits. Decided exactly.
pub fn matches_printed_decimal(value: &Rational, printed: &str) -> Result<bool> {
    let target = parse_decimal(printed)?;
    let k = fractional_digits(printed) as u32;
    let half_ulp = Rational::new(BigInt::one(), BigInt::from(2u32) * BigInt::from(10u32).pow(k));
    Ok((value - target).abs() <= half_ulp)
}

fn pow10(e: i64) -> Rational {
    let p = Rational::from_integer(BigInt::from(10u32).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Rounds half away from zero to an integer.
fn round_half_away(x: &Rational) -> BigInt {
    if x.is_negative() {
        return -round_half_away(&-x);
    }
    let two = BigInt::from(2u32);
    (x.numer() * &two + x.denom()).div_floor(&(x.denom() * &two))
}

/// Renders `value` in plain decimal notation rounded to `sig` significant
/// digits (half away from zero). Trailing zeros are kept.
pub fn to_decimal_string(value: &Rational, sig: usize) -> String {
    assert!(sig > 0, "need at least one significant digit");
    if value.is_zero() {
        return "0".to_string();
    }
    let x = value.abs();
    // 10^e <= x < 10^(e+1)
    let mut e = x.numer().to_string().len() as i64 - x.denom().to_string().len() as i64;
    while pow10(e) > x {
        e -= 1;
    }
    while pow10(e + 1) <= x {
        e += 1;
    }
    let mut m = round_half_away(&(&x * pow10(sig as i64 - 1 - e)));
    if m.to_string().len() > sig {
        e += 1;
        m = round_half_away(&(&x * pow10(sig as i64 - 1 - e)));
    }
    let digits = m.to_string();
    let places = sig as i64 - 1 - e;
    let body = if places <= 0 {
        format!("{digits}{}", "0".repeat((-places) as usize))
    } else {
        let places = places as usize;
        if digits.len() > places {
            let (a, b) = digits.split_at(digits.len() - places);
            format!("{a}.{b}")
        } else {
            format!("0.{}{digits}", "0".repeat(places - digits.len()))
        }
    };
    match value.numer().sign() {
        Sign::Minus => format!("-{body}"),
        _ => body,
    }
}

/// Nearest `f64`; saturates to ±inf for huge values.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Serde adapters that carry rationals as canonical strings.
pub mod serde_str {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }

    pub mod vec {
        use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        use super::super::{format_rational, parse_rational, Rational};

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&format_rational(r))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|s| parse_rational(s).map_err(D::Error::custom))
                .collect()
        }
    }
}
