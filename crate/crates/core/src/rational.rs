//! Rational scalars and their textual form.
//!
//! Rationals are written `p/q` or `p` with an optional leading `-`. The
//! canonical form is reduced with a positive denominator, and omits `/1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn parse_digits(s: &str, full: &str) -> Result<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("invalid rational `{full}`")));
    }
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("invalid rational `{full}`")))
}

/// Parse a strict rational string (`-3/4`, `5`, `0`).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (parse_digits(n, text)?, parse_digits(d, text)?),
        None => (parse_digits(body, text)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{text}`")));
    }
    let value = Rational::new(num, den);
    Ok(if negative { -value } else { value })
}

pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Bit-size used for pivot selection: bits of numerator plus bits of denominator.
pub(crate) fn bit_size(value: &BigInt) -> u64 {
    value.abs().bits()
}
