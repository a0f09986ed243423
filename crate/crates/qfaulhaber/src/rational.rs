//! Scalar layer: arbitrary-precision rational numbers and small helpers.
//!
//! Every coefficient in the crate is a [`BigRat`]. Arithmetic is exact and
//! closed; the representation is always reduced with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar: reduced fraction with positive denominator.
pub type BigRat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics if d = 0.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// Binomial coefficient C(n, k) as an exact rational.
pub fn binomial(n: u32, k: u32) -> BigRat {
    if k > n {
        return BigRat::zero();
    }
    BigRat::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// x^e by repeated squaring, with x^0 = 1.
pub fn rat_pow(x: &BigRat, mut e: u32) -> BigRat {
    let mut base = x.clone();
    let mut acc = BigRat::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Parse the exact literal forms `p`, `p/r`, and `-p/r`.
///
/// Decimal input is rejected rather than rounded; exactness is end-to-end.
pub fn parse_ratio(s: &str) -> std::result::Result<BigRat, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".to_string());
    }
    if s.contains('.') {
        return Err(format!(
            "decimal input is rejected, write an exact ratio instead: {s:?}"
        ));
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| format!("invalid integer numerator: {num_str:?}"))?;
    let den: BigInt = den_str
        .parse()
        .map_err(|_| format!("invalid integer denominator: {den_str:?}"))?;
    if den.is_zero() {
        return Err("zero denominator".to_string());
    }
    Ok(BigRat::new(num, den))
}

/// Exact decimal rendering of `x`, truncated toward zero after `digits`
/// fractional digits. Trailing zeros are kept so output width is stable.
pub fn decimal_string(x: &BigRat, digits: usize) -> String {
    let neg = x.is_negative();
    let a = x.abs();
    let int_part = a.numer() / a.denom();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits == 0 {
        return out;
    }
    out.push('.');
    let ten = BigInt::from(10);
    let mut rem = a.numer() - &int_part * a.denom();
    for _ in 0..digits {
        rem *= &ten;
        let d = &rem / a.denom();
        out.push_str(&d.to_string());
        rem -= &d * a.denom();
    }
    out
}
