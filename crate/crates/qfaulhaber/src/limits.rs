//! Exact limits at q = 1 via truncated Laurent expansion in eps = q - 1.
//!
//! A rational function expands exactly: substitute q = 1 + eps into numerator
//! and denominator and divide as Laurent series. An L-extension value a + b*L
//! additionally multiplies the expansion of b by the Gregory series (the
//! expansion of L), so removable singularities cancel coefficient by
//! coefficient and the limit is the eps^0 coefficient of the combination.
//!
//! The truncation order is raised adaptively: starting from the caller's
//! hint, it doubles until the constant term is inside the known window, up to
//! a cap (the default is [`DEFAULT_ORDER_CAP`]). Pole orders grow with the
//! index of the q-Bernoulli number involved, so a fixed order would fail
//! silently; the cap converts runaway growth into a loud error instead.

use num_traits::Zero;

use crate::eps::{gregory_series, EpsSeries};
use crate::error::{Error, Result};
use crate::lext::LExt;
use crate::qrat::QRat;
use crate::rational::BigRat;

/// Default cap for the adaptive truncation order.
pub const DEFAULT_ORDER_CAP: i64 = 64;

/// Laurent expansion of `f` about q = 1, truncated at eps^order.
///
/// The zero function expands to the zero series. For a nonzero `f` whose
/// valuation at q = 1 is at or beyond `order`, no nonzero coefficient fits in
/// the window and [`Error::OrderTooSmall`] is returned.
pub fn laurent_at_one(f: &QRat, order: i64) -> Result<EpsSeries> {
    assert!(order >= 1, "order must be positive");
    if f.is_zero() {
        return Ok(EpsSeries::zero(order));
    }
    let num = f.num().expand_about_one();
    let den = f.den().expand_about_one();
    let vn = num.valuation().unwrap() as i64;
    let vd = den.valuation().unwrap() as i64;
    let val = vn - vd;
    if val >= order {
        return Err(Error::OrderTooSmall);
    }
    let n = (order - val) as usize;
    let unit_coeffs = |p: &crate::poly::QPoly, v: i64| -> Vec<BigRat> {
        (0..n)
            .map(|i| p.coeff((v as usize) + i))
            .collect()
    };
    let nu = unit_coeffs(&num, vn);
    let du = unit_coeffs(&den, vd);
    let inv = crate::eps::unit_inverse(&du, n);
    let mut coeffs = vec![BigRat::zero(); n];
    for (i, a) in nu.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in inv.iter().enumerate() {
            if i + j >= n {
                break;
            }
            if !b.is_zero() {
                coeffs[i + j] += a * b;
            }
        }
    }
    Ok(EpsSeries::new(val, coeffs, order))
}

/// Like [`laurent_at_one`] but represents an out-of-window function as the
/// zero series (which is a true statement: f = 0 + O(eps^order)).
fn laurent_or_zero(f: &QRat, order: i64) -> EpsSeries {
    match laurent_at_one(f, order) {
        Ok(s) => s,
        Err(Error::OrderTooSmall) => EpsSeries::zero(order),
        Err(_) => unreachable!("laurent_at_one only fails with OrderTooSmall"),
    }
}

fn initial_order(hint: i64, cap: i64) -> i64 {
    hint.max(4).min(cap)
}

fn read_constant_term(s: &EpsSeries) -> Result<BigRat> {
    if s.has_pole() {
        return Err(Error::PoleAtOne);
    }
    Ok(s.coeff(0).expect("constant term inside the window"))
}

/// Exact q -> 1 limit of a rational function.
///
/// Requires every negative-exponent coefficient of the expansion to vanish;
/// a genuine pole reports [`Error::PoleAtOne`].
pub fn qrat_limit_at_one(f: &QRat, order_hint: i64, cap: i64) -> Result<BigRat> {
    assert!(order_hint >= 1 && cap >= 1, "orders must be positive");
    match laurent_at_one(f, initial_order(order_hint, cap)) {
        Ok(s) => read_constant_term(&s),
        // Valuation at or beyond the window, which is >= 1: the limit is 0.
        Err(Error::OrderTooSmall) => Ok(BigRat::zero()),
        Err(e) => Err(e),
    }
}

/// Exact q -> 1 limit of an L-extension value a + b*L.
///
/// Expands a and b, multiplies b's expansion by the Gregory series, and reads
/// the eps^0 coefficient of the sum. The order doubles from the hint until
/// the constant term is resolved; exceeding `cap` reports
/// [`Error::OrderCap`].
pub fn lext_limit_at_one(x: &LExt, order_hint: i64, cap: i64) -> Result<BigRat> {
    assert!(order_hint >= 1 && cap >= 1, "orders must be positive");
    let mut order = initial_order(order_hint, cap);
    loop {
        let a = laurent_or_zero(x.rat_part(), order);
        let b = laurent_or_zero(x.log_part(), order);
        let combined = &a + &(&b * &gregory_series(order));
        if combined.order() >= 1 {
            return read_constant_term(&combined);
        }
        if order >= cap {
            return Err(Error::OrderCap(cap));
        }
        order = (order * 2).min(cap);
    }
}

impl QRat {
    /// q -> 1 limit with the default order cap.
    pub fn limit_at_one(&self, order_hint: i64) -> Result<BigRat> {
        qrat_limit_at_one(self, order_hint, DEFAULT_ORDER_CAP)
    }
}

impl LExt {
    /// q -> 1 limit with the default order cap.
    pub fn limit_at_one(&self, order_hint: i64) -> Result<BigRat> {
        lext_limit_at_one(self, order_hint, DEFAULT_ORDER_CAP)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::QPoly;
    use crate::rational::{rat, rat_int};

    fn poly(v: &[i64]) -> QPoly {
        QPoly::from_coeffs(v.iter().map(|&n| rat_int(n)).collect())
    }

    #[test]
    fn expansion_of_a_polynomial_is_its_taylor_shift() {
        // [3]_q = 1 + q + q^2 -> 3 + 3 eps + eps^2
        let f = QRat::from(poly(&[1, 1, 1]));
        let s = laurent_at_one(&f, 5).unwrap();
        assert_eq!(s.coeff(0).unwrap(), rat_int(3));
        assert_eq!(s.coeff(1).unwrap(), rat_int(3));
        assert_eq!(s.coeff(2).unwrap(), rat_int(1));
        assert_eq!(s.coeff(3).unwrap(), rat_int(0));
    }

    #[test]
    fn expansion_of_a_simple_pole() {
        // 1/(q - 1) = eps^-1 exactly
        let f = QRat::new(poly(&[1]), poly(&[-1, 1]));
        let s = laurent_at_one(&f, 3).unwrap();
        assert_eq!(s.valuation(), Some(-1));
        assert_eq!(s.coeff(-1).unwrap(), rat_int(1));
        assert_eq!(s.coeff(0).unwrap(), rat_int(0));
        assert_eq!(s.coeff(2).unwrap(), rat_int(0));
    }

    #[test]
    fn q_integers_expand_to_their_value() {
        for k in 0u32..=10 {
            let f = QRat::from(crate::sums::q_integer(k));
            let s = laurent_at_one(&f, 4);
            if k == 0 {
                assert!(s.unwrap().is_zero());
            } else {
                assert_eq!(s.unwrap().coeff(0).unwrap(), rat_int(k as i64));
            }
        }
    }

    #[test]
    fn order_window_must_reach_the_valuation() {
        // (q - 1)^3 has valuation 3; a window of order 2 sees nothing.
        let f = QRat::from(poly(&[-1, 1]).pow(3));
        assert_eq!(laurent_at_one(&f, 2), Err(Error::OrderTooSmall));
        assert!(laurent_at_one(&f, 4).is_ok());
        // but the limit is still resolvable: it is 0
        assert_eq!(qrat_limit_at_one(&f, 2, 8).unwrap(), rat_int(0));
    }

    #[test]
    fn rational_limits() {
        // [5]_q -> 5
        let f = QRat::from(crate::sums::q_integer(5));
        assert_eq!(f.limit_at_one(4).unwrap(), rat_int(5));
        // (q^2 - 1)/(q - 1) -> 2
        let g = QRat::new(poly(&[-1, 0, 1]), poly(&[-1, 1]));
        assert_eq!(g.limit_at_one(4).unwrap(), rat_int(2));
        // 1/(q - 1) has a pole
        let h = QRat::new(poly(&[1]), poly(&[-1, 1]));
        assert_eq!(h.limit_at_one(4), Err(Error::PoleAtOne));
    }

    #[test]
    fn l_extension_limits() {
        // L -> 1
        assert_eq!(LExt::l().limit_at_one(4).unwrap(), rat_int(1));
        // (1 - L)/(q - 1) -> -1/2
        let inv = QRat::new(poly(&[1]), poly(&[-1, 1]));
        let x = LExt::new(inv.clone(), -&inv);
        assert_eq!(x.limit_at_one(4).unwrap(), rat(-1, 2));
        // L/(q - 1) is a genuine pole: L(1) = 1 != 0
        let y = LExt::new(QRat::zero(), inv);
        assert_eq!(y.limit_at_one(4), Err(Error::PoleAtOne));
    }

    #[test]
    fn cap_is_reported_when_too_low() {
        // pole of order 10 in b with cap 2: can never resolve eps^0
        let den = poly(&[-1, 1]).pow(10);
        let x = LExt::new(QRat::zero(), QRat::new(poly(&[1]), den));
        assert_eq!(lext_limit_at_one(&x, 1, 2), Err(Error::OrderCap(2)));
        assert!(lext_limit_at_one(&x, 1, 64).is_err()); // still a pole
    }

    #[test]
    fn power_limits_match_integer_powers() {
        for k in 0u32..=10 {
            for n in 0u32..=5 {
                let f = QRat::from(crate::sums::q_integer(k).pow(n));
                let expect = rat_int((k as i64).pow(n));
                assert_eq!(f.limit_at_one(4).unwrap(), expect, "k={k} n={n}");
            }
        }
    }
}
