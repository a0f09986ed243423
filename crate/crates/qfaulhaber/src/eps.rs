//! Truncated Laurent series in eps = q - 1.
//!
//! An [`EpsSeries`] knows its coefficients exactly for every exponent in the
//! window `[offset, order)` and nothing beyond: it stands for
//! `sum_i c_i eps^(offset+i) + O(eps^order)`. Ring operations propagate the
//! truncation window by the usual rules (min of orders for addition,
//! `min(o1 + v2, o2 + v1)` for multiplication), so a result never claims a
//! coefficient it cannot actually know.
//!
//! This is the machinery behind every q -> 1 limit in the crate: expansions
//! are exact rationals, so a coefficient inside the window is either exactly
//! zero or exactly not.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::BigRat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsSeries {
    /// Exponent of the first stored coefficient; may be negative.
    offset: i64,
    /// Coefficients for exponents offset, offset+1, ..., order-1.
    coeffs: Vec<BigRat>,
    /// Exponent of the O(eps^order) truncation.
    order: i64,
}

impl EpsSeries {
    /// Series with the given coefficient window. The leading coefficient is
    /// normalized to be nonzero (leading zeros advance the offset), so a
    /// series whose known window is all zero is the canonical zero series.
    pub fn new(offset: i64, coeffs: Vec<BigRat>, order: i64) -> EpsSeries {
        assert!(
            order - offset >= 0 && coeffs.len() == (order - offset) as usize,
            "coefficient window does not match offset and order"
        );
        let mut s = EpsSeries {
            offset,
            coeffs,
            order,
        };
        s.normalize();
        s
    }

    /// 0 + O(eps^order).
    pub fn zero(order: i64) -> EpsSeries {
        EpsSeries {
            offset: order,
            coeffs: Vec::new(),
            order,
        }
    }

    /// c + O(eps^order). With order <= 0 the constant is invisible and the
    /// zero series is returned.
    pub fn constant(c: BigRat, order: i64) -> EpsSeries {
        Self::monomial(c, 0, order)
    }

    /// c * eps^exp + O(eps^order).
    pub fn monomial(c: BigRat, exp: i64, order: i64) -> EpsSeries {
        if exp >= order || c.is_zero() {
            return Self::zero(order);
        }
        let mut coeffs = vec![BigRat::zero(); (order - exp) as usize];
        coeffs[0] = c;
        EpsSeries {
            offset: exp,
            coeffs,
            order,
        }
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(0) => {}
            Some(n) => {
                self.coeffs.drain(..n);
                self.offset += n as i64;
            }
            None => {
                self.coeffs.clear();
                self.offset = self.order;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Exponent of the first nonzero coefficient; None when the whole known
    /// window is zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.offset)
    }

    /// Valuation lower bound: the valuation when known, the truncation order
    /// for the zero series.
    fn val_bound(&self) -> i64 {
        self.valuation().unwrap_or(self.order)
    }

    /// Coefficient of eps^exp; None when the exponent is at or beyond the
    /// truncation order (i.e. unknown).
    pub fn coeff(&self, exp: i64) -> Option<BigRat> {
        if exp >= self.order {
            return None;
        }
        if exp < self.offset {
            return Some(BigRat::zero());
        }
        Some(self.coeffs[(exp - self.offset) as usize].clone())
    }

    /// True when some known coefficient below eps^0 is nonzero.
    pub fn has_pole(&self) -> bool {
        self.valuation().is_some_and(|v| v < 0)
    }

    /// Restrict the window to a smaller truncation order.
    pub fn truncated(&self, order: i64) -> EpsSeries {
        assert!(order <= self.order, "cannot extend a truncated series");
        if order <= self.offset {
            return EpsSeries::zero(order);
        }
        EpsSeries::new(
            self.offset,
            self.coeffs[..(order - self.offset) as usize].to_vec(),
            order,
        )
    }

    pub fn scale(&self, c: &BigRat) -> EpsSeries {
        if c.is_zero() {
            return EpsSeries::zero(self.order);
        }
        EpsSeries {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            order: self.order,
        }
    }

    /// Multiplicative inverse. Panics on the zero series (no known nonzero
    /// coefficient to invert). The result window is `order - 2*valuation`.
    pub fn inverse(&self) -> EpsSeries {
        let v = self.valuation().expect("inverse of zero series");
        let n = (self.order - v) as usize;
        let w = unit_inverse(&self.coeffs, n);
        EpsSeries::new(-v, w, self.order - 2 * v)
    }
}

impl Add for &EpsSeries {
    type Output = EpsSeries;
    fn add(self, rhs: &EpsSeries) -> EpsSeries {
        let order = self.order.min(rhs.order);
        let offset = self.offset.min(rhs.offset).min(order);
        let mut coeffs = vec![BigRat::zero(); (order - offset) as usize];
        for s in [self, rhs] {
            for (i, a) in s.coeffs.iter().enumerate() {
                let e = s.offset + i as i64;
                if e < order {
                    coeffs[(e - offset) as usize] += a;
                }
            }
        }
        EpsSeries::new(offset, coeffs, order)
    }
}

impl Sub for &EpsSeries {
    type Output = EpsSeries;
    fn sub(self, rhs: &EpsSeries) -> EpsSeries {
        self + &(-rhs)
    }
}

impl Neg for &EpsSeries {
    type Output = EpsSeries;
    fn neg(self) -> EpsSeries {
        EpsSeries {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

impl Mul for &EpsSeries {
    type Output = EpsSeries;
    fn mul(self, rhs: &EpsSeries) -> EpsSeries {
        let order = (self.order + rhs.val_bound()).min(rhs.order + self.val_bound());
        if self.is_zero() || rhs.is_zero() {
            return EpsSeries::zero(order);
        }
        let offset = self.offset + rhs.offset;
        let n = (order - offset) as usize;
        let mut coeffs = vec![BigRat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= n {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        EpsSeries::new(offset, coeffs, order)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for EpsSeries {
            type Output = EpsSeries;
            fn $method(self, rhs: EpsSeries) -> EpsSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for EpsSeries {
    type Output = EpsSeries;
    fn neg(self) -> EpsSeries {
        -&self
    }
}

impl fmt::Display for EpsSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.is_zero() {
            let mut first = true;
            for (i, c) in self.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let e = self.offset + i as i64;
                let mag = c.abs();
                if c.is_negative() {
                    f.write_str(if first { "-" } else { " - " })?;
                } else if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                if e == 0 {
                    write!(f, "{mag}")?;
                } else {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("eps")?;
                    } else {
                        write!(f, "eps^{e}")?;
                    }
                }
            }
            f.write_str(" + ")?;
        }
        write!(f, "O(eps^{})", self.order)
    }
}

/// First n coefficients of the inverse of a unit power series (u[0] != 0).
pub(crate) fn unit_inverse(u: &[BigRat], n: usize) -> Vec<BigRat> {
    assert!(!u.is_empty() && !u[0].is_zero());
    let u0_inv = BigRat::one() / &u[0];
    let mut w = Vec::with_capacity(n);
    w.push(u0_inv.clone());
    for j in 1..n {
        let mut acc = BigRat::zero();
        for i in 1..=j {
            if i < u.len() && !u[i].is_zero() {
                acc += &u[i] * &w[j - i];
            }
        }
        w.push(-(acc * &u0_inv));
    }
    w
}

/// The series eps / log(1 + eps) = 1 + eps/2 - eps^2/12 + eps^3/24 - ...,
/// whose coefficients are the Gregory coefficients. This is the expansion of
/// (q - 1)/log q about q = 1, the scalar the q-Bernoulli transcendental part
/// is measured against when q -> 1.
pub fn gregory_series(order: i64) -> EpsSeries {
    assert!(order >= 1, "order must be positive");
    // log(1 + eps)/eps = sum_{j>=0} (-1)^j eps^j / (j + 1), a unit.
    let u: Vec<BigRat> = (0..order)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            crate::rational::rat(sign, j + 1)
        })
        .collect();
    EpsSeries::new(0, unit_inverse(&u, order as usize), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use num_bigint::BigInt;

    fn series(offset: i64, v: &[i64], order: i64) -> EpsSeries {
        EpsSeries::new(offset, v.iter().map(|&n| rat_int(n)).collect(), order)
    }

    #[test]
    fn normalization_strips_leading_zeros() {
        let s = series(-1, &[0, 3, 0], 2);
        assert_eq!(s.valuation(), Some(0));
        assert_eq!(s.coeff(0), Some(rat_int(3)));
        assert_eq!(s.coeff(1), Some(rat_int(0)));
        assert_eq!(s.coeff(2), None);
        assert!(series(0, &[0, 0], 2).is_zero());
    }

    #[test]
    fn addition_truncates_to_the_smaller_order() {
        let a = series(0, &[1, 1, 1], 3);
        let b = series(-1, &[2, 0, 5], 2);
        let sum = &a + &b;
        assert_eq!(sum.order(), 2);
        assert_eq!(sum, series(-1, &[2, 1, 6], 2));
    }

    #[test]
    fn multiplication_window_rule() {
        // (eps^-1 known mod eps^2) * (eps known mod eps^3):
        // orders: min(2 + 1, 3 + (-1)) = 2
        let a = series(-1, &[1, 0, 0], 2);
        let b = series(1, &[1, 0], 3);
        let p = &a * &b;
        assert_eq!(p.order(), 2);
        assert_eq!(p, series(0, &[1, 0], 2));
        // zero series absorbs with the right window
        let z = EpsSeries::zero(3);
        assert_eq!((&z * &a).order(), 2);
        assert!((&z * &a).is_zero());
    }

    #[test]
    fn inverse_of_a_shifted_unit() {
        // 1/(eps - eps^2 + O(eps^4)) = eps^-1 + 1 + eps + O(eps^2)
        let f = series(1, &[1, -1, 0], 4);
        let inv = f.inverse();
        assert_eq!(inv.order(), 2);
        assert_eq!(inv, series(-1, &[1, 1, 1], 2));
        assert!((&f * &inv).coeff(0).unwrap().is_one());
    }

    /// Independent route to the Gregory coefficients: g_n is the integral of
    /// the binomial coefficient C(x, n) over [0, 1], expanded through signed
    /// Stirling numbers of the first kind:
    ///   g_n = (1/n!) * sum_k s(n, k) / (k + 1).
    fn gregory_oracle(n: usize) -> BigRat {
        // falling factorial x(x-1)...(x-n+1) coefficients
        let mut falling = vec![BigInt::from(1)];
        for m in 0..n as i64 {
            let mut next = vec![BigInt::from(0); falling.len() + 1];
            for (k, c) in falling.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigInt::from(m);
            }
            falling = next;
        }
        let mut sum = BigRat::zero();
        for (k, c) in falling.iter().enumerate() {
            sum += BigRat::new(c.clone(), BigInt::from(k as i64 + 1));
        }
        let mut fact = BigInt::from(1);
        for i in 1..=n as i64 {
            fact *= i;
        }
        sum / BigRat::from_integer(fact)
    }

    #[test]
    fn gregory_series_matches_stirling_oracle() {
        let g = gregory_series(10);
        for n in 0..10 {
            assert_eq!(g.coeff(n).unwrap(), gregory_oracle(n as usize), "g_{n}");
        }
    }

    #[test]
    fn gregory_series_frozen_prefix() {
        // 1 + eps/2 - eps^2/12 + eps^3/24 - 19 eps^4/720
        let g = gregory_series(5);
        assert_eq!(g.coeff(0).unwrap(), rat_int(1));
        assert_eq!(g.coeff(1).unwrap(), rat(1, 2));
        assert_eq!(g.coeff(2).unwrap(), rat(-1, 12));
        assert_eq!(g.coeff(3).unwrap(), rat(1, 24));
        assert_eq!(g.coeff(4).unwrap(), rat(-19, 720));
        // order=1 truncation is the bare constant
        let g1 = gregory_series(1);
        assert_eq!(g1, EpsSeries::constant(rat_int(1), 1));
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(series(-1, &[1, -2], 1).to_string(), "eps^-1 - 2 + O(eps^1)");
        assert_eq!(EpsSeries::zero(3).to_string(), "O(eps^3)");
    }
}
