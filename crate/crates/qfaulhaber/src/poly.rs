//! Dense polynomials in the indeterminate q over exact rationals.
//!
//! Coefficients are stored by ascending exponent with no trailing zeros, so
//! the zero polynomial is the empty vector and structural equality decides
//! mathematical equality. Degrees in this crate stay small (a few hundred at
//! most), which makes the dense representation the simple and fast choice.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::BigRat;

/// Polynomial in q with [`BigRat`] coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRat>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    /// The indeterminate q itself.
    pub fn q() -> Self {
        Self::monomial(BigRat::one(), 1)
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn constant_int(c: i64) -> Self {
        Self::constant(crate::rational::rat_int(c))
    }

    /// c * q^exp.
    pub fn monomial(c: BigRat, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRat::zero(); exp + 1];
        coeffs[exp] = c;
        QPoly { coeffs }
    }

    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// Ascending coefficient slice, without trailing zeros.
    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Coefficient of q^exp (zero beyond the degree).
    pub fn coeff(&self, exp: usize) -> BigRat {
        self.coeffs.get(exp).cloned().unwrap_or_else(BigRat::zero)
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient; None for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &BigRat) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// self^e with the 0^0 = 1 convention.
    pub fn pow(&self, mut e: u32) -> QPoly {
        let mut base = self.clone();
        let mut acc = QPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact evaluation at a rational point (Horner).
    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation at q = 1, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> BigRat {
        self.coeffs.iter().fold(BigRat::zero(), |a, c| a + c)
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    ///
    /// Panics with "division by zero polynomial" when `den` is zero.
    pub fn divrem(&self, den: &QPoly) -> (QPoly, QPoly) {
        assert!(!den.is_zero(), "division by zero polynomial");
        let dd = den.coeffs.len() - 1;
        let lead_inv = BigRat::one() / den.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRat::zero(); rem.len() - dd];
        while rem.len() > dd {
            let dr = rem.len() - 1;
            let factor = rem.last().unwrap() * &lead_inv;
            if !factor.is_zero() {
                for (i, dc) in den.coeffs.iter().enumerate() {
                    let delta = &factor * dc;
                    rem[dr - dd + i] -= delta;
                }
                quot[dr - dd] = factor;
            }
            rem.pop();
        }
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, den: &QPoly) -> QPoly {
        let (q, r) = self.divrem(den);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&(BigRat::one() / l)),
        }
    }

    /// Monic gcd, computed by a primitive pseudo-remainder sequence over the
    /// integers (contents stripped every step to bound coefficient growth).
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let a = to_int_primitive(self);
        let b = to_int_primitive(other);
        let g = int_primitive_gcd(a, b);
        QPoly::from_coeffs(g.into_iter().map(BigRat::from_integer).collect()).monic()
    }

    /// The base change q -> q^m: coefficient of q^i moves to q^(m*i).
    pub fn subst_power(&self, m: u32) -> QPoly {
        assert!(m >= 1, "base-change exponent must be positive");
        if m == 1 || self.is_zero() {
            return self.clone();
        }
        let m = m as usize;
        let mut coeffs = vec![BigRat::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m] = c.clone();
        }
        QPoly { coeffs }
    }

    /// Coefficients of f(1 + t) as a polynomial in t (Taylor shift to q = 1).
    pub fn expand_about_one(&self) -> QPoly {
        let mut acc: Vec<BigRat> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            // acc = acc * (1 + t) + c
            let mut next = vec![BigRat::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i] += a;
                next[i + 1] += a;
            }
            if next.is_empty() {
                next.push(BigRat::zero());
            }
            next[0] += c;
            acc = next;
        }
        QPoly::from_coeffs(acc)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(BigRat::is_integer)
    }

    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero);
            if let Some(b) = rhs.coeffs.get(i) {
                c += b;
            }
            coeffs.push(c);
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QPoly { coeffs }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl From<BigRat> for QPoly {
    fn from(c: BigRat) -> Self {
        QPoly::constant(c)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::poly_plain(self))
    }
}

/// Clear denominators and strip integer content; leading coefficient made
/// positive. Input must be nonzero.
fn to_int_primitive(f: &QPoly) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in f.coeffs() {
        l = l.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();
    let content = int_content(&ints);
    for c in &mut ints {
        *c = &*c / &content;
    }
    if ints.last().unwrap().is_negative() {
        for c in &mut ints {
            *c = -&*c;
        }
    }
    ints
}

fn int_content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn int_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Pseudo-remainder of a by b (b nonzero, deg a >= deg b on entry not
/// required; returns a when deg a < deg b).
fn int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        for c in &mut r {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let delta = &lr * bc;
            r[dr - db + i] -= delta;
        }
        r.pop();
        int_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn int_make_primitive(v: &mut [BigInt]) {
    if v.is_empty() {
        return;
    }
    let content = int_content(v);
    if !content.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &content;
        }
    }
}

fn int_primitive_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let mut r = int_prem(&a, &b);
        int_make_primitive(&mut r);
        a = std::mem::replace(&mut b, r);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn poly(v: &[i64]) -> QPoly {
        QPoly::from_coeffs(v.iter().map(|&n| rat_int(n)).collect())
    }

    #[test]
    fn zero_has_no_trailing_coefficients() {
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[1, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn arithmetic_and_eval() {
        let f = poly(&[1, 1]); // 1 + q
        let g = poly(&[-1, 1]); // -1 + q
        assert_eq!(&f * &g, poly(&[-1, 0, 1]));
        assert_eq!(&f + &g, poly(&[0, 2]));
        assert_eq!(f.pow(2), poly(&[1, 2, 1]));
        assert_eq!(f.eval(&rat_int(3)), rat_int(4));
        assert_eq!(poly(&[]).pow(0), QPoly::one());
    }

    #[test]
    fn divrem_recovers_factors() {
        let f = poly(&[-1, 0, 0, 0, 0, 0, 1]); // q^6 - 1
        let g = poly(&[-1, 0, 1]); // q^2 - 1
        let (q, r) = f.divrem(&g);
        assert!(r.is_zero());
        assert_eq!(q, poly(&[1, 0, 1, 0, 1]));
        assert_eq!(f.div_exact(&g), q);
    }

    #[test]
    #[should_panic(expected = "division by zero polynomial")]
    fn division_by_zero_panics() {
        let _ = poly(&[1, 2]).divrem(&QPoly::zero());
    }

    #[test]
    fn gcd_is_monic_and_correct() {
        // (q - 1)(q + 2) and (q - 1)(q - 3)
        let a = &poly(&[-1, 1]) * &poly(&[2, 1]);
        let b = &poly(&[-1, 1]) * &poly(&[-3, 1]);
        assert_eq!(a.gcd(&b), poly(&[-1, 1]));
        // coprime inputs
        assert_eq!(poly(&[1, 1]).gcd(&poly(&[2, 1])), QPoly::one());
        // rational coefficients
        let c = poly(&[-1, 1]).scale(&rat(1, 2));
        assert_eq!(c.gcd(&poly(&[-1, 1])), poly(&[-1, 1]));
        assert_eq!(QPoly::zero().gcd(&poly(&[0, 3])), poly(&[0, 1]));
    }

    #[test]
    fn subst_power_spreads_exponents() {
        let f = poly(&[1, 1, 1]);
        assert_eq!(f.subst_power(2), poly(&[1, 0, 1, 0, 1]));
        assert_eq!(f.subst_power(1), f);
        assert_eq!(QPoly::constant_int(7).subst_power(5), QPoly::constant_int(7));
    }

    #[test]
    fn expand_about_one_is_taylor_shift() {
        // 1 + q + q^2 at q = 1 + t: 3 + 3t + t^2
        assert_eq!(poly(&[1, 1, 1]).expand_about_one(), poly(&[3, 3, 1]));
        // q - 1 -> t
        assert_eq!(poly(&[-1, 1]).expand_about_one(), poly(&[0, 1]));
        assert!(QPoly::zero().expand_about_one().is_zero());
    }

    #[test]
    fn coefficient_predicates() {
        assert!(poly(&[0, 1, 2]).has_nonneg_integer_coeffs());
        assert!(!poly(&[-1, 1]).has_nonneg_integer_coeffs());
        assert!(poly(&[-1, 1]).has_integer_coeffs());
        assert!(!QPoly::constant(rat(1, 2)).has_integer_coeffs());
    }
}
