//! Rational functions in q, kept in canonical reduced form.
//!
//! Canonical form: numerator and denominator coprime, denominator monic and
//! nonzero. Two values are mathematically equal iff their canonical forms are
//! componentwise equal, so `==` decides equality of rational functions.
//!
//! Arithmetic uses the classical cross-cancellation tricks (gcd of the two
//! denominators for addition, crosswise gcds for multiplication) so the
//! expensive polynomial gcds run on the small shared factors rather than the
//! full products.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::poly::QPoly;
use crate::rational::BigRat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    /// Canonical form of num/den.
    ///
    /// Panics with "division by zero polynomial" when `den` is zero. For any
    /// nonzero polynomial c, `QRat::new(a*c, b*c) == QRat::new(a, b)`.
    pub fn new(num: QPoly, den: QPoly) -> QRat {
        assert!(!den.is_zero(), "division by zero polynomial");
        if num.is_zero() {
            return QRat::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        let lead = den.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = BigRat::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        QRat { num, den }
    }

    /// Construct from parts already known to be canonical.
    fn from_reduced(num: QPoly, den: QPoly) -> QRat {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return QRat::zero();
        }
        debug_assert!(den.leading().unwrap().is_one());
        debug_assert!(num.gcd(&den).is_one());
        QRat { num, den }
    }

    pub fn zero() -> QRat {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> QRat {
        QRat {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    pub fn constant(c: BigRat) -> QRat {
        QRat {
            num: QPoly::constant(c),
            den: QPoly::one(),
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator, when the value is a polynomial.
    pub fn as_poly(&self) -> Option<&QPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> QRat {
        assert!(!self.is_zero(), "division by zero");
        let lead = self.num.leading().unwrap().clone();
        let inv = BigRat::one() / lead;
        QRat {
            num: self.den.scale(&inv),
            den: self.num.scale(&inv),
        }
    }

    /// Exact evaluation; None when the point is a pole.
    pub fn eval(&self, x: &BigRat) -> Option<BigRat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// The base change q -> q^m. A ring homomorphism, so canonical form is
    /// preserved (coprimality survives substitution by Bezout).
    pub fn subst_power(&self, m: u32) -> QRat {
        QRat::from_reduced(self.num.subst_power(m), self.den.subst_power(m))
    }

    pub fn scale(&self, c: &BigRat) -> QRat {
        if c.is_zero() {
            return QRat::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        QRat::from_reduced(self.num.scale(c), self.den.clone())
    }

    /// Multiply by a polynomial, cancelling against the denominator first.
    pub fn mul_poly(&self, p: &QPoly) -> QRat {
        if p.is_zero() || self.is_zero() {
            return QRat::zero();
        }
        let g = p.gcd(&self.den);
        if g.is_one() {
            return QRat::from_reduced(&self.num * p, self.den.clone());
        }
        QRat::from_reduced(&self.num * &p.div_exact(&g), self.den.div_exact(&g))
    }
}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> QRat {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g0 = self.den.gcd(&rhs.den);
        if g0.is_one() {
            // Denominators coprime: the sum is already in lowest terms.
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return QRat::from_reduced(num, &self.den * &rhs.den);
        }
        let left = self.den.div_exact(&g0);
        let right = rhs.den.div_exact(&g0);
        let num = &(&self.num * &right) + &(&rhs.num * &left);
        // Any common factor of num and the lcm divides g0.
        let g1 = num.gcd(&g0);
        if g1.is_one() {
            QRat::from_reduced(num, &self.den * &right)
        } else {
            QRat::from_reduced(num.div_exact(&g1), &self.den.div_exact(&g1) * &right)
        }
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.div_exact(&g1) * &rhs.num.div_exact(&g2);
        let den = &self.den.div_exact(&g2) * &rhs.den.div_exact(&g1);
        // Crosswise cancellation leaves the product fully reduced; the
        // denominator is a product of monic quotients, hence monic.
        QRat::from_reduced(num, den)
    }
}

impl Div for &QRat {
    type Output = QRat;
    #[allow(clippy::suspicious_arithmetic_impl)] // division is mul by inverse
    fn div(self, rhs: &QRat) -> QRat {
        self * &rhs.inv()
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QRat {
            type Output = QRat;
            fn $method(self, rhs: QRat) -> QRat {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QRat> for QRat {
            type Output = QRat;
            fn $method(self, rhs: &QRat) -> QRat {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::qrat_plain(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn poly(v: &[i64]) -> QPoly {
        QPoly::from_coeffs(v.iter().map(|&n| rat_int(n)).collect())
    }

    #[test]
    fn common_factor_cancels() {
        // (q^2 - 1)/(q - 1) = q + 1
        let r = QRat::new(poly(&[-1, 0, 1]), poly(&[-1, 1]));
        assert_eq!(r, QRat::from(poly(&[1, 1])));
        assert!(r.is_polynomial());
    }

    #[test]
    fn content_reduces_and_denominator_is_monic() {
        // 2q/2 = q
        let r = QRat::new(poly(&[0, 2]), poly(&[2]));
        assert_eq!(r, QRat::from(poly(&[0, 1])));
        // 1/(2q - 2) -> (1/2)/(q - 1)
        let r = QRat::new(poly(&[1]), poly(&[-2, 2]));
        assert!(r.den().leading().unwrap().is_one());
        assert_eq!(r.den(), &poly(&[-1, 1]));
    }

    #[test]
    fn sixth_over_second_cyclotomic_quotient() {
        // (q^6 - 1)/(q^2 - 1) = q^4 + q^2 + 1, the long-division result
        let r = QRat::new(poly(&[-1, 0, 0, 0, 0, 0, 1]), poly(&[-1, 0, 1]));
        assert_eq!(r, QRat::from(poly(&[1, 0, 1, 0, 1])));
    }

    #[test]
    fn scaling_invariance_of_normalization() {
        let a = poly(&[1, 2]);
        let b = poly(&[-3, 0, 1]);
        let c = poly(&[5, 7, 1]);
        assert_eq!(QRat::new(&a * &c, &b * &c), QRat::new(a, b));
    }

    #[test]
    #[should_panic(expected = "division by zero polynomial")]
    fn zero_denominator_panics() {
        let _ = QRat::new(poly(&[1]), QPoly::zero());
    }

    #[test]
    fn field_operations() {
        let f = QRat::new(poly(&[1]), poly(&[-1, 1])); // 1/(q-1)
        let g = QRat::new(poly(&[0, 1]), poly(&[1, 1])); // q/(q+1)
        assert!((&f * &f.inv()).is_one());
        let sum = &f + &g;
        // 1/(q-1) + q/(q+1) = (q^2 + 1)/((q-1)(q+1))
        assert_eq!(sum, QRat::new(poly(&[1, 0, 1]), poly(&[-1, 0, 1])));
        assert_eq!(&sum - &g, f);
        let prod = &f * &g;
        assert_eq!(prod, QRat::new(poly(&[0, 1]), poly(&[-1, 0, 1])));
        assert_eq!(&prod / &g, f);
    }

    #[test]
    fn zero_results_collapse_to_canonical_zero() {
        let f = QRat::new(poly(&[1, 2]), poly(&[-1, 1]));
        assert_eq!(f.scale(&rat_int(0)), QRat::zero());
        assert_eq!(&f - &f, QRat::zero());
        assert!((&f - &f).is_polynomial());
    }

    #[test]
    fn mul_poly_cancels_denominator() {
        let f = QRat::new(poly(&[1]), poly(&[-1, 1]));
        // (q - 1) * 1/(q - 1) = 1
        assert!(f.mul_poly(&poly(&[-1, 1])).is_one());
        assert_eq!(f.mul_poly(&QPoly::zero()), QRat::zero());
    }

    #[test]
    fn subst_power_is_a_homomorphism_witness() {
        let f = QRat::new(poly(&[1, 1, 1]), poly(&[1, 1]));
        let g = QRat::new(poly(&[0, 1]), poly(&[-1, 1]));
        assert_eq!((&f * &g).subst_power(3), &f.subst_power(3) * &g.subst_power(3));
        assert_eq!(f.subst_power(1), f);
    }

    #[test]
    fn eval_detects_poles() {
        let f = QRat::new(poly(&[1]), poly(&[-1, 1]));
        assert_eq!(f.eval(&rat_int(1)), None);
        assert_eq!(f.eval(&rat_int(3)), Some(crate::rational::rat(1, 2)));
    }
}
