//! The L-extension of Q(q): values a + b*L with a, b rational functions and
//! L the transcendental element (q - 1)/log q.
//!
//! q-Bernoulli numbers live here: the zeroth one is L itself and every later
//! one is a Q(q)-linear combination of 1 and L. All the identities the crate
//! verifies are Q(q)-linear in these values, so addition and scaling by
//! rational functions are the only operations defined; a general product of
//! two L-extension values is never needed and deliberately does not exist
//! (it would leave the module).

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::poly::QPoly;
use crate::qrat::QRat;
use crate::rational::BigRat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LExt {
    rat: QRat,
    log: QRat,
}

impl LExt {
    pub fn new(rat: QRat, log: QRat) -> LExt {
        LExt { rat, log }
    }

    pub fn zero() -> LExt {
        LExt {
            rat: QRat::zero(),
            log: QRat::zero(),
        }
    }

    pub fn one() -> LExt {
        LExt {
            rat: QRat::one(),
            log: QRat::zero(),
        }
    }

    /// L itself, i.e. (q - 1)/log q.
    pub fn l() -> LExt {
        LExt {
            rat: QRat::zero(),
            log: QRat::one(),
        }
    }

    /// Coefficient of 1.
    pub fn rat_part(&self) -> &QRat {
        &self.rat
    }

    /// Coefficient of L.
    pub fn log_part(&self) -> &QRat {
        &self.log
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.log.is_zero()
    }

    pub fn scale_qrat(&self, c: &QRat) -> LExt {
        LExt {
            rat: &self.rat * c,
            log: &self.log * c,
        }
    }

    pub fn scale_poly(&self, p: &QPoly) -> LExt {
        LExt {
            rat: self.rat.mul_poly(p),
            log: self.log.mul_poly(p),
        }
    }

    pub fn scale(&self, c: &BigRat) -> LExt {
        LExt {
            rat: self.rat.scale(c),
            log: self.log.scale(c),
        }
    }
}

impl From<QRat> for LExt {
    fn from(rat: QRat) -> LExt {
        LExt {
            rat,
            log: QRat::zero(),
        }
    }
}

impl From<QPoly> for LExt {
    fn from(p: QPoly) -> LExt {
        LExt::from(QRat::from(p))
    }
}

impl Add for &LExt {
    type Output = LExt;
    fn add(self, rhs: &LExt) -> LExt {
        LExt {
            rat: &self.rat + &rhs.rat,
            log: &self.log + &rhs.log,
        }
    }
}

impl Sub for &LExt {
    type Output = LExt;
    fn sub(self, rhs: &LExt) -> LExt {
        LExt {
            rat: &self.rat - &rhs.rat,
            log: &self.log - &rhs.log,
        }
    }
}

impl Neg for &LExt {
    type Output = LExt;
    fn neg(self) -> LExt {
        LExt {
            rat: -&self.rat,
            log: -&self.log,
        }
    }
}

impl Add for LExt {
    type Output = LExt;
    fn add(self, rhs: LExt) -> LExt {
        &self + &rhs
    }
}

impl Sub for LExt {
    type Output = LExt;
    fn sub(self, rhs: LExt) -> LExt {
        &self - &rhs
    }
}

impl fmt::Display for LExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::lext_plain(self))
    }
}

/// Accumulates sums of the form `sum_i p_i * x_i` where the `p_i` are
/// polynomial weights and every `x_i` has canonical denominators dividing a
/// fixed common denominator. Numerators are accumulated raw and a single
/// normalization runs at the end, which keeps the expensive polynomial gcds
/// out of the inner loops of the q-Bernoulli assemblies.
pub(crate) struct LExtSum {
    den: QPoly,
    rat_num: QPoly,
    log_num: QPoly,
}

impl LExtSum {
    pub fn new(den: QPoly) -> LExtSum {
        assert!(!den.is_zero(), "division by zero polynomial");
        LExtSum {
            den,
            rat_num: QPoly::zero(),
            log_num: QPoly::zero(),
        }
    }

    /// Add `weight * x`. The canonical denominators of both parts of `x`
    /// must divide the common denominator.
    pub fn add_scaled(&mut self, weight: &QPoly, x: &LExt) {
        if weight.is_zero() {
            return;
        }
        if !x.rat.is_zero() {
            let cof = self.den.div_exact(x.rat.den());
            self.rat_num = &self.rat_num + &(&(weight * x.rat.num()) * &cof);
        }
        if !x.log.is_zero() {
            let cof = self.den.div_exact(x.log.den());
            self.log_num = &self.log_num + &(&(weight * x.log.num()) * &cof);
        }
    }

    pub fn finish(self) -> LExt {
        LExt {
            rat: QRat::new(self.rat_num, self.den.clone()),
            log: QRat::new(self.log_num, self.den),
        }
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
    fn linear_structure() {
        let x = LExt::new(
            QRat::new(poly(&[1]), poly(&[-1, 1])),
            QRat::new(poly(&[-1]), poly(&[-1, 1])),
        );
        let y = &x + &x;
        assert_eq!(y, x.scale(&rat_int(2)));
        assert!((&y - &y).is_zero());
        assert_eq!(-&x, x.scale(&rat_int(-1)));
    }

    #[test]
    fn scaling_by_the_denominator_clears_it() {
        let x = LExt::new(QRat::new(poly(&[1]), poly(&[-1, 1])), QRat::zero());
        let cleared = x.scale_poly(&poly(&[-1, 1]));
        assert_eq!(cleared, LExt::one());
    }

    #[test]
    fn accumulator_matches_direct_operations() {
        let b1 = LExt::new(
            QRat::new(poly(&[1]), poly(&[-1, 1])),
            QRat::new(poly(&[-1]), poly(&[-1, 1])),
        );
        let den = &poly(&[-1, 1]) * &poly(&[-1, 0, 1]);
        let mut acc = LExtSum::new(den);
        acc.add_scaled(&poly(&[0, 2]), &b1); // 2q * b1
        acc.add_scaled(&QPoly::one(), &LExt::l());
        let direct = &b1.scale_poly(&poly(&[0, 2])) + &LExt::l();
        assert_eq!(acc.finish(), direct);
    }
}
