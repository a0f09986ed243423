//! q-integers and sums of their powers.
//!
//! The brute-force expansion [`weighted_power_sum`] is the oracle of the
//! whole crate: every closed form, recurrence, and q-Bernoulli identity is
//! ultimately checked against it. The two-parameter family
//!
//! ```text
//! T_n^(m)(k) = sum_{l=0}^{k-1} q^(m*l) [l]_q^n
//! ```
//!
//! exists because the telescoping identities mix different weights m while
//! keeping the q-integer base fixed: expanding ([l]_q + q^l)^n - [l]_q^n
//! binomially produces terms q^((n-i)l) [l]_q^i, i.e. the base change applies
//! to the weight only. (Substituting q -> q^(n-i) inside [l]_q as well breaks
//! the identity numerically; see the tests.) The ordinary q-power sum
//! S_n(k) is the m = 1 member.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::QPoly;
use crate::rational::{binomial, rat_pow, BigRat};

/// The q-integer [k]_q = 1 + q + ... + q^(k-1), with [0]_q = 0.
pub fn q_integer(k: u32) -> QPoly {
    QPoly::from_coeffs(vec![BigRat::one(); k as usize])
}

/// Parameters of the weighted power sum T_n^(m)(k): power n >= 0, weight
/// m >= 1, upper index k >= 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightedSumSpec {
    power: u32,
    weight: u32,
    upper: u32,
}

impl WeightedSumSpec {
    pub fn new(power: u32, weight: u32, upper: u32) -> WeightedSumSpec {
        assert!(weight >= 1, "weight must be positive");
        assert!(upper >= 1, "upper index must be positive");
        WeightedSumSpec {
            power,
            weight,
            upper,
        }
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn upper(&self) -> u32 {
        self.upper
    }
}

/// Direct expansion of T_n^(m)(k) = sum_{l<k} q^(m*l) [l]_q^n, with the
/// 0^0 = 1 convention so that the n = 0 sum is the geometric one.
///
/// Every coefficient of the result is a nonnegative integer. This is the
/// brute-force oracle all closed forms are compared against.
pub fn weighted_power_sum(spec: &WeightedSumSpec) -> QPoly {
    let m = spec.weight as usize;
    let mut acc = QPoly::zero();
    for l in 0..spec.upper {
        let term = q_integer(l).pow(spec.power);
        if term.is_zero() {
            continue;
        }
        acc = &acc + &(&QPoly::monomial(BigRat::one(), m * l as usize) * &term);
    }
    acc
}

/// The q-power sum S_n(k) = sum_{l<k} q^l [l]_q^n by direct expansion.
pub fn q_power_sum(n: u32, k: u32) -> QPoly {
    weighted_power_sum(&WeightedSumSpec::new(n, 1, k))
}

/// Closed form of sum_{j<k} q^j [j]_q via telescoping of [j+1]_q^2 - [j]_q^2:
/// ([k]_q^2 - [2k]_q/[2]_q) / 2.
///
/// The inner quotient [2k]_q/[2]_q equals [k]_(q^2) exactly. Panics if the
/// assembled polynomial fails to have integer coefficients, which would mean
/// the identity itself is broken.
pub fn linear_sum_closed(k: u32) -> QPoly {
    assert!(k >= 1, "upper index must be positive");
    let sq = q_integer(k).pow(2);
    let ratio = q_integer(k).subst_power(2);
    let half = crate::rational::rat(1, 2);
    let out = (&sq - &ratio).scale(&half);
    assert!(
        out.has_integer_coeffs(),
        "identity violated: nontrivial denominator"
    );
    out
}

/// Closed form of the shifted square sum sum_{j<k} q^(j+1) [j]_q^2 via
/// telescoping of [j+1]_q^3 - [j]_q^3:
/// [k]_q^3/3 - ([k]_q^2 - [2k]_q/[2]_q)/2 - [3k]_q/(3 [3]_q).
///
/// Note the weight q^(j+1): this sum is q * S_2(k), and the factor q is kept
/// explicit rather than silently divided out.
pub fn weighted_square_sum_closed(k: u32) -> QPoly {
    assert!(k >= 1, "upper index must be positive");
    let third = crate::rational::rat(1, 3);
    let half = crate::rational::rat(1, 2);
    let cube = q_integer(k).pow(3).scale(&third);
    let middle = (&q_integer(k).pow(2) - &q_integer(k).subst_power(2)).scale(&half);
    let last = q_integer(k).subst_power(3).scale(&third);
    let out = &(&cube - &middle) - &last;
    assert!(
        out.has_integer_coeffs(),
        "identity violated: nontrivial denominator"
    );
    out
}

/// The binomial telescoping sum
/// sum_{i=0}^{n-1} C(n, i) T_i^(n-i)(k), which collapses to [k]_q^n.
pub fn binomial_telescoping_sum(n: u32, k: u32) -> QPoly {
    assert!(n >= 1, "power must be positive");
    assert!(k >= 1, "upper index must be positive");
    let mut acc = QPoly::zero();
    for i in 0..n {
        let t = weighted_power_sum(&WeightedSumSpec::new(i, n - i, k));
        acc = &acc + &t.scale(&binomial(n, i));
    }
    acc
}

/// S_n(k) via the telescoping recurrence
/// (n+1) S_n(k) = [k]_q^(n+1) - sum_{i=0}^{n-1} C(n+1, i) T_i^(n+1-i)(k).
///
/// Panics if the division by n + 1 leaves non-integer coefficients, which
/// would mean the identity is broken.
pub fn power_sum_recurrence(n: u32, k: u32) -> QPoly {
    assert!(k >= 1, "upper index must be positive");
    let mut acc = q_integer(k).pow(n + 1);
    for i in 0..n {
        let t = weighted_power_sum(&WeightedSumSpec::new(i, n + 1 - i, k));
        acc = &acc - &t.scale(&binomial(n + 1, i));
    }
    let out = acc.scale(&(BigRat::one() / crate::rational::rat_int(n as i64 + 1)));
    assert!(
        out.has_integer_coeffs(),
        "identity violated: inexact division by n + 1"
    );
    out
}

/// The convergent series sum_{l>=0} q^l [l]_q^n for |q| < 1, evaluated in
/// closed form by binomial expansion of [l]_q^n into geometric series:
///
/// ```text
/// (q - 1)^(-n) * sum_{i=0}^{n} C(n, i) (-1)^(n-i) / (1 - q^(i+1)).
/// ```
///
/// Returns [`Error::DivergentSeries`] outside |q| < 1.
pub fn power_sum_infinite(n: u32, q: &BigRat) -> Result<BigRat> {
    if q.abs() >= BigRat::one() {
        return Err(Error::DivergentSeries);
    }
    let mut sum = BigRat::zero();
    for i in 0..=n {
        let sign = if (n - i).is_multiple_of(2) {
            BigRat::one()
        } else {
            -BigRat::one()
        };
        let geom = BigRat::one() / (BigRat::one() - rat_pow(q, i + 1));
        sum += binomial(n, i) * sign * geom;
    }
    let scale = rat_pow(&(q - BigRat::one()), n);
    Ok(sum / scale)
}

/// Partial sum sum_{l<terms} q^l [l]_q^n, exactly. The partial-sum oracle
/// for [`power_sum_infinite`].
pub fn power_sum_partial(n: u32, q: &BigRat, terms: u32) -> BigRat {
    let mut acc = BigRat::zero();
    let mut q_pow = BigRat::one(); // q^l
    let mut bracket = BigRat::zero(); // [l]_q
    for _ in 0..terms {
        if n == 0 || !bracket.is_zero() {
            acc += &q_pow * rat_pow(&bracket, n);
        }
        bracket += &q_pow;
        q_pow *= q;
    }
    acc
}
