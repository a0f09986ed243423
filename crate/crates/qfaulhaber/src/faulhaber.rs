//! Closed forms for the q-power sum S_n(k) in terms of q-Bernoulli numbers,
//! and the classical power-sum formulas as their q -> 1 shadow.
//!
//! The central identity is
//!
//! ```text
//! (n+1) S_n(k) = sum_{l=0}^{n} C(n+1, l) q^(k*l) beta_l [k]_q^(n+1-l)
//!                + (q^((n+1)k) - 1) beta_{n+1},
//! ```
//!
//! whose right side is an L-extension value: the transcendental parts of the
//! beta's cancel identically and the rational part collapses to a polynomial
//! with nonnegative integer coefficients. The tail term only works with the
//! (q^((n+1)k) - 1) orientation; flipping it to (1 - q^((n+1)k)) breaks the
//! identity already at n = 1, k = 1. Both orientations are exposed through
//! [`TailSign`] so the breakage stays pinned by a regression test.
//!
//! Identity-backed operations verify their own postconditions (L-part zero,
//! polynomial result) on every call and panic on violation: the checks are
//! cheap and turn silent algebra bugs into loud failures.

use crate::bernoulli::{beta_common_denominator, q_bernoulli, q_bernoulli_difference};
use crate::lext::{LExt, LExtSum};
use crate::poly::QPoly;
use crate::rational::{binomial, rat_int, BigRat};
use crate::sums::{power_sum_recurrence, q_integer, q_power_sum};

use num_traits::One;

/// Evaluation route for S_n(k). All four agree; the brute-force expansion is
/// the oracle the other three are verified against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumMethod {
    /// Direct expansion of the defining sum.
    BruteForce,
    /// Binomial telescoping recurrence.
    Recurrence,
    /// Closed form in q-Bernoulli numbers.
    BernoulliClosedForm,
    /// Difference quotient of q-Bernoulli polynomials.
    BetaDifference,
}

/// Orientation of the beta_{n+1} tail term in the closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailSign {
    /// (q^((n+1)k) - 1) beta_{n+1}: the orientation that makes the identity
    /// hold.
    PowerMinusOne,
    /// (1 - q^((n+1)k)) beta_{n+1}: breaks the identity; kept selectable as
    /// a regression witness.
    OneMinusPower,
}

/// The assembled right side of the closed form, as a raw L-extension value
/// with no postcondition checks, for either tail orientation.
pub fn power_sum_bernoulli_lext(n: u32, k: u32, sign: TailSign) -> LExt {
    assert!(k >= 1, "upper index must be positive");
    let bracket = q_integer(k);
    let mut acc = LExtSum::new(beta_common_denominator(n + 1));
    for l in 0..=n {
        let weight = QPoly::monomial(binomial(n + 1, l), (k * l) as usize);
        let weight = &weight * &bracket.pow(n + 1 - l);
        acc.add_scaled(&weight, &q_bernoulli(l));
    }
    let tail = &QPoly::monomial(BigRat::one(), ((n + 1) * k) as usize) - &QPoly::one();
    let tail = match sign {
        TailSign::PowerMinusOne => tail,
        TailSign::OneMinusPower => -&tail,
    };
    acc.add_scaled(&tail, &q_bernoulli(n + 1));
    acc.finish()
        .scale(&(BigRat::one() / rat_int(n as i64 + 1)))
}

/// S_n(k) via the q-Bernoulli closed form.
///
/// Panics with "identity violated" if the L-part fails to cancel or the
/// rational part is not a polynomial.
pub fn power_sum_bernoulli(n: u32, k: u32) -> QPoly {
    let value = power_sum_bernoulli_lext(n, k, TailSign::PowerMinusOne);
    assert!(
        value.log_part().is_zero(),
        "identity violated: nonzero L part"
    );
    value
        .rat_part()
        .as_poly()
        .expect("identity violated: nontrivial denominator")
        .clone()
}

/// S_n(k) via the difference quotient
/// (beta_{n+1}(k) - beta_{n+1}) / (n + 1).
pub fn power_sum_beta_difference(n: u32, k: u32) -> QPoly {
    let diff = q_bernoulli_difference(n + 1, k);
    let scaled = diff
        .rat_part()
        .as_poly()
        .expect("identity violated: nontrivial denominator")
        .scale(&(BigRat::one() / rat_int(n as i64 + 1)));
    scaled
}

/// The classical power sum 0^n + 1^n + ... + (k-1)^n, obtained from the
/// q-Bernoulli closed form at q = 1 (the polynomial has no pole, so the
/// limit is plain evaluation).
pub fn classical_faulhaber(n: u32, k: u32) -> BigRat {
    power_sum_bernoulli(n, k).eval_at_one()
}

/// S_n(k) by the chosen route.
pub fn power_sum(n: u32, k: u32, method: SumMethod) -> QPoly {
    match method {
        SumMethod::BruteForce => q_power_sum(n, k),
        SumMethod::Recurrence => power_sum_recurrence(n, k),
        SumMethod::BernoulliClosedForm => power_sum_bernoulli(n, k),
        SumMethod::BetaDifference => power_sum_beta_difference(n, k),
    }
}
