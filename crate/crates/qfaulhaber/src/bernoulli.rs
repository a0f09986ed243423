//! q-Bernoulli numbers and polynomials over the L-extension of Q(q).
//!
//! The q-Bernoulli numbers beta_n are pinned down by
//!
//! ```text
//! beta_0 = L = (q - 1)/log q,
//! (q*beta + 1)^k - beta_k = [k = 1]     (umbral: beta^j reads beta_j),
//! ```
//!
//! so beta_k = ([k = 1] - sum_{j<k} C(k, j) q^j beta_j) / (q^k - 1) for
//! k >= 1. An independent explicit formula evaluates the same numbers from
//! the other direction,
//!
//! ```text
//! beta_n = (1 - q)^(-n) * ( L + sum_{k=1}^{n} C(n, k) (-1)^k k (q-1)/(q^k - 1) ),
//! ```
//!
//! where the k = 0 summand, formally the indeterminate 0/[0]_q, is the
//! continuous limit L of k (q-1)/(q^k - 1) as k -> 0 -- the unique value
//! consistent with beta_0 = L. The two routes agreeing exactly is one of the
//! crate's standing verification suites.
//!
//! Individual beta_n components have poles at q = 1 of order up to n, but
//! the rational and transcendental parts conspire so the q -> 1 limit always
//! exists and equals the classical Bernoulli number B_n.

use std::sync::{Mutex, OnceLock};

use num_traits::One;

use crate::error::Result;
use crate::lext::{LExt, LExtSum};
use crate::limits::{lext_limit_at_one, DEFAULT_ORDER_CAP};
use crate::poly::QPoly;
use crate::qrat::QRat;
use crate::rational::{binomial, rat_int, BigRat};
use crate::sums::q_integer;

/// q^k - 1.
fn q_pow_minus_one(k: u32) -> QPoly {
    &QPoly::monomial(BigRat::one(), k as usize) - &QPoly::one()
}

/// prod_{j=1..=n} (q^j - 1): a common denominator for beta_0..beta_n.
pub(crate) fn beta_common_denominator(n: u32) -> QPoly {
    let mut den = QPoly::one();
    for j in 1..=n {
        den = &den * &q_pow_minus_one(j);
    }
    den
}

/// Write-once memo table of q-Bernoulli numbers.
///
/// Entries are computed by the umbral recurrence in index order and never
/// change afterwards; concurrent readers each observe the same value for a
/// given index.
pub struct BetaCache {
    memo: Mutex<Vec<LExt>>,
}

impl BetaCache {
    pub fn new() -> BetaCache {
        BetaCache {
            memo: Mutex::new(vec![LExt::l()]),
        }
    }

    /// beta_n, computing and caching everything up to n on first use.
    pub fn beta(&self, n: u32) -> LExt {
        let mut memo = self.memo.lock().unwrap();
        while memo.len() <= n as usize {
            let next = recurrence_step(&memo);
            memo.push(next);
        }
        memo[n as usize].clone()
    }
}

impl Default for BetaCache {
    fn default() -> Self {
        Self::new()
    }
}

/// beta_k from beta_0..beta_{k-1}:
/// beta_k = ([k = 1] - sum_{j<k} C(k, j) q^j beta_j) / (q^k - 1).
fn recurrence_step(prev: &[LExt]) -> LExt {
    let k = prev.len() as u32;
    let mut acc = LExtSum::new(beta_common_denominator(k - 1));
    for (j, beta_j) in prev.iter().enumerate() {
        let weight = QPoly::monomial(binomial(k, j as u32), j);
        acc.add_scaled(&weight, beta_j);
    }
    let mut numerator = -&acc.finish();
    if k == 1 {
        numerator = numerator + LExt::one();
    }
    numerator.scale_qrat(&QRat::new(QPoly::one(), q_pow_minus_one(k)))
}

fn cache() -> &'static BetaCache {
    static BETAS: OnceLock<BetaCache> = OnceLock::new();
    BETAS.get_or_init(BetaCache::new)
}

/// The q-Bernoulli number beta_n by the umbral recurrence (memoized).
pub fn q_bernoulli(n: u32) -> LExt {
    cache().beta(n)
}

/// beta_n by the explicit alternating-sum formula. Deliberately shares no
/// code with the recurrence; the two routes check each other.
pub fn q_bernoulli_explicit(n: u32) -> LExt {
    let mut sum = QRat::zero();
    for k in 1..=n {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let num = QPoly::from_coeffs(vec![
            rat_int(-(k as i64) * sign),
            rat_int(k as i64 * sign),
        ])
        .scale(&binomial(n, k));
        sum = &sum + &QRat::new(num, q_pow_minus_one(k));
    }
    let one_minus_q = QPoly::from_coeffs(vec![BigRat::one(), -BigRat::one()]);
    let scale = QRat::new(QPoly::one(), one_minus_q.pow(n));
    LExt::new(&sum * &scale, scale)
}

/// The q-Bernoulli polynomial at a nonnegative integer argument:
/// beta_n(x) = sum_{j=0}^{n} C(n, j) q^(j*x) beta_j [x]_q^(n-j).
pub fn q_bernoulli_poly(n: u32, x: u32) -> LExt {
    let betas = cache();
    let bracket = q_integer(x);
    let mut acc = LExtSum::new(beta_common_denominator(n));
    for j in 0..=n {
        let weight = QPoly::monomial(binomial(n, j), (j * x) as usize);
        let weight = &weight * &bracket.pow(n - j);
        acc.add_scaled(&weight, &betas.beta(j));
    }
    acc.finish()
}

/// beta_n(x) with the weight q^(k*x) expanded through the binomial identity
/// q^x = 1 + (q - 1) [x]_q:
/// sum_k C(n, k) [x]_q^(n-k) beta_k * sum_l C(k, l) (q-1)^l [x]_q^l.
///
/// Must agree with [`q_bernoulli_poly`]; the pair is another standing
/// verification suite.
pub fn q_bernoulli_poly_expanded(n: u32, x: u32) -> LExt {
    let betas = cache();
    let bracket = q_integer(x);
    let q_minus_one = QPoly::from_coeffs(vec![-BigRat::one(), BigRat::one()]);
    let mut acc = LExtSum::new(beta_common_denominator(n));
    for k in 0..=n {
        let mut inner = QPoly::zero();
        for l in 0..=k {
            let t = (&q_minus_one.pow(l) * &bracket.pow(l)).scale(&binomial(k, l));
            inner = &inner + &t;
        }
        let weight = &bracket.pow(n - k).scale(&binomial(n, k)) * &inner;
        acc.add_scaled(&weight, &betas.beta(k));
    }
    acc.finish()
}

/// beta_n(k) - beta_n, which collapses to the polynomial
/// n * sum_{l<k} q^l [l]_q^(n-1).
///
/// The transcendental parts cancel exactly; a nonzero L-part here is an
/// implementation bug and panics.
pub fn q_bernoulli_difference(n: u32, k: u32) -> LExt {
    assert!(n >= 1, "power must be positive");
    assert!(k >= 1, "upper index must be positive");
    let diff = &q_bernoulli_poly(n, k) - &q_bernoulli(n);
    assert!(
        diff.log_part().is_zero(),
        "identity violated: L-cancellation failed"
    );
    diff
}

/// The q -> 1 limit of beta_n: the classical Bernoulli number B_n
/// (B_1 = -1/2 in this convention).
pub fn classical_bernoulli(n: u32) -> Result<BigRat> {
    classical_bernoulli_capped(n, DEFAULT_ORDER_CAP)
}

/// [`classical_bernoulli`] with an explicit series-order cap.
pub fn classical_bernoulli_capped(n: u32, cap: i64) -> Result<BigRat> {
    lext_limit_at_one(&q_bernoulli(n), n as i64 + 2, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::laurent_at_one;
    use crate::rational::rat;
    use crate::sums::q_power_sum;

    fn poly(v: &[i64]) -> QPoly {
        QPoly::from_coeffs(v.iter().map(|&n| rat_int(n)).collect())
    }

    #[test]
    fn first_betas_are_the_known_closed_forms() {
        assert_eq!(q_bernoulli(0), LExt::l());
        // beta_1 = (1 - L)/(q - 1)
        let inv = QRat::new(poly(&[1]), poly(&[-1, 1]));
        assert_eq!(q_bernoulli(1), LExt::new(inv.clone(), -&inv));
        // beta_2 = -2q/((q-1)^2 (q+1)) + L/(q-1)^2
        let den2 = poly(&[-1, 1]).pow(2);
        let expected = LExt::new(
            QRat::new(poly(&[0, -2]), &den2 * &poly(&[1, 1])),
            QRat::new(QPoly::one(), den2),
        );
        assert_eq!(q_bernoulli(2), expected);
    }

    #[test]
    fn explicit_route_matches_recurrence() {
        assert_eq!(q_bernoulli_explicit(0), LExt::l());
        assert_eq!(q_bernoulli_explicit(1), q_bernoulli(1));
        for n in 0..=8 {
            assert_eq!(q_bernoulli_explicit(n), q_bernoulli(n), "n={n}");
        }
    }

    #[test]
    fn cache_is_consistent_across_threads() {
        let cache = BetaCache::new();
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..4)
                .map(|_| s.spawn(|| cache.beta(6)))
                .collect();
            let values: Vec<LExt> = handles.into_iter().map(|h| h.join().unwrap()).collect();
            for v in &values {
                assert_eq!(v, &q_bernoulli(6));
            }
        });
    }

    #[test]
    fn polynomial_at_zero_is_the_number() {
        for n in 0..=6 {
            assert_eq!(q_bernoulli_poly(n, 0), q_bernoulli(n), "n={n}");
        }
        for x in 0..=5 {
            assert_eq!(q_bernoulli_poly(0, x), LExt::l(), "x={x}");
        }
    }

    #[test]
    fn polynomial_at_one_step() {
        // beta_1(1) = q beta_1 + beta_0, and beta_1(1) - beta_1 = 1
        let b1 = q_bernoulli(1);
        let expected = &b1.scale_poly(&poly(&[0, 1])) + &LExt::l();
        assert_eq!(q_bernoulli_poly(1, 1), expected);
        let diff = &q_bernoulli_poly(1, 1) - &b1;
        assert_eq!(diff, LExt::one());
    }

    #[test]
    fn polynomial_at_one_is_a_fixed_point_for_n_at_least_two() {
        for n in 2..=8 {
            assert_eq!(q_bernoulli_poly(n, 1), q_bernoulli(n), "n={n}");
        }
    }

    #[test]
    fn expanded_form_matches() {
        // spot check of the inner expansion: (1 + (q-1)[2]_q)^2 = q^4
        let inner = &QPoly::one() + &(&poly(&[-1, 1]) * &q_integer(2));
        assert_eq!(inner.pow(2), QPoly::monomial(BigRat::one(), 4));
        for n in 0..=5 {
            for x in 0..=4 {
                assert_eq!(
                    q_bernoulli_poly_expanded(n, x),
                    q_bernoulli_poly(n, x),
                    "n={n} x={x}"
                );
            }
        }
    }

    #[test]
    fn difference_collapses_to_weighted_power_sums() {
        assert_eq!(q_bernoulli_difference(1, 1), LExt::one());
        assert!(q_bernoulli_difference(3, 1).is_zero());
        let d = q_bernoulli_difference(2, 3);
        assert_eq!(d, LExt::from(q_power_sum(1, 3).scale(&rat_int(2))));
        for n in 1..=6u32 {
            for k in 1..=6u32 {
                let d = q_bernoulli_difference(n, k);
                let expected = q_power_sum(n - 1, k).scale(&rat_int(n as i64));
                assert_eq!(d, LExt::from(expected), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn classical_limits_of_first_betas() {
        assert_eq!(classical_bernoulli(0).unwrap(), rat_int(1));
        assert_eq!(classical_bernoulli(1).unwrap(), rat(-1, 2));
        assert_eq!(classical_bernoulli(2).unwrap(), rat(1, 6));
        assert_eq!(classical_bernoulli(3).unwrap(), rat_int(0));
        assert_eq!(classical_bernoulli(4).unwrap(), rat(-1, 30));
    }

    #[test]
    fn component_poles_are_bounded_by_the_index() {
        for n in 1..=8i64 {
            let b = q_bernoulli(n as u32);
            for part in [b.rat_part(), b.log_part()] {
                if part.is_zero() {
                    continue;
                }
                let s = laurent_at_one(part, n + 3).unwrap();
                let v = s.valuation().unwrap();
                assert!(v >= -n, "n={n}: pole order {} too deep", -v);
            }
        }
    }
}
