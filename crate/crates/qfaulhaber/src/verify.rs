//! Identity verification sweeps over (n, k) grids.
//!
//! Each suite recomputes one identity from primitive operations and compares
//! against the brute-force oracle, reporting the first offending cell rather
//! than panicking, so a broken build produces a readable report.

use crate::bernoulli::{q_bernoulli, q_bernoulli_explicit, q_bernoulli_poly, q_bernoulli_poly_expanded};
use crate::faulhaber::{power_sum_bernoulli_lext, TailSign};
use crate::lext::LExt;
use crate::poly::QPoly;
use crate::rational::rat_int;
use crate::sums::{
    binomial_telescoping_sum, linear_sum_closed, power_sum_recurrence, q_integer, q_power_sum,
    weighted_square_sum_closed,
};

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    /// None when the suite passed, otherwise a description of the first
    /// failing cell.
    pub failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub max_n: u32,
    pub max_k: u32,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    /// Deterministic one-line-per-suite report.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "identity verification: 0 <= n <= {}, 1 <= k <= {}\n",
            self.max_n, self.max_k
        );
        for suite in &self.suites {
            match &suite.failure {
                None => out.push_str(&format!("PASS  {}\n", suite.name)),
                Some(f) => out.push_str(&format!("FAIL  {}: {}\n", suite.name, f)),
            }
        }
        out.push_str(if self.all_passed() {
            "all identities verified\n"
        } else {
            "verification FAILED\n"
        });
        out
    }
}

fn check_grid<F>(max_n: u32, min_n: u32, max_k: u32, mut cell: F) -> Option<String>
where
    F: FnMut(u32, u32) -> bool,
{
    for n in min_n..=max_n {
        for k in 1..=max_k {
            if !cell(n, k) {
                return Some(format!("first failure at (n={n}, k={k})"));
            }
        }
    }
    None
}

/// Run every identity suite over 0 <= n <= max_n, 1 <= k <= max_k.
pub fn verify_identities(max_n: u32, max_k: u32) -> VerifyReport {
    assert!(max_k >= 1, "k bound must be positive");
    let mut suites = Vec::new();

    suites.push(SuiteResult {
        name: "binomial telescoping sum collapses to [k]_q^n",
        failure: if max_n == 0 {
            None
        } else {
            check_grid(max_n, 1, max_k, |n, k| {
                binomial_telescoping_sum(n, k) == q_integer(k).pow(n)
            })
        },
    });

    suites.push(SuiteResult {
        name: "telescoping recurrence matches direct expansion",
        failure: check_grid(max_n, 0, max_k, |n, k| {
            power_sum_recurrence(n, k) == q_power_sum(n, k)
        }),
    });

    suites.push(SuiteResult {
        name: "degree-1 and degree-2 closed forms match direct expansion",
        failure: (1..=max_k)
            .find(|&k| {
                linear_sum_closed(k) != q_power_sum(1, k)
                    || weighted_square_sum_closed(k) != &QPoly::q() * &q_power_sum(2, k)
            })
            .map(|k| format!("first failure at k={k}")),
    });

    suites.push(SuiteResult {
        name: "q-Bernoulli recurrence matches explicit formula",
        failure: (0..=max_n)
            .find(|&n| q_bernoulli(n) != q_bernoulli_explicit(n))
            .map(|n| format!("first failure at n={n}")),
    });

    suites.push(SuiteResult {
        name: "q-Bernoulli polynomial difference equals n * S_{n-1}(k)",
        failure: if max_n == 0 {
            None
        } else {
            check_grid(max_n, 1, max_k, |n, k| {
                let diff = &q_bernoulli_poly(n, k) - &q_bernoulli(n);
                let expected = q_power_sum(n - 1, k).scale(&rat_int(n as i64));
                diff.log_part().is_zero() && diff == LExt::from(expected)
            })
        },
    });

    suites.push(SuiteResult {
        name: "q-Bernoulli closed form matches direct expansion",
        failure: check_grid(max_n, 0, max_k, |n, k| {
            let value = power_sum_bernoulli_lext(n, k, TailSign::PowerMinusOne);
            value.log_part().is_zero()
                && value.rat_part().is_polynomial()
                && value.rat_part().num() == &q_power_sum(n, k)
        }),
    });

    suites.push(SuiteResult {
        name: "flipped tail sign breaks the closed form at (n=1, k=1)",
        failure: {
            let wrong = power_sum_bernoulli_lext(1, 1, TailSign::OneMinusPower);
            if wrong.is_zero() {
                Some("flipped-sign value unexpectedly vanished".to_string())
            } else {
                None
            }
        },
    });

    suites.push(SuiteResult {
        name: "expanded double sum matches the q-Bernoulli polynomial",
        failure: (0..=max_n)
            .flat_map(|n| (0..=max_k).map(move |x| (n, x)))
            .find(|&(n, x)| q_bernoulli_poly_expanded(n, x) != q_bernoulli_poly(n, x))
            .map(|(n, x)| format!("first failure at (n={n}, x={x})")),
    });

    suites.push(SuiteResult {
        name: "beta-difference quotient matches the closed form",
        failure: check_grid(max_n, 0, max_k, |n, k| {
            let quotient = (&q_bernoulli_poly(n + 1, k) - &q_bernoulli(n + 1))
                .scale(&(crate::rational::rat(1, n as i64 + 1)));
            quotient == power_sum_bernoulli_lext(n, k, TailSign::PowerMinusOne)
        }),
    });

    VerifyReport {
        max_n,
        max_k,
        suites,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let report = verify_identities(3, 4);
        assert!(report.all_passed(), "{}", report.to_text());
        assert_eq!(report.suites.len(), 9);
        let text = report.to_text();
        assert!(text.starts_with("identity verification: 0 <= n <= 3, 1 <= k <= 4\n"));
        assert!(text.ends_with("all identities verified\n"));
        assert_eq!(text.matches("PASS").count(), 9);
    }

    #[test]
    fn degenerate_bounds_still_pass() {
        let report = verify_identities(0, 1);
        assert!(report.all_passed(), "{}", report.to_text());
    }
}
