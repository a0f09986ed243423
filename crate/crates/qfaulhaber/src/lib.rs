//! Exact computer algebra for sums of powers of consecutive q-integers.
//!
//! Everything is computed over the rational-function field Q(q), extended by
//! the transcendental element L = (q - 1)/log q where the q-Bernoulli numbers
//! live. There is no floating point anywhere in the library: identities are
//! decided by canonical-form equality, limits at q = 1 by exact truncated
//! Laurent expansion, and convergence gaps by exact rational comparison.
//!
//! The central quantity is the q-power sum
//!
//! ```text
//! S_n(k) = sum_{l=0}^{k-1} q^l [l]_q^n,      [l]_q = 1 + q + ... + q^(l-1),
//! ```
//!
//! which collapses to the classical power sum 0^n + 1^n + ... + (k-1)^n at
//! q = 1. Four independent routes compute it, and all four are verified
//! against each other:
//!
//! - [`q_power_sum`]: brute-force expansion, the oracle;
//! - [`power_sum_recurrence`]: binomial telescoping recurrence;
//! - [`power_sum_bernoulli`]: closed form in q-Bernoulli numbers;
//! - [`power_sum_beta_difference`]: q-Bernoulli polynomial difference
//!   quotient.
//!
//! # Modules
//!
//! - [`poly`], [`qrat`]: dense polynomials in q and canonical rational
//!   functions over exact big rationals ([`rational`]);
//! - [`eps`], [`limits`]: truncated Laurent series in eps = q - 1 and exact
//!   q -> 1 limits (including of L-extension values, via the Gregory series);
//! - [`sums`]: q-integers, weighted power sums, telescoping closed forms,
//!   and convergent infinite sums for |q| < 1;
//! - [`bernoulli`]: q-Bernoulli numbers over the L-extension ([`lext`]), by
//!   recurrence and by explicit formula, with their polynomials;
//! - [`faulhaber`]: the q-Bernoulli closed form for S_n(k) and classical
//!   power-sum recovery;
//! - [`render`]: plain / CSV / LaTeX rendering and parsing;
//! - [`verify`]: the identity sweep behind `qf verify`.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p qfaulhaber --example q_integers        # q-integers and limits
//! cargo run -p qfaulhaber --example power_sums        # four routes to S_n(k)
//! cargo run -p qfaulhaber --example q_bernoulli       # both beta routes
//! cargo run -p qfaulhaber --example series_limits     # Laurent machinery
//! cargo run -p qfaulhaber --example classical_limits  # Faulhaber recovery
//! cargo run -p qfaulhaber --example infinite_sums     # |q| < 1 convergence
//! cargo run -p qfaulhaber --example verify_identities # full identity sweep
//! ```
//!
//! # Quick taste
//!
//! ```
//! use qfaulhaber::{power_sum, q_power_sum, SumMethod};
//!
//! let closed = power_sum(2, 3, SumMethod::BernoulliClosedForm);
//! assert_eq!(closed, q_power_sum(2, 3));
//! assert_eq!(closed.to_string(), "q + q^2 + 2q^3 + q^4");
//! ```

pub mod bernoulli;
pub mod eps;
pub mod error;
pub mod faulhaber;
pub mod lext;
pub mod limits;
pub mod poly;
pub mod qrat;
pub mod rational;
pub mod render;
pub mod sums;
pub mod verify;

pub use bernoulli::{
    classical_bernoulli, classical_bernoulli_capped, q_bernoulli, q_bernoulli_difference,
    q_bernoulli_explicit, q_bernoulli_poly, q_bernoulli_poly_expanded, BetaCache,
};
pub use eps::{gregory_series, EpsSeries};
pub use error::{Error, Result};
pub use faulhaber::{
    classical_faulhaber, power_sum, power_sum_bernoulli, power_sum_bernoulli_lext,
    power_sum_beta_difference, SumMethod, TailSign,
};
pub use lext::LExt;
pub use limits::{laurent_at_one, lext_limit_at_one, qrat_limit_at_one, DEFAULT_ORDER_CAP};
pub use poly::QPoly;
pub use qrat::QRat;
pub use rational::BigRat;
pub use render::OutputFormat;
pub use sums::{
    binomial_telescoping_sum, linear_sum_closed, power_sum_infinite, power_sum_partial,
    power_sum_recurrence, q_integer, q_power_sum, weighted_power_sum,
    weighted_square_sum_closed, WeightedSumSpec,
};
pub use verify::{verify_identities, SuiteResult, VerifyReport};
