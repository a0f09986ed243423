//! q-Bernoulli numbers beta_n: elements of Q(q) + Q(q)*L with
//! L = (q - 1)/log q, computed by two independent routes that must agree.

use qfaulhaber::{
    classical_bernoulli, q_bernoulli, q_bernoulli_difference, q_bernoulli_explicit,
    q_bernoulli_poly, q_power_sum,
};

fn main() {
    println!("q-Bernoulli numbers as (rat, log) pairs -- log is the L-coefficient:");
    for n in 0..=4 {
        println!("  beta_{n} = {}", q_bernoulli(n));
    }

    println!("\numbral recurrence vs explicit alternating sum, exact equality:");
    for n in 0..=10 {
        let same = q_bernoulli(n) == q_bernoulli_explicit(n);
        println!("  n = {n:>2}: routes agree = {same}");
        assert!(same);
    }

    println!("\nthe polynomial difference collapses to a power sum:");
    for (n, k) in [(1, 1), (2, 3), (3, 4)] {
        let diff = q_bernoulli_difference(n, k);
        println!("  beta_{n}({k}) - beta_{n} = {}", diff.rat_part());
        let expected = q_power_sum(n - 1, k).scale(&qfaulhaber::rational::rat_int(n as i64));
        assert_eq!(diff.rat_part().num(), &expected);
    }

    println!("\nfixed point: beta_n(1) = beta_n for n >= 2:");
    for n in 2..=6 {
        assert_eq!(q_bernoulli_poly(n, 1), q_bernoulli(n));
        println!("  n = {n}: holds");
    }

    println!("\nq -> 1 limits are the classical Bernoulli numbers:");
    for n in 0..=8 {
        println!("  B_{n} = {}", classical_bernoulli(n).unwrap());
    }
}
