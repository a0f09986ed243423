//! Four independent routes to the q-power sum S_n(k) = sum_{l<k} q^l [l]_q^n,
//! all agreeing exactly as polynomials in q.

use qfaulhaber::{power_sum, SumMethod};

const METHODS: [(SumMethod, &str); 4] = [
    (SumMethod::BruteForce, "brute force"),
    (SumMethod::Recurrence, "recurrence"),
    (SumMethod::BernoulliClosedForm, "q-Bernoulli closed form"),
    (SumMethod::BetaDifference, "beta difference quotient"),
];

fn main() {
    let (n, k) = (2, 3);
    println!("S_{n}({k}) by each method:");
    for (method, name) in METHODS {
        println!("  {name:<24} {}", power_sum(n, k, method));
    }

    println!("\na small table of S_n(k), all methods cross-checked:");
    println!("  {:>3} {:>3}  polynomial", "n", "k");
    for n in 0..=4 {
        for k in 1..=5 {
            let reference = power_sum(n, k, SumMethod::BruteForce);
            for (method, name) in &METHODS[1..] {
                assert_eq!(
                    power_sum(n, k, *method),
                    reference,
                    "method {name} disagrees at (n={n}, k={k})"
                );
            }
            println!("  {n:>3} {k:>3}  {reference}");
        }
    }
    println!("\nall four methods agree on every cell.");
}
