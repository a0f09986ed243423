//! Recovering the textbook power-sum formulas from the q-side: at q = 1 the
//! q-Bernoulli closed form becomes the classical Faulhaber formula.

use qfaulhaber::{classical_faulhaber, power_sum_bernoulli};

fn main() {
    println!("the closed form S_n(k) at q = 1 gives 1^n + 2^n + ... + (k-1)^n:");

    // sum of first m integers: (m^2 + m)/2
    println!("\n  m(m+1)/2:");
    for k in [4, 6, 11] {
        let m = k - 1;
        println!(
            "    1 + ... + {m:>2} = {:>4}   (formula: {})",
            classical_faulhaber(1, k),
            (m * m + m) / 2
        );
    }

    // sum of squares: (2m^3 + 3m^2 + m)/6
    println!("\n  (2m^3 + 3m^2 + m)/6:");
    for k in [5, 10, 21] {
        let m = k - 1;
        println!(
            "    1^2 + ... + {m:>2}^2 = {:>6}   (formula: {})",
            classical_faulhaber(2, k),
            (2 * m * m * m + 3 * m * m + m) / 6
        );
    }

    // sum of cubes: (m^4 + 2m^3 + m^2)/4
    println!("\n  (m^4 + 2m^3 + m^2)/4:");
    for k in [5, 8] {
        let m = k - 1;
        println!(
            "    1^3 + ... + {m:>2}^3 = {:>6}   (formula: {})",
            classical_faulhaber(3, k),
            (m * m * m * m + 2 * m * m * m + m * m) / 4
        );
    }

    // and the q-polynomial the classical number comes from
    println!("\nthe underlying q-polynomial for n = 2, k = 5:");
    let p = power_sum_bernoulli(2, 5);
    println!("  S_2(5) = {p}");
    println!("  at q = 1: {}", p.eval_at_one());
}
