//! Convergent infinite power sums for |q| < 1: exact closed forms against
//! exact partial sums, with an exactly computed gap.

use num_traits::Signed;

use qfaulhaber::rational::{decimal_string, rat, rat_pow};
use qfaulhaber::{power_sum_infinite, power_sum_partial, BigRat};

fn main() {
    let q = rat(9, 10);
    let closed = power_sum_infinite(2, &q).unwrap();

    println!("sum_(l>=0) q^l [l]_q^2 at q = 9/10:");
    println!("  closed form  = {closed}");
    println!("  ~= {}", decimal_string(&closed, 30));

    // the q-shifted form sum_j q^(j+1) [j]^2 = q * S equals the cubic
    // telescoping closed form pushed to k -> infinity:
    // [k] -> 1/(1-q) and [mk]/[m] -> 1/(1-q^m)
    let geom = |m: u32| BigRat::from_integer(1.into()) / (BigRat::from_integer(1.into()) - rat_pow(&q, m));
    let rhs = rat(1, 3) * rat_pow(&geom(1), 3)
        - rat(1, 2) * (rat_pow(&geom(1), 2) - geom(2))
        - rat(1, 3) * geom(3);
    let weighted = &q * &closed;
    println!("\n  q-shifted sum        = {weighted}");
    println!("  telescoping limit    = {rhs}");
    assert_eq!(weighted, rhs, "closed forms must agree exactly");
    println!("  exact match.");

    println!("\npartial sums close the gap geometrically:");
    println!("  {:>6}  {:<34}  gap", "terms", "partial sum");
    for terms in [10, 50, 100, 250, 500] {
        let partial = power_sum_partial(2, &q, terms);
        let gap = (&closed - &partial).abs();
        println!(
            "  {terms:>6}  {:<34}  {}",
            decimal_string(&partial, 30),
            decimal_string(&gap, 30)
        );
    }

    let gap = (&closed - &power_sum_partial(2, &q, 500)).abs();
    assert!(gap < rat(1, 1_000_000_000));
    println!("\ngap after 500 terms is below 1e-9 (exact rational comparison).");
}
