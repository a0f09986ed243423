//! q-integers: the polynomials [k]_q = 1 + q + ... + q^(k-1), their base
//! changes, and their behavior as q -> 1.

use qfaulhaber::rational::rat;
use qfaulhaber::{laurent_at_one, q_integer, QRat};

fn main() {
    println!("the first q-integers:");
    for k in 0..=5 {
        println!("  [{k}]_q = {}", q_integer(k));
    }

    // [k]_q at q = 1 recovers the ordinary integer k
    println!("\nevaluated at q = 1 (ordinary integers):");
    for k in 0..=5 {
        println!("  [{k}]_1 = {}", q_integer(k).eval_at_one());
    }

    // and at other exact rational points
    let q = rat(9, 10);
    println!("\nevaluated at q = 9/10:");
    for k in [1, 2, 5] {
        println!("  [{k}]_(9/10) = {}", q_integer(k).eval(&q));
    }

    // base change: [k] under q -> q^m, times [m], counts powers below m*k
    println!("\nbase change q -> q^2:");
    let lhs = q_integer(3).subst_power(2);
    println!("  [3] under q -> q^2     = {lhs}");
    println!("  ... times [2]_q        = {}", &lhs * &q_integer(2));
    println!("  [6]_q                  = {}", q_integer(6));

    // the q -> 1 limit, done honestly through Laurent expansion in eps = q - 1
    println!("\nLaurent expansion of [3]_q about q = 1:");
    let series = laurent_at_one(&QRat::from(q_integer(3)), 4).unwrap();
    println!("  [3]_q = {series}");
    println!(
        "  constant term (the limit): {}",
        QRat::from(q_integer(3)).limit_at_one(4).unwrap()
    );
}
