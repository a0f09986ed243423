//! The exact-limit machinery: truncated Laurent series in eps = q - 1, the
//! Gregory series for L = (q - 1)/log q, and removable singularities.

use qfaulhaber::rational::rat_int;
use qfaulhaber::{gregory_series, laurent_at_one, LExt, QPoly, QRat};

fn main() {
    // the expansion of L about q = 1: Gregory coefficients
    println!("L = (q - 1)/log q expands to the Gregory series:");
    println!("  {}", gregory_series(7));

    // a genuine pole stays a pole
    let q_minus_1 = QPoly::from_coeffs(vec![rat_int(-1), rat_int(1)]);
    let pole = QRat::new(QPoly::one(), q_minus_1.clone());
    println!("\n1/(q - 1) about q = 1:");
    println!("  {}", laurent_at_one(&pole, 4).unwrap());
    println!("  limit: {:?}", pole.limit_at_one(4));

    // a removable singularity cancels exactly: (1 - L)/(q - 1) -> -1/2
    let value = LExt::new(pole.clone(), -&pole);
    println!("\n(1 - L)/(q - 1): both parts have first-order poles,");
    println!("but the combination is finite at q = 1:");
    println!("  limit = {}", value.limit_at_one(4).unwrap());

    // this is exactly how B_1 = -1/2 falls out of beta_1
    println!("  (this value is beta_1 at q -> 1, the classical B_1)");

    // homomorphism: expansion of a product is the product of expansions
    let f = QRat::from(qfaulhaber::q_integer(2));
    let g = QRat::from(qfaulhaber::q_integer(3));
    let fg = laurent_at_one(&(&f * &g), 4).unwrap();
    let product = &laurent_at_one(&f, 4).unwrap() * &laurent_at_one(&g, 4).unwrap();
    println!("\nexpansion of [2]_q * [3]_q: {fg}");
    println!("product of expansions:     {product}");
    assert_eq!(fg, product);
}
