//! Cross-check: dimensions from the dense bar complex against the minimal
//! resolution. The bar cochains in degree n have dimension 4^(n+1).

use std::time::Instant;

use hhq::barcomplex::{cochain_dimension, oracle_hh_dimensions, MAX_ORACLE_CAP};
use hhq::field::{Field, PrimeField, Rationals};
use hhq::lambda::Lambda;
use hhq::resolution::hh_dimensions;

fn compare<F: Field>(lam: Lambda<F>, n: usize) {
    let t = Instant::now();
    let oracle = oracle_hh_dimensions(&lam, n, MAX_ORACLE_CAP).unwrap();
    let minimal = hh_dimensions(&lam, n);
    println!(
        "{:<20} bar {:?} minimal {:?} {} ({:.2?})",
        lam.case().to_string(),
        oracle,
        minimal,
        if oracle == minimal { "agree" } else { "DIFFER" },
        t.elapsed()
    );
}

fn main() {
    println!("dim C^4 = {}", cochain_dimension(4));
    let p = |p| PrimeField::new(p).unwrap();
    compare(Lambda::new(Rationals, Rationals.from_i64(2)), 3);
    compare(Lambda::new(p(7), 2), 4);
    compare(Lambda::new(p(5), 2), 4);
    compare(Lambda::new(p(2), 1), 4);
    compare(Lambda::new(p(7), 6), 4);
    compare(Lambda::new(p(7), 1), 4);
    compare(Lambda::new(p(7), 0), 4);
}
