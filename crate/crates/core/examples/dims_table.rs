//! Dimension table of `HH^n(Λ_q)` for one parameter choice per case.
//!
//!     cargo run --release --example dims_table

use hhq::field::{CyclotomicField, Field, PrimeField, Rationals};
use hhq::lambda::Lambda;
use hhq::resolution::hh_dimensions;

fn row<F: Field>(lam: Lambda<F>, n: usize) {
    let dims = hh_dimensions(&lam, n);
    println!(
        "{:<8} q = {:<3} {:<20} {:?}",
        lam.field().describe(),
        lam.field().render(lam.q()),
        lam.case().to_string(),
        dims
    );
}

fn main() {
    let f7 = PrimeField::new(7).unwrap();
    row(Lambda::new(Rationals, Rationals.from_i64(2)), 12);
    row(Lambda::new(f7, 2), 14);
    row(Lambda::new(PrimeField::new(5).unwrap(), 2), 13);
    row(Lambda::new(PrimeField::new(2).unwrap(), 1), 8);
    row(Lambda::new(Rationals, Rationals.from_i64(-1)), 8);
    row(Lambda::new(Rationals, Rationals.one()), 8);
    row(Lambda::new(Rationals, Rationals.zero()), 8);

    // q of order 5: the first gap is 2r - 3 = 7 degrees long.
    let c5 = CyclotomicField::new(5).unwrap();
    let z = c5.generator();
    row(Lambda::new(c5, z), 12);
}
