//! Cup product laws in cohomology, sampled with a fixed seed for each of the
//! seven regimes.

mod common;

use hhq::field::{Field, PrimeField, Rationals};
use hhq::lambda::Lambda;

fn check<F: Field>(lam: Lambda<F>, seed: u64) {
    if let Err(e) = common::laws(lam, seed) {
        panic!("{e}");
    }
}

#[test]
fn generic() {
    check(Lambda::new(Rationals, Rationals.from_i64(2)), 1);
}

#[test]
fn odd_root() {
    check(Lambda::new(PrimeField::new(7).unwrap(), 2), 2);
}

#[test]
fn even_root() {
    check(Lambda::new(PrimeField::new(5).unwrap(), 2), 3);
}

#[test]
fn char2_q1() {
    check(Lambda::new(PrimeField::new(2).unwrap(), 1), 4);
}

#[test]
fn q_minus_one() {
    check(Lambda::new(Rationals, Rationals.from_i64(-1)), 5);
}

#[test]
fn q_one() {
    check(Lambda::new(Rationals, Rationals.one()), 6);
}

#[test]
fn q_zero() {
    check(Lambda::new(Rationals, Rationals.zero()), 7);
}
