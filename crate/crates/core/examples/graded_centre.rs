//! Graded centre of the Koszul dual k<x,y>/(yx - q xy).

use hhq::field::{Field, PrimeField, Rationals};
use hhq::koszul::{graded_commutes, quantum_multiply, verify_centre_proposition, QuantumMonomial};

fn show<F: Field>(f: &F, q: F::Elem, cutoff: u64) {
    let r = verify_centre_proposition(f, &q, cutoff);
    println!(
        "{} q = {}: expected {}, {} monomials up to degree {cutoff}, {}",
        f.describe(),
        f.render(&q),
        r.expected,
        r.monomials.len(),
        if r.passed() { "match" } else { "MISMATCH" }
    );
    println!("    {:?}", r.monomials);
}

fn main() {
    let f = Rationals;
    let q = f.from_i64(3);
    let y = QuantumMonomial { a: 0, b: 1, coefficient: f.one() };
    let x = QuantumMonomial { a: 1, b: 0, coefficient: f.one() };
    let yx = quantum_multiply(&f, &q, &y, &x);
    println!("y * x = {} x^{}y^{}", f.render(&yx.coefficient), yx.a, yx.b);
    println!("xy graded-commutes with x at q = 3: {}", graded_commutes(&f, &q, (1, 1), (1, 0)));

    show(&Rationals, Rationals.from_i64(2), 20);
    show(&PrimeField::new(2).unwrap(), 1, 8);
    show(&PrimeField::new(5).unwrap(), 2, 16);
    show(&PrimeField::new(7).unwrap(), 2, 12);
}
