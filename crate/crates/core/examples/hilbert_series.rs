//! Hilbert series per case, expanded and compared with computed dimensions.

use hhq::field::{CyclotomicField, Field, PrimeField, Rationals};
use hhq::hilbert::{compare_dims, series_coefficients, series_for, vanishing_gaps};
use hhq::lambda::{CaseDescriptor, Lambda};

fn check<F: Field>(lam: Lambda<F>, n: usize) {
    let r = compare_dims(&lam, n);
    let verdict = match (r.passed(), r.annotations.is_empty()) {
        (true, true) => "match".to_string(),
        (true, false) => format!("match with note: {}", r.annotations.join("; ")),
        (false, _) => format!("MISMATCH {:?}", r.mismatches),
    };
    println!("{:<20} {:?} {verdict}", r.case.to_string(), r.computed);
}

fn main() {
    for r in [3, 5, 7] {
        let c = series_coefficients(&series_for(CaseDescriptor::OddRoot(r)), 6 * r as usize).unwrap();
        println!("OddRoot({r}) zero runs {:?}", vanishing_gaps(&c));
    }
    let spec = series_for(CaseDescriptor::EvenRootOrChar2(4));
    println!("EvenRoot(4) numerator {:?} denominator {:?}", spec.numerator, spec.denominator);

    check(Lambda::new(Rationals, Rationals.from_i64(2)), 12);
    check(Lambda::new(PrimeField::new(5).unwrap(), 2), 13);
    check(Lambda::new(Rationals, Rationals.from_i64(-1)), 8);
    check(Lambda::new(Rationals, Rationals.zero()), 8);
    let c = CyclotomicField::new(3).unwrap();
    let z = c.generator();
    check(Lambda::new(c, z), 14);
}
