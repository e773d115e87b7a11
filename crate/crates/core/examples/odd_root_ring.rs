//! The odd-root case: q = 2 in F_7 has order 3.
//!
//! Cohomology vanishes in degrees 3..5 and 9..11, and the degree 2r
//! classes w0, w1, w2 satisfy w0 w2 = w1^2 in degree 12.

use hhq::cup::{evaluate_relation, parse_relation, presentation, verify_presentation, Relation};
use hhq::field::PrimeField;
use hhq::hilbert::vanishing_gaps;
use hhq::lambda::Lambda;
use hhq::resolution::Cohomology;

fn main() {
    let f = PrimeField::new(7).unwrap();
    let lam = Lambda::new(f, 2);
    let coh = Cohomology::new(lam.clone(), 13);
    let dims: Vec<u64> = coh.dimensions().iter().map(|&d| d as u64).collect();
    println!("{}: {:?}", lam.case(), dims);
    println!("zero runs: {:?}", vanishing_gaps(&dims));

    let pres = presentation(&coh, 13);
    for g in &pres.generators {
        println!("  {:<3} deg {:<2} {}", g.name, g.degree, lam.render_cochain(&g.representative));
    }

    let terms = parse_relation(&f, &pres, "w0w2 - w1^2").unwrap();
    let rel = Relation { name: "w0w2-w1^2".into(), terms, target: None };
    let value = evaluate_relation(&lam, &pres, &rel);
    let class = coh.reduce(&value).unwrap();
    println!("w0w2 - w1^2 in HH^{}: {:?}", class.degree, class.coords);

    let report = verify_presentation(&coh, 13);
    println!(
        "{} relations checked, generation {}",
        report.relations.len(),
        if report.generates() { "ok" } else { "FAILED" }
    );
}
