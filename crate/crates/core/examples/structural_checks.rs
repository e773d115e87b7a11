//! The minimal resolution: its words f^n_i, the differential on cochains,
//! and the three structural checks.

use hhq::field::{Field, PrimeField};
use hhq::lambda::{Basis, Lambda};
use hhq::resolution::{
    apply_delta_star, f_word_coefficients, verify_complex, verify_comultiplication, verify_minimality,
};

fn main() {
    let f = PrimeField::new(11).unwrap();
    let lam = Lambda::new(f, 3);
    for (i, w) in f_word_coefficients(&lam, 3).iter().enumerate() {
        println!("f^3_{i} = {}", w.render(|c| f.render(c)));
    }

    let eta = lam.standard_cochain(1, 0, Basis::One);
    println!("delta*(1, 0) = {}", lam.render_cochain(&apply_delta_star(&lam, &eta)));

    let complex = verify_complex(&lam, 9);
    let minimal = verify_minimality(&lam, 8);
    let comult = verify_comultiplication(&lam, 8);
    println!("delta^2 = 0: {} ({} checked)", complex.passed(), complex.compositions_checked);
    println!("minimal: {} ({} degrees)", minimal.passed(), minimal.degrees_checked);
    println!("comultiplication: {} ({} identities)", comult.passed(), comult.identities_checked);
}
