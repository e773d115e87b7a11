//! Exact scalar fields and runtime selection.

use hhq::field::{make_field, mult_order, CyclotomicField, Field, FieldSpec, PrimeField};
use hhq::lambda::classify;
use hhq::with_field;

fn main() {
    let c = CyclotomicField::new(5).unwrap();
    let z = c.generator();
    let w = c.add(&c.one(), &z);
    let winv = c.inv(&w).unwrap();
    println!("Phi_5 = {:?}", c.minimal_polynomial());
    println!("1/(1 + z) = {}", c.render(&winv));
    println!("order of z: {:?}", mult_order(&c, &z));

    let f = PrimeField::new(13).unwrap();
    let g = f.zeta().unwrap();
    println!("F_13 zeta = {} of order {:?}", g, mult_order(&f, &g));

    for text in ["Q", "Fp:7", "Cyc:4", "Fp:9"] {
        match text.parse::<FieldSpec>().map_err(|e| e.to_string()).and_then(|s| make_field(s).map_err(|e| e.to_string())) {
            Ok(ctx) => {
                let case = with_field!(&ctx, |f| f.parse_scalar("zeta").map(|q| classify(f, &q)));
                println!("{text:<6} {:<10} zeta -> {:?}", ctx.describe(), case.map(|c| c.to_string()));
            }
            Err(e) => println!("{text:<6} error: {e}"),
        }
    }
}
