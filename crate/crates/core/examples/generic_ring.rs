//! Cup products in the generic case, reduced to the chosen basis.
//!
//! For q not a root of unity the whole ring lives in degrees 0..2:
//! z = yx in degree 0, u0 = (x, 0) and u1 = (0, y) in degree 1, and
//! u0*u1 = -q (0, yx, 0) spans degree 2.

use hhq::cup::{cup, reduce_to_basis};
use hhq::field::{Field, Rationals};
use hhq::lambda::{Basis, Lambda};
use hhq::resolution::Cohomology;

fn main() {
    let f = Rationals;
    let lam = Lambda::new(f, f.from_i64(2));
    let coh = Cohomology::new(lam.clone(), 4);
    println!("dims {:?}", coh.dimensions());

    let z = lam.standard_cochain(0, 0, Basis::YX);
    let u0 = lam.standard_cochain(1, 0, Basis::X);
    let u1 = lam.standard_cochain(1, 1, Basis::Y);
    let named = [("z", &z), ("u0", &u0), ("u1", &u1)];

    for (a, x) in named {
        for (b, y) in named {
            let p = cup(&lam, x, y).expect("generators are cocycles");
            let c = reduce_to_basis(&coh, &p).unwrap();
            let coords: Vec<String> = c.coords.iter().map(|v| f.render(v)).collect();
            println!("{a:>2} * {b:<2} = {:<22} class [{}]", lam.render_cochain(&p), coords.join(", "));
        }
    }

    // Cup is only defined on cocycles.
    let not_closed = lam.standard_cochain(1, 0, Basis::One);
    println!("(1, 0) * u0: {:?}", cup(&lam, &not_closed, &u0).unwrap_err());
}
