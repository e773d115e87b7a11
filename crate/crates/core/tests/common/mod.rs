//! Random cocycle sampling shared by the cup-product tests and the
//! acceptance run.

use hhq::cup::{cup, cup_unchecked};
use hhq::field::Field;
use hhq::lambda::Lambda;
use hhq::resolution::{apply_delta_star, Cochain, Cohomology};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_DEGREE: usize = 6;
pub const SAMPLES: usize = 50;

struct Sampler<F: Field> {
    coh: Cohomology<F>,
    rng: ChaCha8Rng,
}

impl<F: Field> Sampler<F> {
    fn new(lam: Lambda<F>, seed: u64) -> Self {
        Sampler {
            coh: Cohomology::new(lam, MAX_DEGREE),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn scalar(&mut self) -> F::Elem {
        self.coh.lambda().field().from_i64(self.rng.gen_range(-3..=3))
    }

    fn cochain(&mut self, n: usize) -> Cochain<F::Elem> {
        let coords: Vec<F::Elem> = (0..4 * (n + 1)).map(|_| self.scalar()).collect();
        self.coh.lambda().cochain_from_coords(&coords)
    }

    /// Random combination of representatives plus a random coboundary.
    fn cocycle(&mut self, n: usize) -> Cochain<F::Elem> {
        let lam = self.coh.lambda().clone();
        let mut c = lam.zero_cochain(n);
        let reps = self.coh.space(n).representatives.clone();
        for r in &reps {
            let s = self.scalar();
            c = lam.add_cochains(&c, &lam.scale_cochain(&s, r));
        }
        if n > 0 {
            let b = apply_delta_star(&lam, &self.cochain(n - 1));
            c = lam.add_cochains(&c, &b);
        }
        c
    }

    fn degree(&mut self, max: usize) -> usize {
        self.rng.gen_range(0..=max)
    }

    fn class(&self, c: &Cochain<F::Elem>) -> Vec<F::Elem> {
        self.coh.reduce(c).expect("cocycle").coords
    }
}

/// Checks graded commutativity, associativity, coboundary annihilation and
/// the unit law on `SAMPLES` random cocycle tuples each. Returns the number
/// of tuples checked.
pub fn laws<F: Field>(lam: Lambda<F>, seed: u64) -> Result<usize, String> {
    let case = lam.case();
    let mut s = Sampler::new(lam, seed);
    let lam = s.coh.lambda().clone();
    let f = lam.field().clone();

    for _ in 0..SAMPLES {
        let m = s.degree(MAX_DEGREE);
        let n = s.degree(MAX_DEGREE - m);
        let a = s.cocycle(m);
        let b = s.cocycle(n);
        let ab = cup(&lam, &a, &b).map_err(|e| format!("{case}: {e}"))?;
        let ba = cup(&lam, &b, &a).map_err(|e| format!("{case}: {e}"))?;
        let sign = f.sign((m * n) as u64);
        let ba_signed = lam.scale_cochain(&sign, &ba);
        if s.class(&ab) != s.class(&ba_signed) {
            return Err(format!("{case}: graded commutativity fails in degrees {m}, {n}"));
        }
    }

    for _ in 0..SAMPLES {
        let m = s.degree(MAX_DEGREE);
        let n = s.degree(MAX_DEGREE - m);
        let k = s.degree(MAX_DEGREE - m - n);
        let (a, b, c) = (s.cocycle(m), s.cocycle(n), s.cocycle(k));
        let left = cup_unchecked(&lam, &cup_unchecked(&lam, &a, &b), &c);
        let right = cup_unchecked(&lam, &a, &cup_unchecked(&lam, &b, &c));
        if s.class(&left) != s.class(&right) {
            return Err(format!("{case}: associativity fails in degrees {m}, {n}, {k}"));
        }
    }

    for _ in 0..SAMPLES {
        let m = s.degree(MAX_DEGREE - 1);
        let n = 1 + s.degree(MAX_DEGREE - 1 - m);
        let a = s.cocycle(m);
        let boundary = apply_delta_star(&lam, &s.cochain(n - 1));
        for p in [cup(&lam, &a, &boundary), cup(&lam, &boundary, &a)] {
            let p = p.map_err(|e| format!("{case}: {e}"))?;
            if !s.class(&p).iter().all(|x| f.is_zero(x)) {
                return Err(format!("{case}: cocycle * coboundary is nonzero in degrees {m}, {n}"));
            }
        }
    }

    let one = lam.cochain_from_coords(&lam.one().0);
    for _ in 0..10 {
        let n = s.degree(MAX_DEGREE);
        let a = s.cocycle(n);
        if cup_unchecked(&lam, &one, &a) != a || cup_unchecked(&lam, &a, &one) != a {
            return Err(format!("{case}: unit law fails in degree {n}"));
        }
    }
    Ok(3 * SAMPLES + 10)
}

