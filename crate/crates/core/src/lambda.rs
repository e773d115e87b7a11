//! The four-dimensional algebra `Λ_q = k⟨x,y⟩/(x², xy + q·yx, y²)`.
//!
//! Elements are stored in the normal-form basis `{1, x, y, yx}`. The only
//! nontrivial products are `x·y = -q·yx` and `y·x = yx`.

use std::fmt;

use serde::Serialize;

use crate::field::{mult_order, Field, Order};

/// Index of a normal-form basis element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    One = 0,
    X = 1,
    Y = 2,
    YX = 3,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::One, Basis::X, Basis::Y, Basis::YX];

    pub fn from_index(i: usize) -> Basis {
        Basis::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::One => "1",
            Basis::X => "x",
            Basis::Y => "y",
            Basis::YX => "yx",
        }
    }
}

/// Coordinates over `1, x, y, yx`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement<E>(pub [E; 4]);

impl<E> AlgebraElement<E> {
    pub fn coord(&self, b: Basis) -> &E {
        &self.0[b as usize]
    }
}

/// Which parameter regime `(k, q)` falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseDescriptor {
    /// `q ≠ 0` is not a root of unity.
    Generic,
    /// `q` a primitive `r`-th root of unity, `r > 1` odd, `char k ≠ 2`.
    OddRoot(u64),
    /// `char k = 2` with `q ≠ 1`, or `char k ≠ 2` with `r > 2` even.
    EvenRootOrChar2(u64),
    /// `char k = 2` and `q = 1`.
    Char2Q1,
    /// `char k ≠ 2` and `q = -1`.
    QMinusOne,
    /// `char k ≠ 2` and `q = 1`.
    QOne,
    QZero,
}

impl CaseDescriptor {
    /// Order of `q` for the root-of-unity regimes.
    pub fn root_order(&self) -> Option<u64> {
        match *self {
            CaseDescriptor::OddRoot(r) | CaseDescriptor::EvenRootOrChar2(r) => Some(r),
            CaseDescriptor::Char2Q1 | CaseDescriptor::QOne => Some(1),
            CaseDescriptor::QMinusOne => Some(2),
            CaseDescriptor::Generic | CaseDescriptor::QZero => None,
        }
    }
}

impl fmt::Display for CaseDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseDescriptor::Generic => write!(f, "Generic"),
            CaseDescriptor::OddRoot(r) => write!(f, "OddRoot({r})"),
            CaseDescriptor::EvenRootOrChar2(r) => write!(f, "EvenRootOrChar2({r})"),
            CaseDescriptor::Char2Q1 => write!(f, "Char2Q1"),
            CaseDescriptor::QMinusOne => write!(f, "QMinusOne"),
            CaseDescriptor::QOne => write!(f, "QOne"),
            CaseDescriptor::QZero => write!(f, "QZero"),
        }
    }
}

impl Serialize for CaseDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn classify<F: Field>(field: &F, q: &F::Elem) -> CaseDescriptor {
    let char2 = field.characteristic() == 2;
    match mult_order(field, q) {
        Order::Zero => CaseDescriptor::QZero,
        Order::Infinite => CaseDescriptor::Generic,
        Order::Finite(1) if char2 => CaseDescriptor::Char2Q1,
        Order::Finite(1) => CaseDescriptor::QOne,
        Order::Finite(2) => CaseDescriptor::QMinusOne,
        Order::Finite(r) if r % 2 == 1 && !char2 => CaseDescriptor::OddRoot(r),
        Order::Finite(r) => CaseDescriptor::EvenRootOrChar2(r),
    }
}

/// `Λ_q` over a fixed field, with its structure constants.
#[derive(Debug, Clone)]
pub struct Lambda<F: Field> {
    field: F,
    q: F::Elem,
    /// `table[i][j] = Some((c, k))` means `b_i · b_j = c · b_k`.
    table: [[Option<(F::Elem, Basis)>; 4]; 4],
}

impl<F: Field> Lambda<F> {
    pub fn new(field: F, q: F::Elem) -> Self {
        let one = field.one();
        let mut table: [[Option<(F::Elem, Basis)>; 4]; 4] = Default::default();
        for b in Basis::ALL {
            table[0][b as usize] = Some((one.clone(), b));
            table[b as usize][0] = Some((one.clone(), b));
        }
        let minus_q = field.neg(&q);
        if !field.is_zero(&minus_q) {
            table[Basis::X as usize][Basis::Y as usize] = Some((minus_q, Basis::YX));
        }
        table[Basis::Y as usize][Basis::X as usize] = Some((one, Basis::YX));
        Lambda { field, q, table }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn q(&self) -> &F::Elem {
        &self.q
    }

    pub fn case(&self) -> CaseDescriptor {
        classify(&self.field, &self.q)
    }

    /// Product of two basis elements as `(coefficient, basis)`, or `None`
    /// when it vanishes.
    pub fn basis_product(&self, a: Basis, b: Basis) -> Option<&(F::Elem, Basis)> {
        self.table[a as usize][b as usize].as_ref()
    }

    pub fn zero(&self) -> AlgebraElement<F::Elem> {
        let z = self.field.zero();
        AlgebraElement([z.clone(), z.clone(), z.clone(), z])
    }

    pub fn one(&self) -> AlgebraElement<F::Elem> {
        self.basis(Basis::One)
    }

    pub fn basis(&self, b: Basis) -> AlgebraElement<F::Elem> {
        self.scaled_basis(self.field.one(), b)
    }

    pub fn scaled_basis(&self, c: F::Elem, b: Basis) -> AlgebraElement<F::Elem> {
        let mut e = self.zero();
        e.0[b as usize] = c;
        e
    }

    pub fn is_zero(&self, a: &AlgebraElement<F::Elem>) -> bool {
        a.0.iter().all(|c| self.field.is_zero(c))
    }

    pub fn add(&self, a: &AlgebraElement<F::Elem>, b: &AlgebraElement<F::Elem>) -> AlgebraElement<F::Elem> {
        let f = &self.field;
        AlgebraElement(std::array::from_fn(|i| f.add(&a.0[i], &b.0[i])))
    }

    pub fn sub(&self, a: &AlgebraElement<F::Elem>, b: &AlgebraElement<F::Elem>) -> AlgebraElement<F::Elem> {
        let f = &self.field;
        AlgebraElement(std::array::from_fn(|i| f.sub(&a.0[i], &b.0[i])))
    }

    pub fn scale(&self, c: &F::Elem, a: &AlgebraElement<F::Elem>) -> AlgebraElement<F::Elem> {
        let f = &self.field;
        AlgebraElement(std::array::from_fn(|i| f.mul(c, &a.0[i])))
    }

    /// `acc += c · a · b`.
    pub fn add_product(
        &self,
        acc: &mut AlgebraElement<F::Elem>,
        c: &F::Elem,
        a: &AlgebraElement<F::Elem>,
        b: &AlgebraElement<F::Elem>,
    ) {
        let f = &self.field;
        if f.is_zero(c) {
            return;
        }
        let minus_c = f.neg(c);
        for (i, ai) in a.0.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.0.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                if let Some((s, k)) = &self.table[i][j] {
                    let coef = f.mul(&f.mul(&minus_c, ai), s);
                    f.sub_mul_assign(&mut acc.0[*k as usize], &coef, bj);
                }
            }
        }
    }

    pub fn mul(&self, a: &AlgebraElement<F::Elem>, b: &AlgebraElement<F::Elem>) -> AlgebraElement<F::Elem> {
        let mut out = self.zero();
        self.add_product(&mut out, &self.field.one(), a, b);
        out
    }

    /// A basis of the centre: `{1, yx}`, or all of `Λ` when `q = -1`.
    pub fn centre_basis(&self) -> Vec<AlgebraElement<F::Elem>> {
        let f = &self.field;
        if f.is_zero(&f.add(&self.q, &f.one())) {
            Basis::ALL.iter().map(|&b| self.basis(b)).collect()
        } else {
            vec![self.basis(Basis::One), self.basis(Basis::YX)]
        }
    }

    pub fn render(&self, a: &AlgebraElement<F::Elem>) -> String {
        let f = &self.field;
        let terms: Vec<String> = Basis::ALL
            .iter()
            .filter(|&&b| !f.is_zero(a.coord(b)))
            .map(|&b| {
                let c = a.coord(b);
                let cs = f.render(c);
                match b {
                    Basis::One => cs,
                    _ if f.is_one(c) => b.name().to_string(),
                    _ if f.is_one(&f.neg(c)) => format!("-{}", b.name()),
                    _ if cs.contains(' ') || cs.contains('/') => format!("({cs})*{}", b.name()),
                    _ => format!("{cs}*{}", b.name()),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{CyclotomicField, PrimeField, Rationals};

    #[test]
    fn generator_products() {
        let f = Rationals;
        let lam = Lambda::new(f, f.from_i64(2));
        let x = lam.basis(Basis::X);
        let y = lam.basis(Basis::Y);
        assert_eq!(lam.mul(&x, &y), lam.scaled_basis(f.from_i64(-2), Basis::YX));
        assert_eq!(lam.mul(&y, &x), lam.basis(Basis::YX));
        assert!(lam.is_zero(&lam.mul(&x, &x)));
        assert!(lam.is_zero(&lam.mul(&y, &y)));
        let yx = lam.basis(Basis::YX);
        for b in Basis::ALL.into_iter().skip(1) {
            assert!(lam.is_zero(&lam.mul(&yx, &lam.basis(b))));
            assert!(lam.is_zero(&lam.mul(&lam.basis(b), &yx)));
        }
        // (1+x)(1+y) = 1 + x + y - q·yx
        let one = lam.one();
        let lhs = lam.mul(&lam.add(&one, &x), &lam.add(&one, &y));
        let expected = AlgebraElement([f.one(), f.one(), f.one(), f.from_i64(-2)]);
        assert_eq!(lhs, expected);
        assert_eq!(lam.render(&lhs), "1 + x + y - 2*yx");
    }

    #[test]
    fn classification_examples() {
        let q = Rationals;
        assert_eq!(classify(&q, &q.from_i64(2)), CaseDescriptor::Generic);
        assert_eq!(classify(&q, &q.from_i64(-1)), CaseDescriptor::QMinusOne);
        assert_eq!(classify(&q, &q.from_i64(1)), CaseDescriptor::QOne);
        assert_eq!(classify(&q, &q.zero()), CaseDescriptor::QZero);
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(classify(&f7, &2), CaseDescriptor::OddRoot(3));
        assert_eq!(classify(&f7, &6), CaseDescriptor::QMinusOne);
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(classify(&f5, &2), CaseDescriptor::EvenRootOrChar2(4));
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(classify(&f2, &1), CaseDescriptor::Char2Q1);
        assert_eq!(classify(&f2, &0), CaseDescriptor::QZero);
        let c3 = CyclotomicField::new(3).unwrap();
        assert_eq!(classify(&c3, &c3.generator()), CaseDescriptor::OddRoot(3));
        assert_eq!(
            classify(&c3, &c3.neg(&c3.generator())),
            CaseDescriptor::EvenRootOrChar2(6)
        );
    }

    #[test]
    fn centre_cases() {
        let q = Rationals;
        assert_eq!(Lambda::new(q, q.from_i64(2)).centre_basis().len(), 2);
        assert_eq!(Lambda::new(q, q.from_i64(-1)).centre_basis().len(), 4);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(Lambda::new(f2, 1).centre_basis().len(), 4);
    }
}
