//! The Koszul dual `E(Λ_q) = k⟨x,y⟩/(yx − q·xy)` and its graded centre.
//!
//! Normal-form monomials are `x^a y^b` and
//! `x^a y^b · x^c y^d = q^{bc} x^{a+c} y^{b+d}`.
//!
//! A homogeneous `x^a y^b` is graded-central iff it graded-commutes with the
//! generators `x` and `y` (every other element is a sum of products of
//! them), which amounts to
//!
//! ```text
//! q^b = (-1)^{a+b}   and   q^a = (-1)^{a+b}.
//! ```
//!
//! The centre is spanned by such monomials because both conditions are
//! diagonal in the monomial basis.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::field::Field;
use crate::lambda::{classify, CaseDescriptor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumMonomial<E> {
    pub a: u64,
    pub b: u64,
    pub coefficient: E,
}

pub fn quantum_multiply<F: Field>(
    field: &F,
    q: &F::Elem,
    m1: &QuantumMonomial<F::Elem>,
    m2: &QuantumMonomial<F::Elem>,
) -> QuantumMonomial<F::Elem> {
    let twist = field.pow(q, m1.b * m2.a);
    QuantumMonomial {
        a: m1.a + m2.a,
        b: m1.b + m2.b,
        coefficient: field.mul(&twist, &field.mul(&m1.coefficient, &m2.coefficient)),
    }
}

/// `dim E(Λ)_n = n + 1`.
pub fn e_dimension(n: u64) -> u64 {
    n + 1
}

/// Does `x^a y^b` satisfy `m·γ = (-1)^{deg m · deg γ} γ·m` for `γ = x^c y^d`?
pub fn graded_commutes<F: Field>(field: &F, q: &F::Elem, (a, b): (u64, u64), (c, d): (u64, u64)) -> bool {
    let one = |a, b| QuantumMonomial { a, b, coefficient: field.one() };
    let left = quantum_multiply(field, q, &one(a, b), &one(c, d));
    let right = quantum_multiply(field, q, &one(c, d), &one(a, b));
    let sign = field.sign((a + b) * (c + d));
    left.coefficient == field.mul(&sign, &right.coefficient)
}

/// Exponent pairs `(a, b)`, `a + b ≤ max_total_degree`, of graded-central
/// monomials, ordered by total degree then `a`.
pub fn graded_centre_monomials<F: Field>(field: &F, q: &F::Elem, max_total_degree: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for n in 0..=max_total_degree {
        for a in 0..=n {
            let b = n - a;
            let s = field.sign(n);
            if field.pow(q, b) == s && field.pow(q, a) == s {
                out.push((a, b));
            }
        }
    }
    out
}

/// Which subalgebra the centre should be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CentreShape {
    /// Just the scalars.
    Scalars,
    /// `k[x^r, y^r]`.
    PowersOf { r: u64 },
    /// `k[x^{2r}, x^r y^r, y^{2r}]`.
    EvenPowersOf { r: u64 },
    /// No prediction (for example `q = 0`).
    Unspecified,
}

impl CentreShape {
    pub fn for_case(case: CaseDescriptor, characteristic: u64) -> CentreShape {
        match case.root_order() {
            None if case == CaseDescriptor::Generic => CentreShape::Scalars,
            None => CentreShape::Unspecified,
            Some(r) if r % 2 == 0 || characteristic == 2 => CentreShape::PowersOf { r },
            Some(r) => CentreShape::EvenPowersOf { r },
        }
    }

    pub fn contains(&self, (a, b): (u64, u64)) -> bool {
        match *self {
            CentreShape::Scalars => a == 0 && b == 0,
            CentreShape::PowersOf { r } => a % r == 0 && b % r == 0,
            CentreShape::EvenPowersOf { r } => a % r == 0 && b % r == 0 && ((a + b) / r) % 2 == 0,
            CentreShape::Unspecified => false,
        }
    }

    pub fn describe(&self) -> String {
        let p = |v: &str, e: u64| if e == 1 { v.to_string() } else { format!("{v}^{e}") };
        match *self {
            CentreShape::Scalars => "k".to_string(),
            CentreShape::PowersOf { r } => format!("k[{}, {}]", p("x", r), p("y", r)),
            CentreShape::EvenPowersOf { r } => {
                format!("k[{}, {}{}, {}]", p("x", 2 * r), p("x", r), p("y", r), p("y", 2 * r))
            }
            CentreShape::Unspecified => "unspecified".to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CentreReport {
    pub case: CaseDescriptor,
    pub expected: String,
    pub max_total_degree: u64,
    pub monomials: Vec<(u64, u64)>,
    /// Predicted but not central.
    pub missing: Vec<(u64, u64)>,
    /// Central but not predicted.
    pub unexpected: Vec<(u64, u64)>,
}

impl CentreReport {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

/// Compares the enumerated centre with the predicted subalgebra, truncated
/// at `max_total_degree`.
pub fn verify_centre_proposition<F: Field>(field: &F, q: &F::Elem, max_total_degree: u64) -> CentreReport {
    let case = classify(field, q);
    let shape = CentreShape::for_case(case, field.characteristic());
    let monomials = graded_centre_monomials(field, q, max_total_degree);
    let found: BTreeSet<(u64, u64)> = monomials.iter().copied().collect();
    let predicted: BTreeSet<(u64, u64)> = (0..=max_total_degree)
        .flat_map(|n| (0..=n).map(move |a| (a, n - a)))
        .filter(|&m| shape.contains(m))
        .collect();
    CentreReport {
        case,
        expected: shape.describe(),
        max_total_degree,
        missing: predicted.difference(&found).copied().collect(),
        unexpected: found.difference(&predicted).copied().collect(),
        monomials,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn multiplication_examples() {
        let f = Rationals;
        let q = f.from_i64(3);
        let m = |a, b| QuantumMonomial { a, b, coefficient: f.one() };
        assert_eq!(quantum_multiply(&f, &q, &m(0, 1), &m(1, 0)).coefficient, q);
        assert_eq!(quantum_multiply(&f, &q, &m(1, 0), &m(0, 1)).coefficient, f.one());
        let xy2 = quantum_multiply(&f, &q, &m(1, 1), &m(1, 1));
        assert_eq!((xy2.a, xy2.b, xy2.coefficient), (2, 2, q));
    }

    #[test]
    fn dimensions() {
        assert_eq!(e_dimension(0), 1);
        assert_eq!(e_dimension(1), 2);
        assert_eq!(e_dimension(5), 6);
    }

    #[test]
    fn centre_examples() {
        let f = Rationals;
        assert_eq!(graded_centre_monomials(&f, &f.from_i64(2), 20), vec![(0, 0)]);
        let f5 = PrimeField::new(5).unwrap();
        let c = graded_centre_monomials(&f5, &2, 12);
        assert!(c.iter().all(|&(a, b)| a % 4 == 0 && b % 4 == 0));
        assert_eq!(c.len(), 1 + 2 + 3 + 4);
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(
            graded_centre_monomials(&f7, &2, 12),
            vec![(0, 0), (0, 6), (3, 3), (6, 0), (0, 12), (3, 9), (6, 6), (9, 3), (12, 0)]
        );
    }

    #[test]
    fn q_zero_has_no_prediction() {
        let f = Rationals;
        let r = verify_centre_proposition(&f, &f.zero(), 4);
        assert_eq!(r.expected, "unspecified");
    }
}
