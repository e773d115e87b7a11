//! Brute-force Hochschild cochains from the bar resolution.
//!
//! `C^n = Hom_k(Λ^{⊗n}, Λ)` has dimension `4^{n+1}`; a basis cochain sends
//! one tensor of basis elements `a_1 ⊗ … ⊗ a_n` to one basis element `b`.
//! Its index is `word · 4 + b`, where `word` reads `a_1 … a_n` as base-4
//! digits with `a_1` most significant. Nothing here uses the minimal
//! resolution, so the dimensions it produces are an independent check.

use thiserror::Error;

use crate::field::Field;
use crate::lambda::{Basis, Lambda};
use crate::matrix::ExactMatrix;

/// Default largest degree for [`oracle_hh_dimension`].
pub const DEFAULT_ORACLE_CAP: usize = 4;
/// Hard limit on the oracle cap (`d^5` is 16384 × 4096).
pub const MAX_ORACLE_CAP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("degree {degree} exceeds the oracle cap {cap}")]
    AboveCap { degree: usize, cap: usize },
}

/// A cochain `Λ^{⊗n} → Λ` as dense coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearCochain<E> {
    pub degree: usize,
    pub coords: Vec<E>,
}

pub fn cochain_dimension(n: usize) -> usize {
    4usize.pow(n as u32 + 1)
}

fn digit(word: usize, len: usize, k: usize) -> usize {
    (word >> (2 * (len - 1 - k))) & 3
}

/// Matrix of `d: C^n → C^{n+1}`, size `4^{n+2} × 4^{n+1}`:
///
/// `(dφ)(a_1⊗…⊗a_{n+1}) = a_1·φ(a_2⊗…) + Σ_{i=1}^{n} (-1)^i φ(…⊗a_i a_{i+1}⊗…) + (-1)^{n+1} φ(a_1⊗…⊗a_n)·a_{n+1}`.
pub fn bar_differential_matrix<F: Field>(lam: &Lambda<F>, n: usize) -> ExactMatrix<F> {
    let field = lam.field();
    let rows = cochain_dimension(n + 1);
    let cols = cochain_dimension(n);
    let mut m = ExactMatrix::zeros(field, rows, cols);
    let len = n + 1;
    let mut add = |row: usize, col: usize, c: &F::Elem| {
        let e = m.get_mut(row, col);
        *e = field.add(e, c);
    };
    let last_sign = field.sign(len as u64);
    for word in 0..4usize.pow(len as u32) {
        let letter = |k: usize| Basis::from_index(digit(word, len, k));
        // a_1 · φ(a_2 ⊗ … ⊗ a_{n+1})
        let tail = word & ((1 << (2 * n)) - 1);
        for c in Basis::ALL {
            if let Some((s, k)) = lam.basis_product(letter(0), c) {
                add(word * 4 + *k as usize, tail * 4 + c as usize, s);
            }
        }
        // (-1)^i φ(… ⊗ a_i a_{i+1} ⊗ …), letters i-1 and i merged (0-based)
        for i in 1..=n {
            let Some((s, k)) = lam.basis_product(letter(i - 1), letter(i)) else {
                continue;
            };
            let mut merged = 0usize;
            for p in 0..len {
                if p == i {
                    continue;
                }
                let d = if p == i - 1 { *k as usize } else { digit(word, len, p) };
                merged = merged * 4 + d;
            }
            let coef = field.mul(&field.sign(i as u64), s);
            for c in 0..4 {
                add(word * 4 + c, merged * 4 + c, &coef);
            }
        }
        // (-1)^{n+1} φ(a_1 ⊗ … ⊗ a_n) · a_{n+1}
        let head = word >> 2;
        for c in Basis::ALL {
            if let Some((s, k)) = lam.basis_product(c, letter(n)) {
                add(word * 4 + *k as usize, head * 4 + c as usize, &field.mul(&last_sign, s));
            }
        }
    }
    m
}

/// `dim ker d^n − rank d^{n-1}` from bar matrices alone.
pub fn oracle_hh_dimension<F: Field>(lam: &Lambda<F>, n: usize, cap: usize) -> Result<usize, OracleError> {
    if n > cap || n > MAX_ORACLE_CAP {
        return Err(OracleError::AboveCap {
            degree: n,
            cap: cap.min(MAX_ORACLE_CAP),
        });
    }
    let field = lam.field();
    let rank_out = bar_differential_matrix(lam, n).rank(field);
    let rank_in = if n == 0 {
        0
    } else {
        bar_differential_matrix(lam, n - 1).rank(field)
    };
    Ok(cochain_dimension(n) - rank_out - rank_in)
}

/// Oracle dimensions for `0..=max_n`, sharing each rank between neighbours.
pub fn oracle_hh_dimensions<F: Field>(lam: &Lambda<F>, max_n: usize, cap: usize) -> Result<Vec<usize>, OracleError> {
    if max_n > cap || max_n > MAX_ORACLE_CAP {
        return Err(OracleError::AboveCap {
            degree: max_n,
            cap: cap.min(MAX_ORACLE_CAP),
        });
    }
    let field = lam.field();
    let ranks: Vec<usize> = (0..=max_n)
        .map(|n| bar_differential_matrix(lam, n).rank(field))
        .collect();
    Ok((0..=max_n)
        .map(|n| cochain_dimension(n) - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn degree_zero_is_centre() {
        let lam = Lambda::new(Rationals, Rationals.from_i64(2));
        let d0 = bar_differential_matrix(&lam, 0);
        assert_eq!((d0.rows(), d0.cols()), (16, 4));
        assert_eq!(d0.kernel_basis(lam.field()).len(), 2);
        assert_eq!(oracle_hh_dimension(&lam, 0, 4).unwrap(), 2);
    }

    #[test]
    fn d_squared_vanishes() {
        let f = PrimeField::new(7).unwrap();
        let lam = Lambda::new(f, 2);
        for n in 0..3 {
            let prod = bar_differential_matrix(&lam, n + 1)
                .mul(&f, &bar_differential_matrix(&lam, n))
                .unwrap();
            assert!(prod.is_zero(&f), "d∘d ≠ 0 at n = {n}");
        }
    }

    #[test]
    fn char2_degree_one() {
        let f = PrimeField::new(2).unwrap();
        let lam = Lambda::new(f, 1);
        assert_eq!(oracle_hh_dimension(&lam, 1, 4).unwrap(), 8);
    }

    #[test]
    fn cap_is_enforced() {
        let lam = Lambda::new(Rationals, Rationals.from_i64(2));
        assert_eq!(
            oracle_hh_dimension(&lam, 4, 3),
            Err(OracleError::AboveCap { degree: 4, cap: 3 })
        );
        assert!(oracle_hh_dimension(&lam, 6, 9).is_err());
    }
}
