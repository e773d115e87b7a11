//! Exact scalar fields: the rationals, prime fields and cyclotomic fields.
//!
//! Every computation in the crate is generic over [`Field`]. The runtime
//! choice of field (from the command line, say) is carried by
//! [`FieldContext`] and dispatched once with [`with_field!`](crate::with_field).

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too large (must be below 2^31)")]
    PrimeTooLarge(u64),
    #[error("cyclotomic order must be at least 1")]
    ZeroCyclotomicOrder,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("cannot parse field descriptor {0:?} (expected Q, Fp:<p> or Cyc:<r>)")]
    BadDescriptor(String),
}

/// A field with exact, canonically represented elements.
///
/// Elements do not carry their field; every operation goes through the
/// field value, so elements of different field types cannot be mixed.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Exponent bound that is exhaustive when searching for the order of a
    /// torsion element.
    fn torsion_bound(&self) -> u64;

    /// Parses an integer, a fraction `a/b`, or `zeta` (see [`Field::zeta`]).
    fn parse_scalar(&self, s: &str) -> Result<Self::Elem, FieldError>;

    /// The canonical primitive root named `zeta` on the command line, if the
    /// field has one.
    fn zeta(&self) -> Option<Self::Elem>;

    fn render(&self, a: &Self::Elem) -> String;
    fn describe(&self) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a ← a - b·c`, the inner step of elimination.
    fn sub_mul_assign(&self, a: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        *a = self.sub(a, &self.mul(b, c));
    }

    /// Non-negative power; `0^0 = 1`.
    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Integer power; negative exponents invert first.
    fn powi(&self, a: &Self::Elem, e: i64) -> Result<Self::Elem, FieldError> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(&self.inv(a)?, e.unsigned_abs()))
        }
    }

    /// `(-1)^e`.
    fn sign(&self, e: u64) -> Self::Elem {
        if e.is_multiple_of(2) {
            self.one()
        } else {
            self.neg(&self.one())
        }
    }
}

/// Multiplicative order of a scalar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Order {
    Zero,
    Finite(u64),
    Infinite,
}

/// Least `m ≥ 1` with `q^m = 1`, searching up to the field's torsion bound.
pub fn mult_order<F: Field>(field: &F, q: &F::Elem) -> Order {
    if field.is_zero(q) {
        return Order::Zero;
    }
    let bound = field.torsion_bound();
    // Orders divide the bound in every supported field, so only divisors
    // need testing; this keeps large prime fields cheap.
    for d in divisors(bound) {
        if field.is_one(&field.pow(q, d)) {
            return Order::Finite(d);
        }
    }
    Order::Infinite
}

/// Ascending divisors of `n` (`n ≥ 1`).
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn parse_fraction(s: &str) -> Result<(BigInt, BigInt), FieldError> {
    let err = || FieldError::Parse(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(FieldError::DivisionByZero);
    }
    Ok((num, den))
}

// ---------------------------------------------------------------------------
// Rationals

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational, FieldError> {
        if a.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sub_mul_assign(&self, a: &mut BigRational, b: &BigRational, c: &BigRational) {
        if !b.is_zero() && !c.is_zero() {
            *a -= b * c;
        }
    }
    fn torsion_bound(&self) -> u64 {
        2
    }
    fn parse_scalar(&self, s: &str) -> Result<BigRational, FieldError> {
        let (n, d) = parse_fraction(s)?;
        Ok(BigRational::new(n, d))
    }
    fn zeta(&self) -> Option<BigRational> {
        None
    }
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn describe(&self) -> String {
        "Q".to_string()
    }
}

// ---------------------------------------------------------------------------
// Prime fields

/// `Z/p` for a prime `p < 2^31`; elements are residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(FieldError::PrimeTooLarge(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Smallest residue generating the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        if self.p == 2 {
            return 1;
        }
        (2..self.p)
            .find(|&g| mult_order(self, &g) == Order::Finite(self.p - 1))
            .expect("a prime field has a primitive root")
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Result<u64, FieldError> {
        if *a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.pow(a, self.p - 2))
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn sub_mul_assign(&self, a: &mut u64, b: &u64, c: &u64) {
        let prod = b * c % self.p;
        *a = if *a >= prod { *a - prod } else { *a + self.p - prod };
    }
    fn torsion_bound(&self) -> u64 {
        self.p - 1
    }
    fn parse_scalar(&self, s: &str) -> Result<u64, FieldError> {
        let t = s.trim();
        if t == "zeta" {
            return Ok(self.primitive_root());
        }
        let (n, d) = parse_fraction(t)?;
        let d = self.reduce_big(&d);
        self.div(&self.reduce_big(&n), &d)
    }
    fn zeta(&self) -> Option<u64> {
        Some(self.primitive_root())
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn describe(&self) -> String {
        format!("F_{}", self.p)
    }
}

// ---------------------------------------------------------------------------
// Cyclotomic fields

/// Element of `Q(ζ_r)`: coefficients of a polynomial in `ζ` of degree below
/// `deg Φ_r`, lowest degree first, always fully reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycElem(pub Vec<BigRational>);

/// `Q(ζ_r) = Q[t]/Φ_r(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicField {
    r: u64,
    /// Monic `Φ_r`, lowest degree first.
    phi: Vec<BigInt>,
}

/// Integer polynomial, lowest degree first.
type IntPoly = Vec<BigInt>;
/// Rational polynomial, lowest degree first, no trailing zeros.
type RatPoly = Vec<BigRational>;

/// `Φ_r`, computed by dividing `t^r - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(r: u64) -> Result<Vec<BigInt>, FieldError> {
    if r == 0 {
        return Err(FieldError::ZeroCyclotomicOrder);
    }
    let mut poly: IntPoly = vec![BigInt::zero(); r as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[r as usize] = BigInt::one();
    for d in divisors(r) {
        if d == r {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d)?;
        poly = int_poly_exact_div(&poly, &phi_d);
    }
    Ok(poly)
}

/// Exact division by a monic integer polynomial.
fn int_poly_exact_div(num: &IntPoly, den: &IntPoly) -> IntPoly {
    let dn = den.len() - 1;
    let mut rem = num.clone();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    quot
}

fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn rat_poly_sub(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (o, c) in out.iter_mut().zip(b) {
        *o -= c;
    }
    trim(&mut out);
    out
}

fn rat_poly_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by nonzero `b`.
fn rat_poly_divmod(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let mut rem = a.clone();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - 1 - db;
        let c = rem.last().unwrap() / &lead;
        for (i, d) in b.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

impl CyclotomicField {
    pub fn new(r: u64) -> Result<Self, FieldError> {
        Ok(CyclotomicField {
            r,
            phi: cyclotomic_polynomial(r)?,
        })
    }

    pub fn order(&self) -> u64 {
        self.r
    }

    pub fn minimal_polynomial(&self) -> &[BigInt] {
        &self.phi
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn phi_rat(&self) -> RatPoly {
        self.phi.iter().cloned().map(BigRational::from_integer).collect()
    }

    /// Reduces an arbitrary rational polynomial to the canonical representative.
    pub fn reduce(&self, p: &[BigRational]) -> CycElem {
        let mut rem: RatPoly = p.to_vec();
        let deg = self.degree();
        // Φ_r is monic: fold high coefficients down.
        for k in (deg..rem.len()).rev() {
            let c = std::mem::take(&mut rem[k]);
            if c.is_zero() {
                continue;
            }
            for (i, ph) in self.phi.iter().enumerate().take(deg) {
                if !ph.is_zero() {
                    rem[k - deg + i] -= &c * BigRational::from_integer(ph.clone());
                }
            }
        }
        rem.truncate(deg);
        rem.resize(deg, BigRational::zero());
        CycElem(rem)
    }

    /// The class of `t`, a primitive `r`-th root of unity.
    pub fn generator(&self) -> CycElem {
        let mut t = vec![BigRational::zero(); 2];
        t[1] = BigRational::one();
        self.reduce(&t)
    }

    fn from_rational(&self, c: BigRational) -> CycElem {
        let mut v = vec![BigRational::zero(); self.degree()];
        v[0] = c;
        CycElem(v)
    }

    fn as_poly(&self, a: &CycElem) -> RatPoly {
        let mut p = a.0.clone();
        trim(&mut p);
        p
    }
}

impl Field for CyclotomicField {
    type Elem = CycElem;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> CycElem {
        CycElem(vec![BigRational::zero(); self.degree()])
    }
    fn one(&self) -> CycElem {
        self.from_rational(BigRational::one())
    }
    fn from_i64(&self, n: i64) -> CycElem {
        self.from_rational(BigRational::from_integer(n.into()))
    }
    fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }
    fn sub(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }
    fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        self.reduce(&rat_poly_mul(&self.as_poly(a), &self.as_poly(b)))
    }
    fn neg(&self, a: &CycElem) -> CycElem {
        CycElem(a.0.iter().map(|x| -x).collect())
    }
    fn inv(&self, a: &CycElem) -> Result<CycElem, FieldError> {
        // Extended Euclid: track s with s·a ≡ remainder (mod Φ_r).
        let mut r0 = self.phi_rat();
        let mut r1 = self.as_poly(a);
        if r1.is_empty() {
            return Err(FieldError::DivisionByZero);
        }
        let mut s0: RatPoly = Vec::new();
        let mut s1: RatPoly = vec![BigRational::one()];
        while r1.len() > 1 {
            let (quot, rem) = rat_poly_divmod(&r0, &r1);
            let s2 = rat_poly_sub(&s0, &rat_poly_mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                // gcd is non-constant: impossible for irreducible Φ_r.
                return Err(FieldError::DivisionByZero);
            }
        }
        let c = r1[0].recip();
        let scaled: RatPoly = s1.iter().map(|x| x * &c).collect();
        Ok(self.reduce(&scaled))
    }
    fn is_zero(&self, a: &CycElem) -> bool {
        a.0.iter().all(Zero::is_zero)
    }
    fn torsion_bound(&self) -> u64 {
        self.r.lcm(&2)
    }
    fn parse_scalar(&self, s: &str) -> Result<CycElem, FieldError> {
        let t = s.trim();
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) if rest.trim_start().starts_with("zeta") => (true, rest.trim()),
            _ => (false, t),
        };
        let value = if let Some(rest) = body.strip_prefix("zeta") {
            let e: i64 = match rest.strip_prefix('^') {
                Some(exp) => exp.trim().parse().map_err(|_| FieldError::Parse(s.to_string()))?,
                None if rest.is_empty() => 1,
                None => return Err(FieldError::Parse(s.to_string())),
            };
            self.powi(&self.generator(), e)?
        } else {
            let (n, d) = parse_fraction(body)?;
            self.from_rational(BigRational::new(n, d))
        };
        Ok(if neg { self.neg(&value) } else { value })
    }
    fn zeta(&self) -> Option<CycElem> {
        Some(self.generator())
    }
    fn render(&self, a: &CycElem) -> String {
        let terms: Vec<String> = a
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                _ => {
                    let mon = if i == 1 { "z".to_string() } else { format!("z^{i}") };
                    if c.is_one() {
                        mon
                    } else if (-c).is_one() {
                        format!("-{mon}")
                    } else if c.is_integer() || c.is_negative() {
                        format!("{c}*{mon}")
                    } else {
                        format!("({c})*{mon}")
                    }
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }
    fn describe(&self) -> String {
        format!("Q(zeta_{})", self.r)
    }
}

// ---------------------------------------------------------------------------
// Runtime selection

/// Field descriptor as written by users: `Q`, `Fp:<p>` or `Cyc:<r>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
    Cyclotomic(u64),
}

impl std::str::FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, FieldError> {
        let t = s.trim();
        let bad = || FieldError::BadDescriptor(s.to_string());
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let (kind, arg) = t.split_once(':').ok_or_else(bad)?;
        let n: u64 = arg.trim().parse().map_err(|_| bad())?;
        match kind.trim().to_ascii_lowercase().as_str() {
            "fp" | "f" | "gf" => Ok(FieldSpec::Prime(n)),
            "cyc" | "qzeta" => Ok(FieldSpec::Cyclotomic(n)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
            FieldSpec::Cyclotomic(r) => write!(f, "Cyc:{r}"),
        }
    }
}

/// A concrete field chosen at runtime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldContext {
    Rationals(Rationals),
    Prime(PrimeField),
    Cyclotomic(CyclotomicField),
}

pub fn make_field(spec: FieldSpec) -> Result<FieldContext, FieldError> {
    Ok(match spec {
        FieldSpec::Rationals => FieldContext::Rationals(Rationals),
        FieldSpec::Prime(p) => FieldContext::Prime(PrimeField::new(p)?),
        FieldSpec::Cyclotomic(r) => FieldContext::Cyclotomic(CyclotomicField::new(r)?),
    })
}

impl FieldContext {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldContext::Rationals(f) => f.characteristic(),
            FieldContext::Prime(f) => f.characteristic(),
            FieldContext::Cyclotomic(f) => f.characteristic(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            FieldContext::Rationals(f) => f.describe(),
            FieldContext::Prime(f) => f.describe(),
            FieldContext::Cyclotomic(f) => f.describe(),
        }
    }
}

/// Runs a generic body against the concrete field inside a [`FieldContext`].
///
/// ```
/// use hhq::field::{make_field, Field, FieldSpec};
/// let ctx = make_field(FieldSpec::Prime(7)).unwrap();
/// let four = hhq::with_field!(&ctx, |f| f.render(&f.inv(&f.from_i64(2)).unwrap()));
/// assert_eq!(four, "4");
/// ```
#[macro_export]
macro_rules! with_field {
    ($ctx:expr, |$f:ident| $body:expr) => {
        match $ctx {
            $crate::field::FieldContext::Rationals($f) => $body,
            $crate::field::FieldContext::Prime($f) => $body,
            $crate::field::FieldContext::Cyclotomic($f) => $body,
        }
    };
}
