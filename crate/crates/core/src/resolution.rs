//! The minimal bimodule resolution of `Λ_q` and the cochain complex it induces.
//!
//! `P^n` is free on generators `f̃^n_0, …, f̃^n_n`, so a cochain
//! `P^n → Λ` is a tuple `(λ_0, …, λ_n)` of algebra elements. Coordinates of
//! a cochain are flattened as `4·j + basis`.

use std::collections::BTreeMap;

use crate::field::Field;
use crate::lambda::{AlgebraElement, Basis, CaseDescriptor, Lambda};
use crate::matrix::{ExactMatrix, IncrementalBasis, SpanSolver};

/// A word of length `degree` over `{x, y}`; bit `k` is set when letter `k`
/// (counting from the left) is `y`.
pub type Word = u64;

/// Longest word length representable by [`Word`].
pub const MAX_WORD_LEN: usize = 63;

/// Linear combination of length-`degree` words in `x` and `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordCombination<E> {
    pub degree: usize,
    pub terms: BTreeMap<Word, E>,
}

impl<E: Clone> WordCombination<E> {
    pub fn render(&self, render_coef: impl Fn(&E) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                let word = if self.degree == 0 {
                    "1".to_string()
                } else {
                    (0..self.degree)
                        .map(|k| if w >> k & 1 == 1 { "y" } else { "x" })
                        .collect::<Vec<_>>()
                        .join("⊗")
                };
                format!("{}·{}", render_coef(c), word)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Number of `y` letters in a word.
pub fn y_count(w: Word) -> u32 {
    w.count_ones()
}

fn add_term<F: Field>(field: &F, terms: &mut BTreeMap<Word, F::Elem>, w: Word, c: F::Elem) {
    if field.is_zero(&c) {
        return;
    }
    let entry = terms.entry(w).or_insert_with(|| field.zero());
    *entry = field.add(entry, &c);
    if field.is_zero(entry) {
        terms.remove(&w);
    }
}

/// `a ⊗ b` scaled by `c`, accumulated into `out`.
fn add_tensor<F: Field>(
    field: &F,
    out: &mut BTreeMap<Word, F::Elem>,
    c: &F::Elem,
    a: &WordCombination<F::Elem>,
    b: &WordCombination<F::Elem>,
) {
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            let w = wa | (wb << a.degree);
            add_term(field, out, w, field.mul(c, &field.mul(ca, cb)));
        }
    }
}

/// `f^n_0, …, f^n_n` via `f^n_i = f^{n-1}_{i-1} ⊗ y + q^i · f^{n-1}_i ⊗ x`.
pub fn f_word_coefficients<F: Field>(lam: &Lambda<F>, n: usize) -> Vec<WordCombination<F::Elem>> {
    assert!(n <= MAX_WORD_LEN, "word length {n} exceeds {MAX_WORD_LEN}");
    let field = lam.field();
    let mut current = vec![WordCombination {
        degree: 0,
        terms: BTreeMap::from([(0, field.one())]),
    }];
    for m in 1..=n {
        let prev = current;
        let y_bit: Word = 1 << (m - 1);
        current = (0..=m)
            .map(|i| {
                let mut terms = BTreeMap::new();
                if i >= 1 {
                    for (w, c) in &prev[i - 1].terms {
                        add_term(field, &mut terms, w | y_bit, c.clone());
                    }
                }
                if i < m {
                    let qi = field.pow(lam.q(), i as u64);
                    for (w, c) in &prev[i].terms {
                        add_term(field, &mut terms, *w, field.mul(&qi, c));
                    }
                }
                WordCombination { degree: m, terms }
            })
            .collect();
    }
    current
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComultiplicationReport {
    pub identities_checked: usize,
    /// `(n, t, i)` triples where the identity failed.
    pub failures: Vec<(usize, usize, usize)>,
}

impl ComultiplicationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `f^n_i = Σ_j q^{j(n-i+j-t)} f^t_j ⊗ f^{n-t}_{i-j}` for every
/// `0 ≤ t ≤ n ≤ nmax` and every `i`.
pub fn verify_comultiplication<F: Field>(lam: &Lambda<F>, nmax: usize) -> ComultiplicationReport {
    let field = lam.field();
    let fs: Vec<_> = (0..=nmax).map(|n| f_word_coefficients(lam, n)).collect();
    let mut report = ComultiplicationReport {
        identities_checked: 0,
        failures: Vec::new(),
    };
    for n in 0..=nmax {
        for t in 0..=n {
            for i in 0..=n {
                let lo = (i + t).saturating_sub(n);
                let hi = t.min(i);
                let mut rhs = BTreeMap::new();
                for j in lo..=hi {
                    let e = j * (n - i + j - t);
                    let c = field.pow(lam.q(), e as u64);
                    add_tensor(field, &mut rhs, &c, &fs[t][j], &fs[n - t][i - j]);
                }
                report.identities_checked += 1;
                if rhs != fs[n][i].terms {
                    report.failures.push((n, t, i));
                }
            }
        }
    }
    report
}

/// A cochain `P^n → Λ`, stored as its values `λ_0, …, λ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochain<E> {
    pub entries: Vec<AlgebraElement<E>>,
}

impl<E: Clone> Cochain<E> {
    pub fn degree(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn coords(&self) -> Vec<E> {
        self.entries.iter().flat_map(|a| a.0.iter().cloned()).collect()
    }
}

impl<F: Field> Lambda<F> {
    pub fn zero_cochain(&self, degree: usize) -> Cochain<F::Elem> {
        Cochain {
            entries: vec![self.zero(); degree + 1],
        }
    }

    /// The cochain sending `f̃^n_j` to the basis element `b` and every other
    /// generator to zero; written `b·e_j`.
    pub fn standard_cochain(&self, degree: usize, j: usize, b: Basis) -> Cochain<F::Elem> {
        let mut c = self.zero_cochain(degree);
        c.entries[j] = self.basis(b);
        c
    }

    pub fn cochain_from_coords(&self, coords: &[F::Elem]) -> Cochain<F::Elem> {
        assert!(coords.len() % 4 == 0 && !coords.is_empty());
        Cochain {
            entries: coords
                .chunks(4)
                .map(|c| AlgebraElement([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]))
                .collect(),
        }
    }

    pub fn cochain_is_zero(&self, c: &Cochain<F::Elem>) -> bool {
        c.entries.iter().all(|a| self.is_zero(a))
    }

    pub fn add_cochains(&self, a: &Cochain<F::Elem>, b: &Cochain<F::Elem>) -> Cochain<F::Elem> {
        assert_eq!(a.entries.len(), b.entries.len());
        Cochain {
            entries: a.entries.iter().zip(&b.entries).map(|(x, y)| self.add(x, y)).collect(),
        }
    }

    pub fn scale_cochain(&self, c: &F::Elem, a: &Cochain<F::Elem>) -> Cochain<F::Elem> {
        Cochain {
            entries: a.entries.iter().map(|x| self.scale(c, x)).collect(),
        }
    }

    pub fn render_cochain(&self, c: &Cochain<F::Elem>) -> String {
        let parts: Vec<String> = c.entries.iter().map(|a| self.render(a)).collect();
        format!("({})", parts.join(", "))
    }
}

/// `η ↦ η∘δ^n` evaluated directly from the closed form: the `j`-th value is
/// `xλ_j + q^{n-j}·yλ_{j-1} + (-1)^n·λ_{j-1}y + (-1)^n·q^j·λ_j x`.
pub fn apply_delta_star<F: Field>(lam: &Lambda<F>, eta: &Cochain<F::Elem>) -> Cochain<F::Elem> {
    let field = lam.field();
    let n = eta.entries.len();
    let x = lam.basis(Basis::X);
    let y = lam.basis(Basis::Y);
    let sign = field.sign(n as u64);
    let one = field.one();
    let entries = (0..=n)
        .map(|j| {
            let mut out = lam.zero();
            if j < n {
                let lj = &eta.entries[j];
                lam.add_product(&mut out, &one, &x, lj);
                let c = field.mul(&sign, &field.pow(lam.q(), j as u64));
                lam.add_product(&mut out, &c, lj, &x);
            }
            if j >= 1 {
                let lprev = &eta.entries[j - 1];
                let c = field.pow(lam.q(), (n - j) as u64);
                lam.add_product(&mut out, &c, &y, lprev);
                lam.add_product(&mut out, &sign, lprev, &y);
            }
            out
        })
        .collect();
    Cochain { entries }
}

/// 4×4 matrices of `v ↦ a·v` and `v ↦ v·a` for a basis element `a`.
fn multiplication_blocks<F: Field>(lam: &Lambda<F>, a: Basis) -> (ExactMatrix<F>, ExactMatrix<F>) {
    let field = lam.field();
    let mut left = ExactMatrix::zeros(field, 4, 4);
    let mut right = ExactMatrix::zeros(field, 4, 4);
    for b in Basis::ALL {
        if let Some((c, k)) = lam.basis_product(a, b) {
            left.set(*k as usize, b as usize, c.clone());
        }
        if let Some((c, k)) = lam.basis_product(b, a) {
            right.set(*k as usize, b as usize, c.clone());
        }
    }
    (left, right)
}

/// Matrix of `(δ^n)^*: Λ^n → Λ^{n+1}`, size `4(n+1) × 4n`, assembled from
/// left/right multiplication blocks. `n = 0` gives the empty `4 × 0` map.
pub fn delta_star_matrix<F: Field>(lam: &Lambda<F>, n: usize) -> ExactMatrix<F> {
    let field = lam.field();
    let mut m = ExactMatrix::zeros(field, 4 * (n + 1), 4 * n);
    if n == 0 {
        return m;
    }
    let (lx, rx) = multiplication_blocks(lam, Basis::X);
    let (ly, ry) = multiplication_blocks(lam, Basis::Y);
    let sign = field.sign(n as u64);
    let mut put = |row_block: usize, col_block: usize, block: &ExactMatrix<F>, c: &F::Elem| {
        for r in 0..4 {
            for s in 0..4 {
                let v = block.get(r, s);
                if !field.is_zero(v) {
                    let e = m.get_mut(4 * row_block + r, 4 * col_block + s);
                    *e = field.add(e, &field.mul(c, v));
                }
            }
        }
    };
    let one = field.one();
    for j in 0..=n {
        if j < n {
            put(j, j, &lx, &one);
            put(j, j, &rx, &field.mul(&sign, &field.pow(lam.q(), j as u64)));
        }
        if j >= 1 {
            put(j, j - 1, &ly, &field.pow(lam.q(), (n - j) as u64));
            put(j, j - 1, &ry, &sign);
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexReport {
    pub compositions_checked: usize,
    /// Smallest `n` with `(δ^{n+1})^* ∘ (δ^n)^* ≠ 0`.
    pub first_failure: Option<usize>,
}

impl ComplexReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks `(δ^{n+1})^* ∘ (δ^n)^* = 0` for `1 ≤ n < nmax`.
pub fn verify_complex<F: Field>(lam: &Lambda<F>, nmax: usize) -> ComplexReport {
    let field = lam.field();
    let mut report = ComplexReport {
        compositions_checked: 0,
        first_failure: None,
    };
    for n in 1..nmax {
        let prod = delta_star_matrix(lam, n + 1)
            .mul(field, &delta_star_matrix(lam, n))
            .expect("consecutive differentials compose");
        report.compositions_checked += 1;
        if !prod.is_zero(field) && report.first_failure.is_none() {
            report.first_failure = Some(n);
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityReport {
    pub degrees_checked: usize,
    /// Degrees whose differential has a component outside the radical.
    pub failures: Vec<usize>,
}

impl MinimalityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that every `(δ^n)^*`, `1 ≤ n ≤ nmax`, lands in `rad Λ`: its rows
/// for the basis element `1` vanish, so no component is invertible.
pub fn verify_minimality<F: Field>(lam: &Lambda<F>, nmax: usize) -> MinimalityReport {
    let field = lam.field();
    let mut report = MinimalityReport {
        degrees_checked: 0,
        failures: Vec::new(),
    };
    for n in 1..=nmax {
        let m = delta_star_matrix(lam, n);
        let clean = (0..=n).all(|j| m.row(4 * j).iter().all(|v| field.is_zero(v)));
        report.degrees_checked += 1;
        if !clean {
            report.failures.push(n);
        }
    }
    report
}

/// `dim HH^n = dim ker (δ^{n+1})^* − rank (δ^n)^*`.
pub fn hh_dimension<F: Field>(lam: &Lambda<F>, n: usize) -> usize {
    let field = lam.field();
    let rank_out = delta_star_matrix(lam, n + 1).rank(field);
    let rank_in = if n == 0 { 0 } else { delta_star_matrix(lam, n).rank(field) };
    4 * (n + 1) - rank_out - rank_in
}

pub fn hh_dimensions<F: Field>(lam: &Lambda<F>, max_n: usize) -> Vec<usize> {
    let field = lam.field();
    let ranks: Vec<usize> = (0..=max_n + 1)
        .map(|n| delta_star_matrix(lam, n).rank(field))
        .collect();
    (0..=max_n).map(|n| 4 * (n + 1) - ranks[n + 1] - ranks[n]).collect()
}

/// How the representatives of a [`CohomologySpace`] were chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum RepresentativeSource {
    /// Exactly the tabulated maps for this case and degree.
    Listed,
    /// Standard maps `b·e_j`, completed by kernel vectors if needed.
    Standard,
}

/// `HH^n` with chosen representative cocycles and the data needed to
/// reduce any cocycle to coordinates.
#[derive(Debug, Clone)]
pub struct CohomologySpace<F: Field> {
    pub degree: usize,
    pub representatives: Vec<Cochain<F::Elem>>,
    pub source: RepresentativeSource,
    /// Independent coboundaries spanning `im (δ^n)^*`, in echelon form.
    pub coboundary_basis: Vec<Vec<F::Elem>>,
    cocycle_test: ExactMatrix<F>,
    /// Columns are the coboundary basis followed by the representatives.
    solver: SpanSolver<F>,
}

/// Coordinates of a class in the chosen basis of `HH^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCoordinates<E> {
    pub degree: usize,
    pub coords: Vec<E>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CochainError {
    #[error("cochain of degree {degree} is not a cocycle")]
    NotACocycle { degree: usize },
    #[error("expected a cochain of degree {expected}, got degree {got}")]
    WrongDegree { expected: usize, got: usize },
}

impl<F: Field> CohomologySpace<F> {
    pub fn dimension(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_cocycle(&self, field: &F, c: &Cochain<F::Elem>) -> bool {
        c.entries.len() == self.degree + 1
            && self
                .cocycle_test
                .apply(field, &c.coords())
                .expect("degree checked")
                .iter()
                .all(|v| field.is_zero(v))
    }

    /// Class of a cocycle in the representative basis; zero exactly for
    /// coboundaries.
    pub fn reduce(&self, field: &F, c: &Cochain<F::Elem>) -> Result<ClassCoordinates<F::Elem>, CochainError> {
        if c.entries.len() != self.degree + 1 {
            return Err(CochainError::WrongDegree {
                expected: self.degree,
                got: c.degree(),
            });
        }
        if !self.is_cocycle(field, c) {
            return Err(CochainError::NotACocycle { degree: self.degree });
        }
        let sol = self
            .solver
            .solve(field, &c.coords())
            .expect("length matches")
            .expect("cocycles lie in coboundaries + representatives");
        Ok(ClassCoordinates {
            degree: self.degree,
            coords: sol[self.coboundary_basis.len()..].to_vec(),
        })
    }

    pub fn kernel_basis(&self, field: &F) -> Vec<Vec<F::Elem>> {
        self.cocycle_test.kernel_basis(field)
    }
}

/// The representative maps tabulated for each case: degrees 0–2 from the
/// low-degree tables and higher degrees from the per-case lists.
pub fn listed_representatives<F: Field>(lam: &Lambda<F>, n: usize) -> Vec<Cochain<F::Elem>> {
    use Basis::{One, X, Y, YX};
    let case = lam.case();
    let e = |j: usize, b: Basis| lam.standard_cochain(n, j, b);
    let everything = || {
        (0..=n)
            .flat_map(|j| Basis::ALL.into_iter().map(move |b| (j, b)))
            .map(|(j, b)| e(j, b))
            .collect::<Vec<_>>()
    };
    match (case, n) {
        (CaseDescriptor::Char2Q1, _) => everything(),
        (_, 0) => lam
            .centre_basis()
            .into_iter()
            .map(|a| Cochain { entries: vec![a] })
            .collect(),
        (CaseDescriptor::QMinusOne, 1) => vec![e(0, X), e(0, YX), e(1, YX), e(1, Y)],
        (CaseDescriptor::QOne, 1) => vec![e(0, X), e(0, Y), e(1, X), e(1, Y)],
        (_, 1) => vec![e(0, X), e(1, Y)],
        (CaseDescriptor::QMinusOne, 2) => vec![e(0, One), e(0, Y), e(1, YX), e(2, X), e(2, One)],
        (CaseDescriptor::QOne, 2) => vec![e(0, One), e(1, One), e(2, One), e(0, YX), e(1, YX), e(2, YX)],
        (CaseDescriptor::QZero, _) => {
            let mut v: Vec<_> = (0..=n - 2).map(|i| e(i, X)).collect();
            v.push(e(n, Y));
            v.extend((1..n).map(|i| e(i, YX)));
            v
        }
        (_, 2) => vec![e(1, YX)],
        (CaseDescriptor::Generic, _) => Vec::new(),
        (CaseDescriptor::OddRoot(r), _) => periodic_listing(n, 2 * r as usize, r as usize, &e),
        (CaseDescriptor::EvenRootOrChar2(r), _) => periodic_listing(n, r as usize, r as usize, &e),
        (CaseDescriptor::QMinusOne, _) if n.is_multiple_of(2) => {
            let mut v: Vec<_> = (0..=n).step_by(2).map(|j| e(j, One)).collect();
            v.push(e(0, Y));
            v.push(e(n, X));
            v.extend((1..n).step_by(2).map(|j| e(j, YX)));
            v
        }
        (CaseDescriptor::QMinusOne, _) => {
            let mut v = Vec::new();
            for j in (1..=n).step_by(2) {
                v.push(e(j - 1, X));
                v.push(e(j, Y));
            }
            v.push(e(0, YX));
            v.push(e(n, YX));
            v
        }
        (CaseDescriptor::QOne, _) => {
            let (a, b) = if n.is_multiple_of(2) { (One, YX) } else { (X, Y) };
            let mut v: Vec<_> = (0..=n).map(|j| e(j, a)).collect();
            v.extend((0..=n).map(|j| e(j, b)));
            v
        }
    }
}

/// Root-of-unity listing with period `period` and index step `r`: in degree
/// `s·period` the maps `e_{tr}`, in `s·period + 1` the maps `x·e_{tr}` and
/// `y·e_{tr+1}`, in `s·period + 2` the maps `yx·e_{tr+1}`, for
/// `t = 0, …, s·period/r`; nothing otherwise.
fn periodic_listing<E>(
    n: usize,
    period: usize,
    r: usize,
    e: &impl Fn(usize, Basis) -> Cochain<E>,
) -> Vec<Cochain<E>> {
    let s = n / period;
    let top = s * period / r;
    match n % period {
        0 => (0..=top).map(|t| e(t * r, Basis::One)).collect(),
        1 => (0..=top)
            .flat_map(|t| [e(t * r, Basis::X), e(t * r + 1, Basis::Y)])
            .collect(),
        2 => (0..=top).map(|t| e(t * r + 1, Basis::YX)).collect(),
        _ => Vec::new(),
    }
}

/// Builds `HH^n` with representatives: the tabulated maps when they form a
/// basis, otherwise standard maps `b·e_j` completed by kernel vectors.
pub fn hh_basis<F: Field>(lam: &Lambda<F>, n: usize) -> CohomologySpace<F> {
    let field = lam.field();
    let cocycle_test = delta_star_matrix(lam, n + 1);
    let coboundary_basis: Vec<Vec<F::Elem>> = if n == 0 {
        Vec::new()
    } else {
        let ech = delta_star_matrix(lam, n).transpose().rref(field);
        (0..ech.pivots.len()).map(|r| ech.matrix.row(r).to_vec()).collect()
    };
    let kernel = cocycle_test.kernel_basis(field);
    let dim = kernel.len() - coboundary_basis.len();
    let len = 4 * (n + 1);

    // Greedy selection of cocycles independent modulo coboundaries.
    let mut base = IncrementalBasis::new(len);
    for v in &coboundary_basis {
        base.insert(field, v);
    }
    let is_cocycle = |v: &[F::Elem]| {
        cocycle_test
            .apply(field, v)
            .expect("length matches")
            .iter()
            .all(|c| field.is_zero(c))
    };
    let select = |candidates: &mut dyn Iterator<Item = Vec<F::Elem>>, span: &mut IncrementalBasis<F>, chosen: &mut Vec<Vec<F::Elem>>| {
        let mut all_taken = true;
        for v in candidates {
            let taken = chosen.len() < dim && is_cocycle(&v) && span.insert(field, &v);
            if taken {
                chosen.push(v);
            }
            all_taken &= taken;
        }
        all_taken
    };

    let listed = listed_representatives(lam, n);
    let mut chosen = Vec::new();
    let mut span = base.clone();
    let all_listed = listed.len() == dim && select(&mut listed.iter().map(Cochain::coords), &mut span, &mut chosen);
    let source = if all_listed {
        RepresentativeSource::Listed
    } else {
        chosen.clear();
        span = base;
        let mut standard = (0..=n).flat_map(|j| Basis::ALL.into_iter().map(move |b| (j, b))).map(|(j, b)| lam.standard_cochain(n, j, b).coords());
        select(&mut standard, &mut span, &mut chosen);
        select(&mut kernel.into_iter(), &mut span, &mut chosen);
        RepresentativeSource::Standard
    };
    debug_assert_eq!(chosen.len(), dim);

    let mut columns = coboundary_basis.clone();
    columns.extend(chosen.iter().cloned());
    let solver = SpanSolver::new(field, &ExactMatrix::from_columns(field, len, &columns).expect("uniform length"));
    CohomologySpace {
        degree: n,
        representatives: chosen.iter().map(|v| lam.cochain_from_coords(v)).collect(),
        source,
        coboundary_basis,
        cocycle_test,
        solver,
    }
}

/// `HH^0, …, HH^max` built once and kept together with the algebra.
#[derive(Debug, Clone)]
pub struct Cohomology<F: Field> {
    lam: Lambda<F>,
    spaces: Vec<CohomologySpace<F>>,
}

impl<F: Field> Cohomology<F> {
    pub fn new(lam: Lambda<F>, max_degree: usize) -> Self {
        let spaces = (0..=max_degree).map(|n| hh_basis(&lam, n)).collect();
        Cohomology { lam, spaces }
    }

    pub fn lambda(&self) -> &Lambda<F> {
        &self.lam
    }

    pub fn max_degree(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn space(&self, n: usize) -> &CohomologySpace<F> {
        &self.spaces[n]
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.spaces.iter().map(CohomologySpace::dimension).collect()
    }

    pub fn reduce(&self, c: &Cochain<F::Elem>) -> Result<ClassCoordinates<F::Elem>, CochainError> {
        let n = c.degree();
        assert!(n <= self.max_degree(), "degree {n} beyond computed range");
        self.spaces[n].reduce(self.lam.field(), c)
    }
}
