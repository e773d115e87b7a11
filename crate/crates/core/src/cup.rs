//! Cup products on the minimal resolution and ring presentations of `HH*(Λ_q)`.
//!
//! For `η = (λ_0, …, λ_m)` and `θ = (λ'_0, …, λ'_n)` the product is
//!
//! ```text
//! (η∗θ)_i = Σ_{j = max(0, i-n)}^{min(m, i)} q^{j(n-i+j)} λ_j λ'_{i-j},   i = 0, …, m+n
//! ```
//!
//! Products are only meaningful on cocycles and are compared after reduction
//! modulo coboundaries.

use serde::Serialize;

use crate::field::Field;
use crate::lambda::{Basis, CaseDescriptor, Lambda};
use crate::matrix::IncrementalBasis;
use crate::resolution::{apply_delta_star, ClassCoordinates, Cochain, CochainError, Cohomology};

/// Product of two cochains; no cocycle check.
pub fn cup_unchecked<F: Field>(lam: &Lambda<F>, eta: &Cochain<F::Elem>, theta: &Cochain<F::Elem>) -> Cochain<F::Elem> {
    let field = lam.field();
    let m = eta.degree();
    let n = theta.degree();
    let entries = (0..=m + n)
        .map(|i| {
            let mut out = lam.zero();
            for j in i.saturating_sub(n)..=m.min(i) {
                let c = field.pow(lam.q(), (j * (n + j - i)) as u64);
                lam.add_product(&mut out, &c, &eta.entries[j], &theta.entries[i - j]);
            }
            out
        })
        .collect();
    Cochain { entries }
}

pub fn is_cocycle<F: Field>(lam: &Lambda<F>, c: &Cochain<F::Elem>) -> bool {
    lam.cochain_is_zero(&apply_delta_star(lam, c))
}

/// Product of two cocycles.
pub fn cup<F: Field>(
    lam: &Lambda<F>,
    eta: &Cochain<F::Elem>,
    theta: &Cochain<F::Elem>,
) -> Result<Cochain<F::Elem>, CochainError> {
    for c in [eta, theta] {
        if !is_cocycle(lam, c) {
            return Err(CochainError::NotACocycle { degree: c.degree() });
        }
    }
    Ok(cup_unchecked(lam, eta, theta))
}

/// Coordinates of a cocycle in the chosen basis of its degree.
pub fn reduce_to_basis<F: Field>(
    coh: &Cohomology<F>,
    c: &Cochain<F::Elem>,
) -> Result<ClassCoordinates<F::Elem>, CochainError> {
    coh.reduce(c)
}

#[derive(Debug, Clone)]
pub struct Generator<E> {
    pub name: String,
    pub degree: usize,
    pub representative: Cochain<E>,
}

/// `Σ coef · (product of generators) = target` (target zero when absent).
#[derive(Debug, Clone)]
pub struct Relation<E> {
    pub name: String,
    pub terms: Vec<(E, Vec<usize>)>,
    pub target: Option<Cochain<E>>,
}

#[derive(Debug, Clone)]
pub struct RingPresentation<E> {
    pub case: CaseDescriptor,
    pub generators: Vec<Generator<E>>,
    pub relations: Vec<Relation<E>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelationParseError {
    #[error("unknown generator at {0:?}")]
    UnknownGenerator(String),
    #[error("malformed relation {0:?}")]
    Malformed(String),
    #[error("relation {0:?} is not homogeneous")]
    Inhomogeneous(String),
}

impl<E: Clone> RingPresentation<E> {
    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn monomial_degree(&self, mono: &[usize]) -> usize {
        mono.iter().map(|&g| self.generators[g].degree).sum()
    }

    pub fn relation_degree(&self, rel: &Relation<E>) -> usize {
        rel.terms
            .first()
            .map(|(_, m)| self.monomial_degree(m))
            .or_else(|| rel.target.as_ref().map(Cochain::degree))
            .unwrap_or(0)
    }
}

impl<F: Field> Lambda<F> {
    fn generator(&self, name: &str, degree: usize, entries: &[(usize, Basis)]) -> Generator<F::Elem> {
        let mut rep = self.zero_cochain(degree);
        for &(j, b) in entries {
            rep.entries[j] = self.basis(b);
        }
        Generator {
            name: name.to_string(),
            degree,
            representative: rep,
        }
    }
}

/// Parses a relation such as `u0u1+zw0`, `w0w2-w1^2` or `2u0` over the
/// generator names of `pres`. Longest generator names match first.
pub fn parse_relation<F: Field>(
    field: &F,
    pres: &RingPresentation<F::Elem>,
    text: &str,
) -> Result<Vec<(F::Elem, Vec<usize>)>, RelationParseError> {
    let malformed = || RelationParseError::Malformed(text.to_string());
    let mut names: Vec<(usize, &str)> = pres.generators.iter().enumerate().map(|(i, g)| (i, g.name.as_str())).collect();
    names.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));

    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let mut sign = field.one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = field.neg(&sign);
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if !terms.is_empty() {
            return Err(malformed());
        }
        let digits = rest.chars().take_while(char::is_ascii_digit).count();
        let coef = if digits > 0 {
            let c: i64 = rest[..digits].parse().map_err(|_| malformed())?;
            rest = &rest[digits..];
            field.mul(&sign, &field.from_i64(c))
        } else {
            sign
        };
        let mut mono = Vec::new();
        while !rest.is_empty() && !rest.starts_with(['+', '-']) {
            let (idx, name) = names
                .iter()
                .find(|(_, n)| rest.starts_with(n))
                .ok_or_else(|| RelationParseError::UnknownGenerator(rest.to_string()))?;
            rest = &rest[name.len()..];
            let mut power = 1;
            if let Some(r) = rest.strip_prefix('^') {
                let d = r.chars().take_while(char::is_ascii_digit).count();
                power = r[..d].parse().map_err(|_| malformed())?;
                rest = &r[d..];
            }
            mono.extend(std::iter::repeat_n(*idx, power));
        }
        if mono.is_empty() {
            return Err(malformed());
        }
        terms.push((coef, mono));
    }
    if terms.is_empty() {
        return Err(malformed());
    }
    let d = pres.monomial_degree(&terms[0].1);
    if terms.iter().any(|(_, m)| pres.monomial_degree(m) != d) {
        return Err(RelationParseError::Inhomogeneous(text.to_string()));
    }
    Ok(terms)
}

/// Adds relations given as text to a presentation, skipping repeats.
fn add_relations<F: Field>(field: &F, pres: &mut RingPresentation<F::Elem>, texts: &[String]) {
    for t in texts {
        if pres.relations.iter().any(|r| &r.name == t) {
            continue;
        }
        let terms = parse_relation(field, pres, t).unwrap_or_else(|e| panic!("built-in relation {t:?}: {e}"));
        pres.relations.push(Relation {
            name: t.clone(),
            terms,
            target: None,
        });
    }
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// `g h - (-1)^{|g||h|} h g` for every pair of the listed generators.
fn graded_commutators<E: Clone>(pres: &RingPresentation<E>, names: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    for (a, ga) in names.iter().enumerate() {
        for gb in &names[a + 1..] {
            let da = pres.generators[pres.generator_index(ga).unwrap()].degree;
            let db = pres.generators[pres.generator_index(gb).unwrap()].degree;
            let op = if (da * db).is_multiple_of(2) { '-' } else { '+' };
            out.push(format!("{ga}{gb}{op}{gb}{ga}"));
        }
    }
    out
}

/// The tabulated presentation of `HH*(Λ_q)` for the case of `coh`.
///
/// For `q = 0` the ring is not finitely generated; the generators are the
/// basis classes of every degree up to `degree_cap`.
pub fn presentation<F: Field>(coh: &Cohomology<F>, degree_cap: usize) -> RingPresentation<F::Elem> {
    use Basis::{One, X, Y, YX};
    let lam = coh.lambda();
    let field = lam.field();
    let case = lam.case();
    let mut pres = RingPresentation {
        case,
        generators: Vec::new(),
        relations: Vec::new(),
    };
    let fibre = |pres: &RingPresentation<F::Elem>| {
        let mut v = vec!["z^2".to_string()];
        for g in pres.generators.iter().filter(|g| g.name != "z") {
            v.push(format!("z{}", g.name));
            v.push(format!("{}z", g.name));
        }
        v
    };
    let exterior = |names: &[&str]| {
        let mut v: Vec<String> = names.iter().map(|n| format!("{n}^2")).collect();
        for (a, x) in names.iter().enumerate() {
            for y in &names[a + 1..] {
                v.push(format!("{x}{y}+{y}{x}"));
            }
        }
        v
    };
    match case {
        CaseDescriptor::Generic => {
            pres.generators = vec![
                lam.generator("z", 0, &[(0, YX)]),
                lam.generator("u0", 1, &[(0, X)]),
                lam.generator("u1", 1, &[(1, Y)]),
            ];
            let mut rels = fibre(&pres);
            rels.extend(exterior(&["u0", "u1"]));
            add_relations(field, &mut pres, &rels);
            // u0u1 = -q(0,yx,0), u1u0 = q(0,yx,0)
            let e1 = lam.standard_cochain(2, 1, YX);
            for (name, c) in [("u0u1", field.neg(lam.q())), ("u1u0", lam.q().clone())] {
                let terms = parse_relation(field, &pres, name).expect("generator names");
                pres.relations.push(Relation {
                    name: format!("{name} = {}·(0,yx,0)", field.render(&c)),
                    terms,
                    target: Some(lam.scale_cochain(&c, &e1)),
                });
            }
        }
        CaseDescriptor::OddRoot(r) => {
            let r = r as usize;
            pres.generators = vec![
                lam.generator("z", 0, &[(0, YX)]),
                lam.generator("u0", 1, &[(0, X)]),
                lam.generator("u1", 1, &[(1, Y)]),
                lam.generator("w0", 2 * r, &[(0, One)]),
                lam.generator("w1", 2 * r, &[(r, One)]),
                lam.generator("w2", 2 * r, &[(2 * r, One)]),
            ];
            let mut rels = fibre(&pres);
            rels.extend(exterior(&["u0", "u1"]));
            rels.extend(graded_commutators(&pres, &["u0", "u1", "w0", "w1", "w2"]));
            rels.push("w0w2-w1^2".to_string());
            add_relations(field, &mut pres, &rels);
        }
        CaseDescriptor::EvenRootOrChar2(r) => {
            let r = r as usize;
            pres.generators = vec![
                lam.generator("z", 0, &[(0, YX)]),
                lam.generator("u0", 1, &[(0, X)]),
                lam.generator("u1", 1, &[(1, Y)]),
                lam.generator("w0", r, &[(0, One)]),
                lam.generator("w1", r, &[(r, One)]),
            ];
            let mut rels = fibre(&pres);
            rels.extend(exterior(&["u0", "u1"]));
            rels.extend(graded_commutators(&pres, &["u0", "u1", "w0", "w1"]));
            add_relations(field, &mut pres, &rels);
        }
        CaseDescriptor::Char2Q1 => {
            pres.generators = vec![
                lam.generator("x", 0, &[(0, X)]),
                lam.generator("y", 0, &[(0, Y)]),
                lam.generator("w0", 1, &[(0, One)]),
                lam.generator("w1", 1, &[(1, One)]),
            ];
            let mut rels = strs(&["x^2", "y^2"]);
            rels.extend(graded_commutators(&pres, &["x", "y", "w0", "w1"]));
            add_relations(field, &mut pres, &rels);
        }
        CaseDescriptor::QMinusOne => {
            pres.generators = vec![
                lam.generator("x", 0, &[(0, X)]),
                lam.generator("y", 0, &[(0, Y)]),
                lam.generator("u0", 1, &[(0, X)]),
                lam.generator("u1", 1, &[(1, Y)]),
                lam.generator("w0", 2, &[(0, One)]),
                lam.generator("w1", 2, &[(2, One)]),
            ];
            let mut rels = strs(&["xu0", "yu1", "xw0", "yw1", "x^2", "y^2"]);
            rels.extend(exterior(&["u0", "u1"]));
            rels.extend(graded_commutators(&pres, &["x", "y", "u0", "u1", "w0", "w1"]));
            add_relations(field, &mut pres, &rels);
        }
        CaseDescriptor::QOne => {
            pres.generators = vec![
                lam.generator("z", 0, &[(0, YX)]),
                lam.generator("u0", 1, &[(0, X)]),
                lam.generator("u1", 1, &[(0, Y)]),
                lam.generator("u2", 1, &[(1, X)]),
                lam.generator("u3", 1, &[(1, Y)]),
                lam.generator("w0", 2, &[(0, One)]),
                lam.generator("w1", 2, &[(1, One)]),
                lam.generator("w2", 2, &[(2, One)]),
            ];
            let mut rels = strs(&[
                "u0u2",
                "u1u3",
                "u0u1+zw0",
                "u0u3+zw1",
                "u2u3+zw2",
                "u1u2-zw1",
                "u0w1-u2w0",
                "u1w1-u3w0",
                "u0w2-u2w1",
                "u1w2-u3w1",
                "w0w2-w1^2",
            ]);
            rels.push("z^2".to_string());
            for u in ["u0", "u1", "u2", "u3"] {
                rels.push(format!("z{u}"));
                rels.push(format!("{u}z"));
            }
            rels.extend(exterior(&["u0", "u1", "u2", "u3"]));
            rels.extend(graded_commutators(&pres, &["u0", "u1", "u2", "u3", "w0", "w1", "w2"]));
            add_relations(field, &mut pres, &rels);
        }
        CaseDescriptor::QZero => {
            pres.generators.push(lam.generator("z", 0, &[(0, YX)]));
            for n in 1..=degree_cap.min(coh.max_degree()) {
                for (k, rep) in coh.space(n).representatives.iter().enumerate() {
                    pres.generators.push(Generator {
                        name: format!("v{n}_{k}"),
                        degree: n,
                        representative: rep.clone(),
                    });
                }
            }
            let one = field.one();
            for a in 0..pres.generators.len() {
                for b in 0..pres.generators.len() {
                    let (ga, gb) = (&pres.generators[a], &pres.generators[b]);
                    if ga.degree + gb.degree <= degree_cap {
                        let name = format!("{}{}", ga.name, gb.name);
                        pres.relations.push(Relation {
                            name,
                            terms: vec![(one.clone(), vec![a, b])],
                            target: None,
                        });
                    }
                }
            }
        }
    }
    pres
}

/// Evaluates `Σ coef · monomial − target` as a cochain.
pub fn evaluate_relation<F: Field>(
    lam: &Lambda<F>,
    pres: &RingPresentation<F::Elem>,
    rel: &Relation<F::Elem>,
) -> Cochain<F::Elem> {
    let degree = pres.relation_degree(rel);
    let mut acc = lam.zero_cochain(degree);
    for (c, mono) in &rel.terms {
        let value = evaluate_monomial(lam, pres, mono);
        acc = lam.add_cochains(&acc, &lam.scale_cochain(c, &value));
    }
    if let Some(t) = &rel.target {
        acc = lam.add_cochains(&acc, &lam.scale_cochain(&lam.field().neg(&lam.field().one()), t));
    }
    acc
}

pub fn evaluate_monomial<F: Field>(lam: &Lambda<F>, pres: &RingPresentation<F::Elem>, mono: &[usize]) -> Cochain<F::Elem> {
    let mut it = mono.iter();
    let first = it.next().expect("nonempty monomial");
    let mut value = pres.generators[*first].representative.clone();
    for g in it {
        value = cup_unchecked(lam, &value, &pres.generators[*g].representative);
    }
    value
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RelationStatus {
    Holds,
    /// Nonzero class; the reduced coordinates are reported.
    Fails,
    /// Degree beyond the verification cap.
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationResult {
    pub name: String,
    pub degree: usize,
    pub status: RelationStatus,
    /// Reduced coordinates of the relation, rendered.
    pub coordinates: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GenerationResult {
    pub degree: usize,
    pub spanned: usize,
    pub dimension: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub degree: usize,
    pub coordinates: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PresentationReport {
    pub case: CaseDescriptor,
    pub degree_cap: usize,
    pub generators: Vec<(String, usize, String)>,
    /// Names of generators whose representative is not a cocycle.
    pub non_cocycle_generators: Vec<String>,
    pub relations: Vec<RelationResult>,
    pub generation: Vec<GenerationResult>,
    pub products: Vec<ProductEntry>,
}

impl PresentationReport {
    pub fn relations_hold(&self) -> bool {
        self.relations.iter().all(|r| r.status != RelationStatus::Fails)
    }

    pub fn generates(&self) -> bool {
        self.generation.iter().all(|g| g.spanned == g.dimension)
    }

    pub fn passed(&self) -> bool {
        self.non_cocycle_generators.is_empty() && self.relations_hold() && self.generates()
    }

    pub fn relation(&self, name: &str) -> Option<&RelationResult> {
        self.relations.iter().find(|r| r.name == name)
    }
}

/// Dimension of the span of all generator monomials in each degree
/// `0..=cap`, computed by left-multiplying spanning sets by generators until
/// nothing new appears.
pub fn generated_dimensions<F: Field>(coh: &Cohomology<F>, pres: &RingPresentation<F::Elem>, cap: usize) -> Vec<usize> {
    let lam = coh.lambda();
    let field = lam.field();
    let mut spans: Vec<(IncrementalBasis<F>, Vec<Cochain<F::Elem>>)> = Vec::new();
    for n in 0..=cap {
        let dim = coh.space(n).dimension();
        let mut basis = IncrementalBasis::new(dim);
        let mut reps: Vec<Cochain<F::Elem>> = Vec::new();
        let push = |c: Cochain<F::Elem>, basis: &mut IncrementalBasis<F>, reps: &mut Vec<Cochain<F::Elem>>| {
            let coords = coh.reduce(&c).expect("products of cocycles are cocycles").coords;
            if basis.insert(field, &coords) {
                reps.push(c);
            }
        };
        if n == 0 {
            push(lam.cochain_from_coords(&lam.one().0), &mut basis, &mut reps);
        }
        for g in pres.generators.iter().filter(|g| g.degree >= 1 && g.degree <= n) {
            for s in &spans[n - g.degree].1 {
                push(cup_unchecked(lam, &g.representative, s), &mut basis, &mut reps);
            }
        }
        let mut k = 0;
        while k < reps.len() {
            let s = reps[k].clone();
            for g in pres.generators.iter().filter(|g| g.degree == 0) {
                push(cup_unchecked(lam, &g.representative, &s), &mut basis, &mut reps);
            }
            k += 1;
        }
        spans.push((basis, reps));
    }
    spans.iter().map(|(b, _)| b.rank()).collect()
}

/// Checks the tabulated presentation for the case of `coh` through degree
/// `degree_cap`: generators are cocycles, every relation reduces to zero,
/// and generator monomials span each `HH^n`.
pub fn verify_presentation<F: Field>(coh: &Cohomology<F>, degree_cap: usize) -> PresentationReport {
    let cap = degree_cap.min(coh.max_degree());
    let lam = coh.lambda();
    let field = lam.field();
    let pres = presentation(coh, cap);
    let render = |c: &ClassCoordinates<F::Elem>| c.coords.iter().map(|x| field.render(x)).collect::<Vec<_>>();

    let non_cocycle_generators = pres
        .generators
        .iter()
        .filter(|g| !is_cocycle(lam, &g.representative))
        .map(|g| g.name.clone())
        .collect();

    let relations = pres
        .relations
        .iter()
        .map(|rel| {
            let degree = pres.relation_degree(rel);
            if degree > cap {
                return RelationResult {
                    name: rel.name.clone(),
                    degree,
                    status: RelationStatus::Skipped,
                    coordinates: Vec::new(),
                };
            }
            let value = evaluate_relation(lam, &pres, rel);
            match coh.reduce(&value) {
                Ok(coords) => {
                    let zero = coords.coords.iter().all(|x| field.is_zero(x));
                    RelationResult {
                        name: rel.name.clone(),
                        degree,
                        status: if zero { RelationStatus::Holds } else { RelationStatus::Fails },
                        coordinates: render(&coords),
                    }
                }
                Err(e) => RelationResult {
                    name: rel.name.clone(),
                    degree,
                    status: RelationStatus::Fails,
                    coordinates: vec![e.to_string()],
                },
            }
        })
        .collect();

    let generation = generated_dimensions(coh, &pres, cap)
        .into_iter()
        .enumerate()
        .map(|(n, spanned)| GenerationResult {
            degree: n,
            spanned,
            dimension: coh.space(n).dimension(),
        })
        .collect();

    let named: Vec<&Generator<F::Elem>> = pres.generators.iter().take(8).collect();
    let mut products = Vec::new();
    for a in &named {
        for b in &named {
            let degree = a.degree + b.degree;
            if degree > cap {
                continue;
            }
            let value = cup_unchecked(lam, &a.representative, &b.representative);
            if let Ok(c) = coh.reduce(&value) {
                products.push(ProductEntry {
                    left: a.name.clone(),
                    right: b.name.clone(),
                    degree,
                    coordinates: render(&c),
                });
            }
        }
    }

    PresentationReport {
        case: pres.case,
        degree_cap: cap,
        generators: pres
            .generators
            .iter()
            .map(|g| (g.name.clone(), g.degree, lam.render_cochain(&g.representative)))
            .collect(),
        non_cocycle_generators,
        relations,
        generation,
        products,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn generic() -> Cohomology<Rationals> {
        Cohomology::new(Lambda::new(Rationals, Rationals.from_i64(2)), 4)
    }

    #[test]
    fn generic_products() {
        let coh = generic();
        let lam = coh.lambda();
        let f = lam.field();
        let u0 = lam.standard_cochain(1, 0, Basis::X);
        let u1 = lam.standard_cochain(1, 1, Basis::Y);
        let e1 = lam.standard_cochain(2, 1, Basis::YX);
        assert_eq!(cup(lam, &u0, &u1).unwrap(), lam.scale_cochain(&f.from_i64(-2), &e1));
        assert_eq!(cup(lam, &u1, &u0).unwrap(), lam.scale_cochain(&f.from_i64(2), &e1));
        let z = lam.standard_cochain(0, 0, Basis::YX);
        assert!(lam.cochain_is_zero(&cup(lam, &z, &z).unwrap()));

        let c = reduce_to_basis(&coh, &cup(lam, &u0, &u1).unwrap()).unwrap();
        assert_eq!(c.coords, vec![f.from_i64(-2)]);
        assert_eq!(reduce_to_basis(&coh, &lam.zero_cochain(2)).unwrap().coords, vec![f.zero()]);
    }

    #[test]
    fn cup_rejects_non_cocycles() {
        let coh = generic();
        let lam = coh.lambda();
        let bad = lam.standard_cochain(1, 0, Basis::One);
        let u0 = lam.standard_cochain(1, 0, Basis::X);
        assert_eq!(cup(lam, &bad, &u0), Err(CochainError::NotACocycle { degree: 1 }));
    }

    #[test]
    fn relation_parsing() {
        let coh = generic();
        let f = Rationals;
        let pres = presentation(&coh, 4);
        let t = parse_relation(&f, &pres, "u0u1+2zu1^2").unwrap();
        assert_eq!(t, vec![(f.one(), vec![1, 2]), (f.from_i64(2), vec![0, 2, 2])]);
        assert!(matches!(
            parse_relation(&f, &pres, "u0w7"),
            Err(RelationParseError::UnknownGenerator(_))
        ));
        assert!(matches!(
            parse_relation(&f, &pres, "u0+z"),
            Err(RelationParseError::Inhomogeneous(_))
        ));
        assert!(parse_relation(&f, &pres, "").is_err());
    }

    #[test]
    fn generic_presentation_holds() {
        let report = verify_presentation(&generic(), 4);
        assert!(report.passed(), "{report:#?}");
    }
}
