//! Acceptance run: one line per criterion, exit status 1 if any fails.
//!
//!     cargo test --release --test acceptance

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hhq::barcomplex::oracle_hh_dimensions;
use hhq::cup::{cup, verify_presentation, RelationStatus};
use hhq::field::{Field, PrimeField, Rationals};
use hhq::hilbert::{compare_dims, series_coefficients, series_for, vanishing_gaps};
use hhq::koszul::verify_centre_proposition;
use hhq::lambda::{Basis, CaseDescriptor, Lambda};
use hhq::resolution::{
    delta_star_matrix, hh_dimensions, verify_complex, verify_comultiplication, verify_minimality, Cohomology,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.2?}, limit {limit:?}"))
}

fn f(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn u64s(v: &[usize]) -> Vec<u64> {
    v.iter().map(|&d| d as u64).collect()
}

fn series(case: CaseDescriptor, n: usize) -> Vec<u64> {
    series_coefficients(&series_for(case), n).unwrap()
}

fn generic_case() -> Outcome {
    let t = Instant::now();
    let q = Rationals;
    let lam = Lambda::new(q, q.from_i64(2));
    let coh = Cohomology::new(lam.clone(), 12);
    let dims = coh.dimensions();
    let mut expected = vec![0; 13];
    expected[..3].copy_from_slice(&[2, 2, 1]);
    ensure(dims == expected, || format!("dims {dims:?}"))?;
    ensure(dims.iter().sum::<usize>() == 5, || "total dimension".into())?;

    let z = lam.standard_cochain(0, 0, Basis::YX);
    let u0 = lam.standard_cochain(1, 0, Basis::X);
    let u1 = lam.standard_cochain(1, 1, Basis::Y);
    let e1 = lam.standard_cochain(2, 1, Basis::YX);
    let u0u1 = cup(&lam, &u0, &u1).unwrap();
    let u1u0 = cup(&lam, &u1, &u0).unwrap();
    ensure(u0u1 == lam.scale_cochain(&q.neg(lam.q()), &e1), || "u0u1 != -q(0,yx,0)".into())?;
    ensure(u1u0 == lam.scale_cochain(lam.q(), &e1), || "u1u0 != q(0,yx,0)".into())?;
    let named = [("z", &z), ("u0", &u0), ("u1", &u1)];
    for (a, x) in named {
        for (b, y) in named {
            if [("u0", "u1"), ("u1", "u0")].contains(&(a, b)) {
                continue;
            }
            let p = cup(&lam, x, y).unwrap();
            let class = coh.reduce(&p).unwrap();
            ensure(class.coords.iter().all(|c| q.is_zero(c)), || format!("{a}{b} is nonzero"))?;
        }
    }
    within(t.elapsed(), Duration::from_secs(1))?;
    Ok(format!("dims {:?}, products match ({:.0?})", &dims[..4], t.elapsed()))
}

fn odd_root_case() -> Outcome {
    let t = Instant::now();
    let lam = Lambda::new(f(7), 2);
    let coh = Cohomology::new(lam.clone(), 14);
    let dims = u64s(&coh.dimensions());
    let expected = vec![2, 2, 1, 0, 0, 0, 3, 6, 3, 0, 0, 0, 5, 10, 5];
    ensure(dims == expected, || format!("dims {dims:?}"))?;
    ensure(dims == series(CaseDescriptor::OddRoot(3), 14), || "series mismatch".into())?;
    let gap = vanishing_gaps(&dims)[0];
    ensure(gap == (3, 5), || format!("first gap {gap:?}"))?;
    let report = verify_presentation(&coh, 13);
    let rel = report.relation("w0w2-w1^2").ok_or("relation w0w2-w1^2 missing")?;
    ensure(rel.degree == 12 && rel.status == RelationStatus::Holds, || format!("{rel:?}"))?;
    within(t.elapsed(), Duration::from_secs(10))?;
    Ok(format!("gap 3..5, w0w2 = w1^2 in HH^12 ({:.0?})", t.elapsed()))
}

fn even_root_case() -> Outcome {
    let lam = Lambda::new(f(5), 2);
    let coh = Cohomology::new(lam, 13);
    let dims = u64s(&coh.dimensions());
    let expected = vec![2, 2, 1, 0, 2, 4, 2, 0, 3, 6, 3, 0, 4, 8];
    ensure(dims == expected, || format!("dims {dims:?}"))?;
    ensure(dims == series(CaseDescriptor::EvenRootOrChar2(4), 13), || "series mismatch".into())?;
    let report = verify_presentation(&coh, 13);
    ensure(report.generates(), || format!("{:?}", report.generation))?;
    ensure(report.relations_hold(), || "relations fail".into())?;
    Ok("dims and series agree, generated to degree 13".into())
}

fn char2_case() -> Outcome {
    let k = f(2);
    let lam = Lambda::new(k, 1);
    for n in 1..=8 {
        ensure(delta_star_matrix(&lam, n).is_zero(&k), || format!("differential {n} nonzero"))?;
    }
    let dims = hh_dimensions(&lam, 8);
    ensure(dims.iter().enumerate().all(|(n, &d)| d == 4 * (n + 1)), || format!("dims {dims:?}"))?;
    let coh = Cohomology::new(lam, 6);
    let report = verify_presentation(&coh, 6);
    ensure(report.passed(), || format!("{:?}", report.generation))?;
    Ok("zero differential, dims 4(n+1), generated by x, y, w0, w1 to degree 6".into())
}

fn q_minus_one_case() -> Outcome {
    let q = Rationals;
    let lam = Lambda::new(q, q.from_i64(-1));
    let coh = Cohomology::new(lam, 8);
    let dims = coh.dimensions();
    ensure(dims == [4, 4, 5, 6, 7, 8, 9, 10, 11], || format!("dims {dims:?}"))?;
    ensure(u64s(&dims) == series(CaseDescriptor::QMinusOne, 8), || "series mismatch".into())?;
    let report = verify_presentation(&coh, 8);
    for name in ["xu0", "yu1", "xw0", "yw1"] {
        let r = report.relation(name).ok_or_else(|| format!("{name} missing"))?;
        ensure(r.status == RelationStatus::Holds, || format!("{name}: {:?}", r.coordinates))?;
    }
    Ok("dims match, xu0 = yu1 = xw0 = yw1 = 0".into())
}

const IDEAL_I: [&str; 11] = [
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
];

fn q_one_case() -> Outcome {
    let q = Rationals;
    let lam = Lambda::new(q, q.one());
    let coh = Cohomology::new(lam, 8);
    let dims = coh.dimensions();
    ensure(dims == [2, 4, 6, 8, 10, 12, 14, 16, 18], || format!("dims {dims:?}"))?;
    ensure(u64s(&dims) == series(CaseDescriptor::QOne, 8), || "series mismatch".into())?;
    let report = verify_presentation(&coh, 8);
    let failing: Vec<String> = IDEAL_I
        .iter()
        .filter_map(|name| match report.relation(name) {
            Some(r) if r.status == RelationStatus::Holds => None,
            Some(r) => Some(format!("{name} -> {:?}", r.coordinates)),
            None => Some(format!("{name} missing")),
        })
        .collect();
    ensure(failing.is_empty(), || format!("erratum candidates: {}", failing.join("; ")))?;
    ensure(report.passed(), || "presentation check fails".into())?;
    Ok(format!("all {} relations of I reduce to zero", IDEAL_I.len()))
}

fn q_zero_case() -> Outcome {
    let q = Rationals;
    let lam = Lambda::new(q, q.zero());
    let coh = Cohomology::new(lam.clone(), 8);
    let dims = coh.dimensions();
    ensure(dims[1..] == [2, 3, 5, 7, 9, 11, 13, 15], || format!("dims {dims:?}"))?;
    ensure(dims[0] == 2, || format!("dim HH^0 = {}", dims[0]))?;
    let h = compare_dims(&lam, 8);
    ensure(h.passed() && h.annotations.len() == 1, || format!("{h:?}"))?;
    ensure(h.series[0] == 1, || "series constant term".into())?;
    let mut products = 0;
    for m in 1..=8 {
        for n in 1..=8 - m {
            for a in &coh.space(m).representatives {
                for b in &coh.space(n).representatives {
                    let p = cup(&lam, a, b).unwrap();
                    let class = coh.reduce(&p).unwrap();
                    ensure(class.coords.iter().all(|c| q.is_zero(c)), || format!("product in degrees {m}, {n}"))?;
                    products += 1;
                }
            }
        }
    }
    Ok(format!(
        "HH^0 = 2 vs series 1 flagged, {products} positive-degree products vanish"
    ))
}

fn oracle_check<F: Field>(lam: Lambda<F>, n: usize) -> Result<(), String> {
    let bar = oracle_hh_dimensions(&lam, n, n).map_err(|e| e.to_string())?;
    let minimal = hh_dimensions(&lam, n);
    ensure(bar == minimal, || format!("{}: bar {bar:?} vs {minimal:?}", lam.case()))
}

fn oracle_case() -> Outcome {
    let t = Instant::now();
    oracle_check(Lambda::new(f(7), 2), 4)?;
    oracle_check(Lambda::new(f(5), 2), 4)?;
    oracle_check(Lambda::new(f(2), 1), 4)?;
    oracle_check(Lambda::new(f(7), 6), 4)?;
    oracle_check(Lambda::new(f(7), 1), 4)?;
    oracle_check(Lambda::new(f(7), 0), 4)?;
    let prime = t.elapsed();
    within(prime, Duration::from_secs(120))?;
    oracle_check(Lambda::new(Rationals, Rationals.from_i64(2)), 3)?;
    Ok(format!("7 cases agree (prime fields {prime:.2?})"))
}

fn structural<F: Field>(lam: Lambda<F>) -> Result<(), String> {
    let case = lam.case();
    ensure(verify_complex(&lam, 9).passed(), || format!("{case}: delta^2"))?;
    ensure(verify_minimality(&lam, 8).passed(), || format!("{case}: minimality"))?;
    ensure(verify_comultiplication(&lam, 8).passed(), || format!("{case}: comultiplication"))
}

fn structural_case() -> Outcome {
    let q = Rationals;
    structural(Lambda::new(q, q.from_i64(2)))?;
    structural(Lambda::new(f(7), 2))?;
    structural(Lambda::new(f(5), 2))?;
    structural(Lambda::new(f(2), 1))?;
    structural(Lambda::new(q, q.from_i64(-1)))?;
    structural(Lambda::new(q, q.one()))?;
    structural(Lambda::new(q, q.zero()))?;
    Ok("delta^2 = 0, minimality, comultiplication for n <= 8 in all 7 cases".into())
}

fn centre_case() -> Outcome {
    let mut seen = Vec::new();
    let mut check = |name: &str, report: hhq::koszul::CentreReport, expected: &str| -> Result<(), String> {
        ensure(report.passed() && report.expected == expected, || format!("{name}: {report:?}"))?;
        seen.push(format!("{name} {expected}"));
        Ok(())
    };
    check("(Q, 2)", verify_centre_proposition(&Rationals, &Rationals.from_i64(2), 20), "k")?;
    check("(F_2, 1)", verify_centre_proposition(&f(2), &1, 4), "k[x, y]")?;
    check("(F_5, 2)", verify_centre_proposition(&f(5), &2, 16), "k[x^4, y^4]")?;
    check("(F_7, 2)", verify_centre_proposition(&f(7), &2, 12), "k[x^6, x^3y^3, y^6]")?;
    Ok(seen.join(", "))
}

fn properties_case() -> Outcome {
    let q = Rationals;
    let mut samples = 0;
    samples += common::laws(Lambda::new(q, q.from_i64(2)), 11)?;
    samples += common::laws(Lambda::new(f(7), 2), 12)?;
    samples += common::laws(Lambda::new(f(5), 2), 13)?;
    samples += common::laws(Lambda::new(f(2), 1), 14)?;
    samples += common::laws(Lambda::new(q, q.from_i64(-1)), 15)?;
    samples += common::laws(Lambda::new(q, q.one()), 16)?;
    samples += common::laws(Lambda::new(q, q.zero()), 17)?;

    for qv in 0..7 {
        let k = f(7);
        let lam = Lambda::new(k, qv);
        for n in 1..=8 {
            let m = delta_star_matrix(&lam, n);
            ensure(m.rank(&k) + m.kernel_basis(&k).len() == m.cols(), || format!("rank-nullity q={qv} n={n}"))?;
        }
    }

    let args = ["hhq", "verify", "--field", "Fp:7", "--q", "2", "--max-n", "6", "--cap", "7", "--format", "json"];
    let run = || {
        let mut out = Vec::new();
        let code = hhq::cli::run(args, &mut out, &mut Vec::new());
        (code, out)
    };
    let (a, b) = (run(), run());
    ensure(a.0 == 0 && a == b, || "JSON output differs between runs".into())?;
    Ok(format!("{samples} cup samples, rank-nullity, deterministic JSON"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("generic case", generic_case),
        ("odd root r = 3", odd_root_case),
        ("even root r = 4", even_root_case),
        ("char 2, q = 1", char2_case),
        ("q = -1", q_minus_one_case),
        ("q = 1", q_one_case),
        ("q = 0", q_zero_case),
        ("bar oracle", oracle_case),
        ("structural suites", structural_case),
        ("graded centre", centre_case),
        ("property suites", properties_case),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {tag} {name}: {detail} [{:.2?}]", i + 1, t.elapsed());
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
