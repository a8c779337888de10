//! Acceptance gate: one test per numbered criterion, each printing a
//! single pass/fail line.  Every check recomputes its inputs from the
//! checked-in data files; nothing is stubbed.

use certipoly::analytic::{
    best_exponent_interval, certify_monotone_chain_theorem1, equality_case_theorem1,
    equality_case_theorem2, g_derivatives, refine_transcendental_root, theorem2_certify,
};
use certipoly::dataio::DataSet;
use certipoly::discrimination::{count_roots, discriminant_sequence, revise_sign_list};
use certipoly::expr::Sign;
use certipoly::isolation::{count_roots_in, isolate_real_roots, refine_root, IsolatingInterval};
use certipoly::kernel::{
    interval_exp, interval_ln, interval_sqrt, parse_decimal, rat, rat_int, PrecisionBudget,
    Rational, RationalInterval,
};
use certipoly::poly::subresultant_prs;
use certipoly::resultant::{
    resultant_in_t, resultant_univariate, verify_factorization, BivariatePolynomial,
};
use certipoly::suite::{run_suite, SuiteConfig, SuiteKind};
use certipoly::UnivariatePolynomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::{Path, PathBuf};
use std::time::Instant;

fn data() -> DataSet {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    DataSet::load(&dir).expect("data files")
}

fn report(n: u32, what: &str, ok: bool, t: Instant) {
    println!(
        "criterion {n:02}: {} - {what} ({} ms)",
        if ok { "PASS" } else { "FAIL" },
        t.elapsed().as_millis()
    );
    assert!(ok, "criterion {n} failed: {what}");
}

/// The printed decimal approximation of a quantity as a rational,
/// together with the half-ulp slack its final rounded digit carries.
fn printed(s: &str) -> (Rational, Rational) {
    parse_decimal(s).expect("decimal literal")
}

fn contains_printed(iv: &IsolatingInterval, s: &str, extra: &Rational) -> bool {
    let (v, half_ulp) = printed(s);
    let slack = half_ulp + extra;
    &iv.lo - &slack <= v && v <= &iv.hi + &slack
}

#[test]
fn criterion_01_sign_list_p() {
    let t = Instant::now();
    let d = data();
    let revised = revise_sign_list(&discriminant_sequence(&d.p).unwrap().sign_list());
    let rc = count_roots(&d.p).unwrap();
    let ok = revised.signs == d.sign_list_p.signs
        && revised.signs.len() == 18
        && revised.sign_changes() == 9
        && rc.distinct_real == 0;
    report(1, "degree-18 sign list, 9 changes, 0 real roots", ok, t);
}

#[test]
fn criterion_02_sign_list_p2() {
    let t = Instant::now();
    let d = data();
    let revised = revise_sign_list(&discriminant_sequence(&d.p2).unwrap().sign_list());
    let rc = count_roots(&d.p2).unwrap();
    let ok = revised.signs == d.sign_list_p2.signs
        && revised.signs.len() == 20
        && revised.sign_changes() == 8
        && rc.distinct_real == 4;
    report(2, "degree-10 sign list, 8 changes, 4 real roots", ok, t);
}

#[test]
fn criterion_03_sign_list_p5() {
    let t = Instant::now();
    let d = data();
    let revised = revise_sign_list(&discriminant_sequence(&d.p5).unwrap().sign_list());
    let rc = count_roots(&d.p5).unwrap();
    let ok = revised.signs == d.sign_list_p5.signs
        && revised.signs.len() == 40
        && revised.sign_changes() == 16
        && rc.distinct_real == 8;
    report(3, "degree-40 sign list, 16 changes, 8 real roots", ok, t);
}

#[test]
fn criterion_04_p5_root_placement() {
    let t = Instant::now();
    let d = data();
    let mut roots = isolate_real_roots(&d.p5, None).unwrap();
    roots.sort_by(|a, b| a.lo.cmp(&b.lo));
    let mut expected = d.p5_root_intervals.clone();
    expected.sort_by(|a, b| a.0.cmp(&b.0));
    let placed = roots.len() == 8
        && expected.len() == 8
        && roots.iter().zip(&expected).all(|(iv, (lo, hi))| {
            // shrink the computed bracket until it fits the published one
            let mut iv = iv.clone();
            while !(lo <= &iv.lo && &iv.hi <= hi) && iv.width() > rat(1, 1_000_000) {
                iv = refine_root(&d.p5, &iv, &(iv.width() / rat_int(4))).unwrap();
            }
            lo <= &iv.lo && &iv.hi <= hi
        });
    let none_in_window =
        count_roots_in(&d.p5, &rat(1, 2), &rat(9, 13)).unwrap() == 0;
    report(
        4,
        "8 isolated roots inside published brackets, none in (1/2, 9/13)",
        placed && none_in_window,
        t,
    );
}

#[test]
fn criterion_05_refined_roots_match_decimals() {
    let t = Instant::now();
    let d = data();
    let prec = PrecisionBudget::default();
    let w9 = rat(2, 1_000_000_000); // +/- 1e-9
    let zero = rat_int(0);

    // x0: largest root of the cubic
    let cubic_roots = isolate_real_roots(&d.cubic_x0, None).unwrap();
    let x0 = refine_root(&d.cubic_x0, cubic_roots.last().unwrap(), &w9).unwrap();
    let ok_x0 = contains_printed(&x0, "4.113537611", &zero);

    // x4 and x1 from the monotonicity cascade
    let chain = certify_monotone_chain_theorem1(&d, &prec, &rat(1, 100_000_000)).unwrap();
    let [g, _, _, g3, _] = g_derivatives();
    let x4 = refine_transcendental_root(
        &g3,
        "g'''",
        &chain.steps[0].root,
        Sign::Positive,
        &w9,
        &prec,
    )
    .unwrap();
    // the published x4 decimal carries +/- 1e-8 slack
    let ok_x4 = contains_printed(&x4, "3.016763142", &rat(1, 100_000_000));
    let x1 = refine_transcendental_root(&g, "g", &chain.x1, Sign::Positive, &w9, &prec).unwrap();
    let ok_x1 = contains_printed(&x1, "3.067873979", &zero);

    // t1, t2, k0 from the coefficient family
    let cert = theorem2_certify(&d, &prec).unwrap();
    let t1 = refine_root(&d.p2, &cert.t1, &w9).unwrap();
    let t2 = refine_root(&d.p2, &cert.t2, &w9).unwrap();
    let k0 = refine_root(&d.p4, &cert.p4_root, &w9).unwrap();
    let ok_t1 = contains_printed(&t1, "0.5194285605", &zero);
    let ok_t2 = contains_printed(&t2, "0.8281776966", &zero);
    let ok_k0 = contains_printed(&k0, "0.6898369707", &zero);

    report(
        5,
        "x0, x4, x1, t1, t2, k0 refined to +/-1e-9 match published decimals",
        ok_x0 && ok_x4 && ok_x1 && ok_t1 && ok_t2 && ok_k0,
        t,
    );
}

#[test]
fn criterion_06_best_exponent_decimal() {
    let t = Instant::now();
    let d = data();
    let prec = PrecisionBudget::default();
    let chain = certify_monotone_chain_theorem1(&d, &prec, &rat(1, 100_000_000)).unwrap();
    let [g, _, _, _, _] = g_derivatives();
    let x1 = refine_transcendental_root(
        &g,
        "g",
        &chain.x1,
        Sign::Positive,
        &rat(1, 100_000_000_000_000),
        &prec,
    )
    .unwrap();
    let lm = best_exponent_interval(&x1, &prec).unwrap();
    let (v, _) = printed("5.977930729");
    let ok = lm.width() <= rat(1, 100_000_000) && lm.contains(&v);
    report(
        6,
        "best-exponent interval of width <= 1e-8 containing the published decimal",
        ok,
        t,
    );
}

#[test]
fn criterion_07_radical_identity() {
    let t = Instant::now();
    let d = data();
    let ok = certipoly::resultant::radical_identity_holds(&d.p2);
    report(7, "closed-form rationalization identity against p2", ok, t);
}

#[test]
fn criterion_08_p3_rederivation() {
    let t = Instant::now();
    let d = data();
    let derived = certipoly::resultant::derive_eliminant().unwrap();
    report(8, "eliminant p3 rederived coefficient-for-coefficient", derived == d.p3, t);
}

#[test]
fn criterion_09_resultant_factorization() {
    let t = Instant::now();
    let d = data();
    let r = resultant_in_t(&BivariatePolynomial::from_univariate_t(&d.p2), &d.p3).unwrap();
    // the checked-in p3 has content (1-t)^2 (2t-1)^4 removed; restore
    // the resultant of p2 against that content before dividing
    let content = UnivariatePolynomial::from_integers(&[1, -1])
        .pow(2)
        .mul(&UnivariatePolynomial::from_integers(&[-1, 2]).pow(4));
    let content_res = resultant_univariate(&d.p2, &content).unwrap();
    let full = r.scale(&content_res);
    let ok = verify_factorization(&full, &[d.p4.clone(), d.p5.clone()], &d.m);
    report(9, "Res_t(p2, p3) equals m * p4 * p5 exactly", ok, t);
}

#[test]
fn criterion_10_p_rederivation() {
    let t = Instant::now();
    let d = data();
    let [_, _, _, _, g4] = g_derivatives();
    let expected = UnivariatePolynomial::from_integers(&[0, 4]).mul(&d.p);
    let num = g4.rational_part.numerator();
    let ok = g4.is_pure_rational()
        && num
            == &expected.scale(&(num.leading().unwrap() / expected.leading().unwrap()))
        && num.leading().unwrap() == expected.leading().unwrap();
    report(10, "fourth derivative of g has numerator exactly 4x * p(x)", ok, t);
}

#[test]
fn criterion_11_third_derivative_certificates() {
    let t = Instant::now();
    let prec = PrecisionBudget::default();
    let [_, _, _, g3, _] = g_derivatives();
    let at3 = g3
        .eval_interval(&RationalInterval::point(rat_int(3)), &prec)
        .unwrap();
    let exactly_three = at3 == RationalInterval::point(rat_int(3));
    let (s4, _) = g3.certify_sign(&rat_int(4), &prec).unwrap();
    report(
        11,
        "g''' exactly 3 (positive) at x = 3 and certified negative at x = 4",
        exactly_three && s4 == Sign::Negative,
        t,
    );
}

#[test]
fn criterion_12_conjecture_certified() {
    let t = Instant::now();
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let cfg = SuiteConfig::new(SuiteKind::All, PathBuf::from(dir));
    let rep = run_suite(&cfg).unwrap();
    let lambda_step = rep.steps.iter().find(|s| s.id == "lambda_bound").unwrap();
    let coeff_step = rep.steps.iter().find(|s| s.id == "coefficient_bound").unwrap();
    let ok = rep.verdict == certipoly::report::Verdict::Certified
        && lambda_step.verdict == certipoly::report::Verdict::Certified
        && coeff_step.verdict == certipoly::report::Verdict::Certified
        && t.elapsed().as_secs() < 900;
    report(
        12,
        "full run certified, including lambda = 5 and sqrt(3)/3 < k0 bounds",
        ok,
        t,
    );
}

#[test]
fn criterion_13_equality_cases() {
    let t = Instant::now();
    let d = data();
    let prec = PrecisionBudget::default();
    let tol = rat(1, 100_000_000);
    let chain = certify_monotone_chain_theorem1(&d, &prec, &rat(1, 100_000_000)).unwrap();
    let [g, _, _, _, _] = g_derivatives();
    let x1 = refine_transcendental_root(
        &g,
        "g",
        &chain.x1,
        Sign::Positive,
        &rat(1, 100_000_000_000_000),
        &prec,
    )
    .unwrap();
    let lambda = best_exponent_interval(&x1, &prec).unwrap();
    let eq1 = equality_case_theorem1(&x1, &lambda, &prec, &tol).unwrap();
    let cert = theorem2_certify(&d, &prec).unwrap();
    let eq2 = equality_case_theorem2(&cert.t1, &cert.k0, &prec, &tol).unwrap();
    report(
        13,
        "both equality triangles balance their inequalities within 1e-8 relative",
        eq1 && eq2,
        t,
    );
}

fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> UnivariatePolynomial {
    loop {
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-20..=20)).collect();
        let p = UnivariatePolynomial::from_integers(&coeffs);
        if p.degree() == Some(deg) {
            return p;
        }
    }
}

#[test]
fn criterion_14_property_suites() {
    let t = Instant::now();
    let d = data();
    let mut rng = ChaCha8Rng::seed_from_u64(14);

    // resultant by Sylvester determinant vs subresultant PRS: for a
    // normal PRS (degree drops of one) of primitive inputs the last
    // constant member is exactly the resultant; 1000 such pairs
    let mut resultants_agree = true;
    let mut compared = 0;
    while compared < 1000 {
        let df = rng.gen_range(2..=5);
        let dg = rng.gen_range(1..=df);
        let f = random_poly(&mut rng, df).primitive_integer().0;
        let g = random_poly(&mut rng, dg).primitive_integer().0;
        let prs = match subresultant_prs(&f, &g) {
            Ok(s) => s,
            Err(_) => continue,
        };
        let degs: Vec<usize> = prs.prs.iter().map(|p| p.degree().unwrap()).collect();
        let normal = degs.windows(2).all(|w| w[0] == w[1] + 1);
        if !normal || prs.prs.last().unwrap().degree() != Some(0) {
            continue;
        }
        compared += 1;
        if prs.prs.last().unwrap().coeff(0) != resultant_univariate(&f, &g).unwrap() {
            resultants_agree = false;
            break;
        }
    }

    // discrimination vs isolation on every checked-in polynomial
    let counts_agree = [&d.p, &d.p2, &d.p4, &d.p5, &d.cubic_x0].iter().all(|f| {
        count_roots(f).unwrap().distinct_real == isolate_real_roots(f, None).unwrap().len()
    });

    // interval containment under precision doubling, 10000 samples
    let mut containment = true;
    for i in 0..10_000 {
        let n = rng.gen_range(1..=4000i64);
        let dd = rng.gen_range(1..=500i64);
        let x = RationalInterval::point(rat(n, dd));
        let bits = 32 + (i % 3) as u32 * 32;
        let coarse_p = PrecisionBudget::new(bits, bits, 2).unwrap();
        let fine_p = PrecisionBudget::new(2 * bits, 2 * bits, 2).unwrap();
        let ok = match i % 3 {
            0 => interval_ln(&x, &coarse_p)
                .unwrap()
                .contains_interval(&interval_ln(&x, &fine_p).unwrap()),
            1 => interval_sqrt(&x, &coarse_p)
                .unwrap()
                .contains_interval(&interval_sqrt(&x, &fine_p).unwrap()),
            _ => {
                let small = RationalInterval::point(rat(n % 40, dd));
                interval_exp(&small, &coarse_p).contains_interval(&interval_exp(&small, &fine_p))
            }
        };
        if !ok {
            containment = false;
            break;
        }
    }

    // fail-closed: perturbing one coefficient must flip the verdict
    let r = resultant_in_t(&BivariatePolynomial::from_univariate_t(&d.p2), &d.p3).unwrap();
    let content = UnivariatePolynomial::from_integers(&[1, -1])
        .pow(2)
        .mul(&UnivariatePolynomial::from_integers(&[-1, 2]).pow(4));
    let full = r.scale(&resultant_univariate(&d.p2, &content).unwrap());
    let mut bad_p5 = d.p5.coeffs().to_vec();
    bad_p5[7] += rat_int(1);
    let bad_p5 = UnivariatePolynomial::new(bad_p5);
    let fail_closed =
        !verify_factorization(&full, &[d.p4.clone(), bad_p5], &d.m);

    report(
        14,
        "resultant equivalence (1000 pairs), count agreement, containment (10000 samples), fail-closed mutation",
        resultants_agree && counts_agree && containment && fail_closed,
        t,
    );
}
