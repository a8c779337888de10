//! Oracle-based property tests: every assertion checks an algebraic law
//! or a structure constructed to have a known answer, never a stored
//! numeric expectation.  All randomness is seeded.

use certipoly::discrimination::count_roots;
use certipoly::isolation::{count_roots_in, isolate_real_roots, refine_root};
use certipoly::kernel::{
    interval_exp, interval_ln, interval_sqrt, rat, rat_int, PrecisionBudget, Rational,
    RationalInterval,
};
use certipoly::poly::subresultant_prs;
use certipoly::resultant::resultant_univariate;
use certipoly::UnivariatePolynomial;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
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

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-50..=50), rng.gen_range(1..=20))
}

#[test]
fn derivative_satisfies_product_rule() {
    let mut r = rng(1);
    for _ in 0..500 {
        let d_f = r.gen_range(0..=6);
        let f = random_poly(&mut r, d_f);
        let d_g = r.gen_range(0..=6);
        let g = random_poly(&mut r, d_g);
        let lhs = f.mul(&g).derivative();
        let rhs = f.derivative().mul(&g).add(&f.mul(&g.derivative()));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn division_reconstructs_dividend() {
    let mut r = rng(2);
    for _ in 0..500 {
        let d_f = r.gen_range(0..=8);
        let f = random_poly(&mut r, d_f);
        let d_g = r.gen_range(1..=5);
        let g = random_poly(&mut r, d_g);
        let (q, rem) = f.div_rem(&g).unwrap();
        assert_eq!(q.mul(&g).add(&rem), f);
        assert!(rem.is_zero() || rem.degree() < g.degree());
    }
}

#[test]
fn evaluation_is_a_ring_homomorphism() {
    let mut r = rng(3);
    for _ in 0..500 {
        let d_f = r.gen_range(0..=6);
        let f = random_poly(&mut r, d_f);
        let d_g = r.gen_range(0..=6);
        let g = random_poly(&mut r, d_g);
        let x = random_rational(&mut r);
        assert_eq!(f.mul(&g).eval(&x), f.eval(&x) * g.eval(&x));
        assert_eq!(f.add(&g).eval(&x), f.eval(&x) + g.eval(&x));
        let s = f.eval(&x);
        let expected: i8 = if s.is_zero() {
            0
        } else if s.is_positive() {
            1
        } else {
            -1
        };
        assert_eq!(f.sign_at(&x), expected);
    }
}

#[test]
fn interval_evaluation_contains_point_values() {
    let mut r = rng(4);
    for _ in 0..500 {
        let d_f = r.gen_range(0..=6);
        let f = random_poly(&mut r, d_f);
        let a = random_rational(&mut r);
        let b = &a + rat(r.gen_range(1..=30), 7);
        let iv = RationalInterval::new(a.clone(), b.clone()).unwrap();
        let image = f.eval_interval(&iv);
        for num in 0..=4i64 {
            let x = &a + (&b - &a) * rat(num, 4);
            assert!(image.contains(&f.eval(&x)));
        }
    }
}

#[test]
fn subresultant_prs_agrees_with_sylvester_determinant() {
    // for primitive inputs with a normal PRS (every degree drop is one)
    // the last constant member of the subresultant PRS is exactly the
    // Sylvester-determinant resultant
    let mut r = rng(5);
    let mut compared = 0;
    while compared < 1000 {
        let df = r.gen_range(2..=5);
        let dg = r.gen_range(1..=df);
        let f = random_poly(&mut r, df).primitive_integer().0;
        let g = random_poly(&mut r, dg).primitive_integer().0;
        let prs = match subresultant_prs(&f, &g) {
            Ok(s) => s,
            Err(_) => continue,
        };
        let degs: Vec<usize> = prs.prs.iter().map(|p| p.degree().unwrap()).collect();
        if !degs.windows(2).all(|w| w[0] == w[1] + 1) || *degs.last().unwrap() != 0 {
            continue;
        }
        compared += 1;
        assert_eq!(
            prs.prs.last().unwrap().coeff(0),
            resultant_univariate(&f, &g).unwrap()
        );
    }
}

#[test]
fn resultant_is_multiplicative_in_the_second_argument() {
    let mut r = rng(6);
    for _ in 0..300 {
        let d_f = r.gen_range(1..=4);
        let f = random_poly(&mut r, d_f);
        let d_g = r.gen_range(1..=3);
        let g = random_poly(&mut r, d_g);
        let d_h = r.gen_range(1..=3);
        let h = random_poly(&mut r, d_h);
        let lhs = resultant_univariate(&f, &g.mul(&h)).unwrap();
        let rhs =
            resultant_univariate(&f, &g).unwrap() * resultant_univariate(&f, &h).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn resultant_swap_changes_sign_predictably() {
    let mut r = rng(7);
    for _ in 0..300 {
        let d_f = r.gen_range(1..=4);
        let f = random_poly(&mut r, d_f);
        let d_g = r.gen_range(1..=4);
        let g = random_poly(&mut r, d_g);
        let n = f.degree().unwrap();
        let m = g.degree().unwrap();
        let fg = resultant_univariate(&f, &g).unwrap();
        let gf = resultant_univariate(&g, &f).unwrap();
        if (n * m) % 2 == 0 {
            assert_eq!(fg, gf);
        } else {
            assert_eq!(fg, -gf);
        }
    }
}

#[test]
fn resultant_of_linear_factor_evaluates() {
    // Res(c (x - a), g) = c^deg(g) * g(a)
    let mut r = rng(8);
    for _ in 0..300 {
        let a = random_rational(&mut r);
        let c = rat(r.gen_range(1..=9), 1);
        let f = UnivariatePolynomial::new(vec![-&a * &c, c.clone()]);
        let d_g = r.gen_range(1..=5);
        let g = random_poly(&mut r, d_g);
        let expected = c.pow(g.degree().unwrap() as i32) * g.eval(&a);
        assert_eq!(resultant_univariate(&f, &g).unwrap(), expected);
    }
}

/// Builds a squarefree polynomial with exactly `real` distinct rational
/// roots and `imag` irreducible quadratic factors, returning the real
/// roots alongside.
fn known_structure(
    rng: &mut ChaCha8Rng,
    real: usize,
    imag: usize,
) -> (UnivariatePolynomial, Vec<Rational>) {
    let mut roots: Vec<Rational> = Vec::new();
    while roots.len() < real {
        let c = rat(rng.gen_range(-40..=40), rng.gen_range(1..=6));
        if !roots.contains(&c) {
            roots.push(c);
        }
    }
    let mut f = UnivariatePolynomial::one();
    for c in &roots {
        f = f.mul(&UnivariatePolynomial::new(vec![-c.clone(), rat_int(1)]));
    }
    for _ in 0..imag {
        // (x + b)^2 + d with d > 0 has no real roots
        let b = rat(rng.gen_range(-10..=10), 1);
        let d = rat(rng.gen_range(1..=15), 1);
        let q = UnivariatePolynomial::new(vec![&b * &b + d, b.clone() + b, rat_int(1)]);
        f = f.mul(&q);
    }
    (f, roots)
}

#[test]
fn discrimination_counts_match_construction_and_isolation() {
    let mut r = rng(9);
    for _ in 0..200 {
        let real = r.gen_range(0..=4);
        let imag = r.gen_range(0..=2);
        if real + imag == 0 {
            continue;
        }
        let (f, roots) = known_structure(&mut r, real, imag);
        let rc = count_roots(&f).unwrap();
        assert_eq!(rc.distinct_real, real);
        assert_eq!(rc.imaginary_pairs, imag);
        let isolated = isolate_real_roots(&f, None).unwrap();
        assert_eq!(isolated.len(), real);
        // bijection: every constructed root lies in exactly one interval
        for root in &roots {
            assert_eq!(isolated.iter().filter(|iv| iv.contains(root)).count(), 1);
        }
    }
}

#[test]
fn discrimination_agrees_with_isolation_on_random_polynomials() {
    let mut r = rng(10);
    for _ in 0..200 {
        let d_f = r.gen_range(1..=6);
        let f = random_poly(&mut r, d_f);
        let rc = count_roots(&f.squarefree_part().unwrap()).unwrap();
        let isolated = isolate_real_roots(&f, None).unwrap();
        assert_eq!(rc.distinct_real, isolated.len());
    }
}

#[test]
fn sturm_counts_roots_in_arbitrary_windows() {
    let mut r = rng(11);
    for _ in 0..200 {
        let real = r.gen_range(1..=4);
        let imag = r.gen_range(0..=1);
        let (f, roots) = known_structure(&mut r, real, imag);
        let lo = rat(r.gen_range(-45..=0), 1);
        let hi = &lo + rat(r.gen_range(1..=90), 1);
        let expected = roots
            .iter()
            .filter(|x| &lo < *x && **x <= hi && !f.eval(&lo).is_zero())
            .count();
        if f.eval(&lo).is_zero() || f.eval(&hi).is_zero() {
            continue; // the count is over a half-open window; skip endpoint roots
        }
        assert_eq!(count_roots_in(&f, &lo, &hi).unwrap(), expected);
    }
}

#[test]
fn refinement_narrows_without_losing_the_root() {
    let mut r = rng(12);
    for _ in 0..100 {
        let real = r.gen_range(1..=3);
        let (f, roots) = known_structure(&mut r, real, 0);
        let width = rat(1, 1_000_000);
        for iv in isolate_real_roots(&f, None).unwrap() {
            let tight = refine_root(&f, &iv, &width).unwrap();
            assert!(tight.width() <= width);
            assert!(iv.lo <= tight.lo && tight.hi <= iv.hi);
            assert_eq!(roots.iter().filter(|x| tight.contains(x)).count(), 1);
        }
    }
}

#[test]
fn interval_functions_tighten_under_precision_doubling() {
    let mut r = rng(13);
    for i in 0..10_000 {
        let n = r.gen_range(1..=4000i64);
        let d = r.gen_range(1..=500i64);
        let x = RationalInterval::point(rat(n, d));
        let bits = 32 + (i % 3) as u32 * 32;
        let coarse = PrecisionBudget::new(bits, bits, 2).unwrap();
        let fine = PrecisionBudget::new(2 * bits, 2 * bits, 2).unwrap();
        match i % 3 {
            0 => assert!(interval_ln(&x, &coarse)
                .unwrap()
                .contains_interval(&interval_ln(&x, &fine).unwrap())),
            1 => assert!(interval_sqrt(&x, &coarse)
                .unwrap()
                .contains_interval(&interval_sqrt(&x, &fine).unwrap())),
            _ => {
                let small = RationalInterval::point(rat(n % 40, d));
                assert!(
                    interval_exp(&small, &coarse).contains_interval(&interval_exp(&small, &fine))
                );
            }
        }
    }
}

#[test]
fn interval_functions_obey_inverse_identities() {
    // sqrt(x)^2 and exp(ln x) must enclose x
    let mut r = rng(14);
    let prec = PrecisionBudget::new(128, 128, 2).unwrap();
    for _ in 0..200 {
        let x = rat(r.gen_range(1..=900), r.gen_range(1..=30));
        let p = RationalInterval::point(x.clone());
        let s = interval_sqrt(&p, &prec).unwrap();
        assert!(s.mul(&s).contains(&x));
        if x <= rat_int(40) {
            let e = interval_exp(&interval_ln(&p, &prec).unwrap(), &prec);
            assert!(e.contains(&x));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn addition_and_multiplication_commute_and_associate(
        a in prop::collection::vec(-30i64..30, 1..6),
        b in prop::collection::vec(-30i64..30, 1..6),
        c in prop::collection::vec(-30i64..30, 1..6),
    ) {
        let f = UnivariatePolynomial::from_integers(&a);
        let g = UnivariatePolynomial::from_integers(&b);
        let h = UnivariatePolynomial::from_integers(&c);
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
    }

    #[test]
    fn composition_commutes_with_evaluation(
        a in prop::collection::vec(-10i64..10, 1..5),
        b in prop::collection::vec(-10i64..10, 1..4),
        num in -20i64..20,
        den in 1i64..8,
    ) {
        let f = UnivariatePolynomial::from_integers(&a);
        let g = UnivariatePolynomial::from_integers(&b);
        let x = rat(num, den);
        prop_assert_eq!(f.compose(&g).eval(&x), f.eval(&g.eval(&x)));
    }
}
