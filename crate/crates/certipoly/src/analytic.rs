//! The analytic certification chains behind both best-constant results:
//! the monotonicity cascade locating the unique critical point `x1` of
//! the exponent function, validated evaluation of the resulting best
//! exponent, the subdivision proof of the power inequality for a given
//! rational exponent, the `t`-side chain locating `t1` and the best
//! coefficient `k0`, and interval equality checks for the extremal
//! triangles.
//!
//! Every sign reported here is backed by either exact rational
//! arithmetic or an interval excluding zero; "don't know" is always
//! reported as indeterminate, never guessed.

use crate::dataio::DataSet;
use crate::discrimination::count_roots;
use crate::error::{Error, Result};
use crate::expr::{ExprNode, Sign};
use crate::isolation::{count_roots_in, isolate_real_roots, refine_root, IsolatingInterval};
use crate::kernel::{
    format_rational, interval_exp, interval_ln, interval_sqrt, rat, rat_int, PrecisionBudget,
    Rational, RationalInterval,
};
use crate::logsqrt::{LogSqrtExpression, RationalFunction, Term};
use crate::poly::UnivariatePolynomial;
use crate::report::Verdict;
use num_traits::{Signed, Zero};

fn poly(asc: &[i64]) -> UnivariatePolynomial {
    UnivariatePolynomial::from_integers(asc)
}

/// First logarithm argument: 24(x^2-3)/(x^2+3)^2, in (0, 1) for x > 3.
pub fn ln_arg_main() -> RationalFunction {
    RationalFunction::new(poly(&[-72, 0, 24]), poly(&[3, 0, 1]).pow(2)).expect("nonzero")
}

/// Second logarithm argument: -2(x^3-5x^2+15)/(x^2-3), positive on the
/// working interval.
pub fn ln_arg_cubic() -> RationalFunction {
    RationalFunction::new(poly(&[-30, 0, 10, -2]), poly(&[-3, 0, 1])).expect("nonzero")
}

/// The cubic x^3 - 5x^2 + 15 whose maximal real root bounds the
/// working interval.
pub fn cubic() -> UnivariatePolynomial {
    poly(&[15, 0, -5, 1])
}

/// The auxiliary function whose roots are the critical points of the
/// exponent function:
///   g(x) = x(x^2+3) ln[24(x^2-3)/(x^2+3)^2]
///        + 2(x^3-5x^2+15) ln[-2(x^3-5x^2+15)/(x^2-3)].
pub fn g_expression() -> LogSqrtExpression {
    LogSqrtExpression::new(
        RationalFunction::zero(),
        vec![
            Term {
                coefficient: RationalFunction::from_poly(poly(&[0, 3, 0, 1])),
                argument: ln_arg_main(),
            },
            Term {
                coefficient: RationalFunction::from_poly(poly(&[30, 0, -10, 2])),
                argument: ln_arg_cubic(),
            },
        ],
        vec![],
    )
}

/// g and its first four formal derivatives.  The cubic coefficients of
/// both logarithms die after four differentiations, so the last entry
/// is a pure rational function.
pub fn g_derivatives() -> [LogSqrtExpression; 5] {
    let g = g_expression();
    let g1 = g.differentiate();
    let g2 = g1.differentiate();
    let g3 = g2.differentiate();
    let g4 = g3.differentiate();
    [g, g1, g2, g3, g4]
}

/// The exponent function whose minimum over the working interval is the
/// best exponent: f(x) = ln[-2(x^3-5x^2+15)/(x^2-3)] / ln[24(x^2-3)/(x^2+3)^2].
pub fn f_expression() -> ExprNode {
    let a_num = ExprNode::int(24).mul(ExprNode::var().pow(2).sub(ExprNode::int(3)));
    let a_den = ExprNode::var().pow(2).add(ExprNode::int(3)).pow(2);
    let b_num = ExprNode::int(-2).mul(
        ExprNode::var()
            .pow(3)
            .sub(ExprNode::int(5).mul(ExprNode::var().pow(2)))
            .add(ExprNode::int(15)),
    );
    let b_den = ExprNode::var().pow(2).sub(ExprNode::int(3));
    b_num.div(b_den).ln().div(a_num.div(a_den).ln())
}

/// The coefficient function of the second family, in the variable t:
///   h(t) = [(1+t) sqrt(1-t^2) - 3 sqrt(3) t(1-t)]
///        / [t(1-t)(1 - (4t(1-t))^5)].
pub fn h_expression() -> ExprNode {
    let t = ExprNode::var;
    let one_minus_t = ExprNode::int(1).sub(t());
    let num = ExprNode::int(1)
        .add(t())
        .mul(ExprNode::int(1).sub(t().pow(2)).sqrt())
        .sub(ExprNode::int(27).sqrt().mul(t()).mul(one_minus_t.clone()));
    let q = ExprNode::int(4).mul(t()).mul(one_minus_t.clone());
    let den = t()
        .mul(one_minus_t)
        .mul(ExprNode::int(1).sub(q.pow(5)));
    num.div(den)
}

/// Left-hand side of the critical-point equation for h: the degree-12
/// polynomial part plus the radical 15360 sqrt(3(1-t^2)) (1-t)^5 t^6.
pub fn critical_equation_lhs() -> LogSqrtExpression {
    let a = poly(&[
        1, 1, 0, 0, 0, -6144, 19456, -10240, -25600, 30720, 1024, -14336, 5120,
    ]);
    let coeff = poly(&[1, -1]).pow(5).mul(&poly(&[0, 0, 0, 0, 0, 0, 15360]));
    let arg = poly(&[3, 0, -3]); // 3(1 - t^2)
    LogSqrtExpression::new(
        RationalFunction::from_poly(a),
        vec![],
        vec![Term {
            coefficient: RationalFunction::from_poly(coeff),
            argument: RationalFunction::from_poly(arg),
        }],
    )
}

/// A self-contained record of one certified sign.
#[derive(Debug, Clone)]
pub struct SignCertificate {
    pub subject: String,
    pub at: String,
    pub sign: Sign,
    pub bits_used: u32,
}

impl SignCertificate {
    fn describe(&self) -> String {
        format!("{} at {} is {} ({} bits)", self.subject, self.at, self.sign, self.bits_used)
    }
}

/// One level of the monotonicity cascade.
#[derive(Debug, Clone)]
pub struct ChainStep {
    /// Derivative order: 3 for the third derivative down to 0 for g.
    pub level: u32,
    pub description: String,
    pub endpoint_certificates: Vec<SignCertificate>,
    /// Refined interval around the unique root at this level.
    pub root: IsolatingInterval,
}

/// The complete cascade: working-interval bound, per-level steps, and
/// the final critical point x1.
#[derive(Debug, Clone)]
pub struct MonotoneChainCertificate {
    pub x0: IsolatingInterval,
    pub steps: Vec<ChainStep>,
    pub x1: IsolatingInterval,
}

fn certificate(
    e: &LogSqrtExpression,
    subject: &str,
    at: &Rational,
    prec: &PrecisionBudget,
) -> Result<SignCertificate> {
    let (sign, bits_used) = e.certify_sign(at, prec)?;
    Ok(SignCertificate {
        subject: subject.to_string(),
        at: format_rational(at),
        sign,
        bits_used,
    })
}

fn expect_sign(cert: &SignCertificate, want: Sign) -> Result<()> {
    if cert.sign == want {
        return Ok(());
    }
    if cert.sign == Sign::Indeterminate {
        return Err(Error::PrecisionExhausted {
            bits: cert.bits_used,
            context: format!("certifying {}", cert.describe()),
        });
    }
    Err(Error::CertificationFailed(format!(
        "expected {} to be {want}, got {}",
        cert.subject, cert.describe()
    )))
}

/// Bisects for the unique zero of `e` in `[lo, hi]` down to `width`,
/// certifying a sign at every probe.  `lo` must certify `lo_sign` and
/// `hi` the opposite; `e` must be known (from the cascade) to cross
/// zero exactly once in the interval.
fn bisect_transcendental(
    e: &LogSqrtExpression,
    subject: &str,
    lo: &Rational,
    hi: &Rational,
    lo_sign: Sign,
    width: &Rational,
    prec: &PrecisionBudget,
) -> Result<IsolatingInterval> {
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / rat_int(2);
        let cert = certificate(e, subject, &mid, prec)?;
        match cert.sign {
            s if s == lo_sign => lo = mid,
            Sign::Indeterminate => {
                return Err(Error::PrecisionExhausted {
                    bits: cert.bits_used,
                    context: format!("bisecting {subject} at {}", cert.at),
                })
            }
            Sign::Zero => {
                // exact transcendental zero cannot certify structurally
                // at a generic rational point; treat as a failure
                return Err(Error::CertificationFailed(format!(
                    "unexpected exact zero of {subject} at {}",
                    cert.at
                )));
            }
            _ => hi = mid,
        }
    }
    Ok(IsolatingInterval { lo, hi })
}

/// Runs the full monotonicity cascade and refines every root.
///
/// Order of certification:
/// 1. p has no real roots and p(0) > 0, so p > 0 everywhere.
/// 2. x0 = maximal root of the cubic, refined; the cubic is negative on
///    the whole working interval (3, x0).
/// 3. Hence the fourth derivative 4x p(x) / [(cubic)^3 (x^2+3)^3 (x^2-3)^3]
///    is negative there, so the third derivative strictly decreases.
/// 4. Third derivative: exactly 3 at x = 3, negative at 4 => unique
///    root x4; each lower level is unimodal with known peak and
///    certified endpoint signs => unique roots x3, x2, x1.
pub fn certify_monotone_chain_theorem1(
    data: &DataSet,
    prec: &PrecisionBudget,
    root_width: &Rational,
) -> Result<MonotoneChainCertificate> {
    let three = rat_int(3);

    // 1. p > 0 on all of R
    let rc = count_roots(&data.p)?;
    if rc.distinct_real != 0 || !data.p.eval(&rat_int(0)).is_positive() {
        return Err(Error::CertificationFailed(format!(
            "p must be positive definite; distinct real roots = {}",
            rc.distinct_real
        )));
    }

    // 2. x0 and the sign of the cubic on (3, x0)
    let cub = data.cubic_x0.clone();
    let roots = isolate_real_roots(&cub, None)?;
    let x0_iv = roots
        .last()
        .ok_or_else(|| Error::CertificationFailed("cubic has no real roots".into()))?;
    let x0 = refine_root(&cub, x0_iv, &rat(1, 1_000_000_000))?;
    if x0.lo <= three {
        return Err(Error::CertificationFailed(
            "maximal cubic root not right of 3".into(),
        ));
    }
    if count_roots_in(&cub, &three, &x0.lo)? != 0 || !cub.eval(&three).is_negative() {
        return Err(Error::CertificationFailed(
            "cubic must be negative on the working interval".into(),
        ));
    }

    let probe_offset = data.param("probe_offset")?;
    let probe = &x0.lo - &probe_offset;

    let [g, g1, g2, g3, g4] = g_derivatives();

    // 3. fourth derivative negative: numerator 4x p(x) positive for
    // x > 0, denominator (cubic)^3 (x^2+3)^3 (x^2-3)^3 negative on
    // (3, x0) because exactly the cubic factor is negative there
    if !g4.is_pure_rational() {
        return Err(Error::CertificationFailed(
            "fourth derivative must be purely rational".into(),
        ));
    }
    let expected_num = poly(&[0, 4]).mul(&data.p);
    if g4.rational_part.numerator() != &expected_num.scale(
        &(g4.rational_part.numerator().leading().unwrap() / expected_num.leading().unwrap()),
    ) {
        return Err(Error::CertificationFailed(
            "fourth-derivative numerator does not match 4x * p(x)".into(),
        ));
    }

    let mut steps = Vec::new();

    // 4a. third derivative: exact 3 at x = 3, negative at 4
    let c3_at_3 = certificate(&g3, "g'''", &three, prec)?;
    expect_sign(&c3_at_3, Sign::Positive)?;
    let v3 = g3
        .eval_interval(&RationalInterval::point(three.clone()), prec)?;
    if v3 != RationalInterval::point(rat_int(3)) {
        return Err(Error::CertificationFailed(format!(
            "g''' at 3 must be exactly 3, got {v3}"
        )));
    }
    let c3_at_4 = certificate(&g3, "g'''", &rat_int(4), prec)?;
    expect_sign(&c3_at_4, Sign::Negative)?;
    let x4 = bisect_transcendental(&g3, "g'''", &three, &rat_int(4), Sign::Positive, root_width, prec)?;
    steps.push(ChainStep {
        level: 3,
        description: "strictly decreasing (negative fourth derivative); signs +3 at 3, - at 4"
            .into(),
        endpoint_certificates: vec![c3_at_3, c3_at_4],
        root: x4.clone(),
    });

    // 4b. each lower level is unimodal with peak at the previous root:
    // zero at 3, positive just after the peak, negative at the probe
    let mut peak = x4.clone();
    let levels: [(&LogSqrtExpression, u32, &str); 3] =
        [(&g2, 2, "g''"), (&g1, 1, "g'"), (&g, 0, "g")];
    for (e, level, name) in levels {
        let at_3 = certificate(e, name, &three, prec)?;
        expect_sign(&at_3, Sign::Zero)?;
        let at_peak = certificate(e, name, &peak.hi, prec)?;
        expect_sign(&at_peak, Sign::Positive)?;
        let at_probe = certificate(e, name, &probe, prec)?;
        expect_sign(&at_probe, Sign::Negative)?;
        let root = bisect_transcendental(
            e, name, &peak.hi, &probe, Sign::Positive, root_width, prec,
        )?;
        steps.push(ChainStep {
            level,
            description: format!(
                "increasing to the peak near {} then decreasing; exact 0 at 3",
                crate::kernel::decimal_string(&peak.midpoint(), 10)
            ),
            endpoint_certificates: vec![at_3, at_peak, at_probe],
            root: root.clone(),
        });
        peak = root;
    }

    let x1 = peak;
    Ok(MonotoneChainCertificate { x0, steps, x1 })
}

/// Tightens a root interval coming out of the cascade by further
/// certified bisection.  `lo_sign` is the (already certified) sign at
/// the interval's lower endpoint.
pub fn refine_transcendental_root(
    e: &LogSqrtExpression,
    subject: &str,
    iv: &IsolatingInterval,
    lo_sign: Sign,
    width: &Rational,
    prec: &PrecisionBudget,
) -> Result<IsolatingInterval> {
    bisect_transcendental(e, subject, &iv.lo, &iv.hi, lo_sign, width, prec)
}

/// The best exponent as a validated interval: the exponent function
/// evaluated over the refined x1 interval.
pub fn best_exponent_interval(
    x1: &IsolatingInterval,
    prec: &PrecisionBudget,
) -> Result<RationalInterval> {
    let f = f_expression();
    f.eval_interval(
        &RationalInterval::new(x1.lo.clone(), x1.hi.clone())?,
        prec,
    )
}

/// Certifies the power inequality
///   [24(x^2-3)/(x^2+3)^2]^lambda >= -2(x^3-5x^2+15)/(x^2-3)
/// for all x >= 3 and the given rational lambda, in four regimes:
/// exact identity at 3, monotone growth of
/// phi = lambda ln A - ln B just right of 3, adaptive interval
/// subdivision up to x0, and nonpositive right side past x0.
pub fn verify_power_inequality(
    data: &DataSet,
    lambda: &Rational,
    x0: &IsolatingInterval,
    subdivision_limit: u32,
    prec: &PrecisionBudget,
) -> Result<(Verdict, String)> {
    let three = rat_int(3);
    let a = ln_arg_main();
    let b = ln_arg_cubic();
    let mut notes = Vec::new();

    // x = 3: both sides exactly 1
    if a.eval(&three)? != rat_int(1) || b.eval(&three)? != rat_int(1) {
        return Ok((
            Verdict::Falsified,
            "identity at x = 3 failed".to_string(),
        ));
    }
    notes.push("x = 3: exact identity (both sides 1)".to_string());

    // phi' = lambda A'/A - B'/B is rational; strip its forced zero at
    // x = 3, isolate the remaining roots, and pick the gap (3, c) on
    // which phi' keeps one sign
    let lam = RationalFunction::from_poly(UnivariatePolynomial::constant(lambda.clone()));
    let phi_prime = lam
        .mul(&a.derivative().div(&a)?)
        .sub(&b.derivative().div(&b)?);
    let mut n = phi_prime.numerator().clone();
    while n.eval(&three).is_zero() {
        n = n.exact_div(&poly(&[-3, 1]))?;
    }
    let inner_roots = isolate_real_roots(&n, Some((three.clone(), x0.hi.clone())))?;
    let c = inner_roots
        .first()
        .map(|iv| iv.lo.clone())
        .unwrap_or_else(|| x0.lo.clone())
        .min(x0.lo.clone());
    if c <= three {
        return Ok((
            Verdict::Indeterminate,
            "no sign-constant gap right of 3 for phi'".to_string(),
        ));
    }
    let probe = (&three + &c) / rat_int(2);
    let d = phi_prime.eval(&probe)?;
    if !d.is_positive() {
        return Ok((
            Verdict::Falsified,
            format!(
                "phi' at {} is not positive; phi cannot grow from its zero at 3",
                format_rational(&probe)
            ),
        ));
    }
    notes.push(format!(
        "(3, {}]: phi(3) = 0 and phi' > 0 (no phi' roots in the gap, sign checked exactly)",
        format_rational(&c)
    ));

    // [c, x0.lo]: adaptive subdivision of phi = lambda ln A - ln B
    let phi_on = |iv: &RationalInterval| -> Result<RationalInterval> {
        let la = interval_ln(&a.eval_interval(iv)?, prec)?;
        let lb = interval_ln(&b.eval_interval(iv)?, prec)?;
        Ok(la.scale(lambda).sub(&lb))
    };
    let mut stack = vec![RationalInterval::new(c.clone(), x0.lo.clone())?];
    let mut used: u32 = 0;
    let mut pieces: u32 = 0;
    while let Some(iv) = stack.pop() {
        let v = phi_on(&iv)?;
        if v.lo().is_positive() || v.lo().is_zero() {
            pieces += 1;
            continue;
        }
        if v.hi().is_negative() {
            return Ok((
                Verdict::Falsified,
                format!("phi < 0 certified on {iv}"),
            ));
        }
        used += 1;
        if used > subdivision_limit {
            return Ok((
                Verdict::Indeterminate,
                format!("subdivision limit {subdivision_limit} reached at {iv}"),
            ));
        }
        let mid = iv.midpoint();
        stack.push(RationalInterval::new(iv.lo().clone(), mid.clone())?);
        stack.push(RationalInterval::new(mid, iv.hi().clone())?);
    }
    notes.push(format!(
        "[{}, {}]: phi >= 0 by interval subdivision ({pieces} pieces, {used} splits)",
        format_rational(&c),
        format_rational(&x0.lo)
    ));

    // [x0.lo, x0.hi]: direct comparison of A^lambda against B
    let bracket = RationalInterval::new(x0.lo.clone(), x0.hi.clone())?;
    let lhs = interval_exp(
        &interval_ln(&a.eval_interval(&bracket)?, prec)?.scale(lambda),
        prec,
    );
    let rhs = b.eval_interval(&bracket)?;
    if lhs.lo() <= rhs.hi() {
        return Ok((
            Verdict::Indeterminate,
            "direct comparison across the x0 bracket failed to separate".to_string(),
        ));
    }
    notes.push("across the x0 bracket: left side exceeds right side directly".to_string());

    // x >= x0.hi: the cubic is nonnegative so the right side is <= 0
    let cub = data.cubic_x0.clone();
    let bound = cub.cauchy_bound()? + rat_int(1);
    if !cub.eval(&x0.hi).is_positive() || count_roots_in(&cub, &x0.hi, &bound)? != 0 {
        return Ok((
            Verdict::Indeterminate,
            "could not certify the cubic nonnegative past x0".to_string(),
        ));
    }
    notes.push("x >= x0: right side nonpositive (cubic positive), left side positive".to_string());

    Ok((Verdict::Certified, notes.join("; ")))
}

/// Outcome of the t-side certification.
#[derive(Debug, Clone)]
pub struct Theorem2Certificate {
    pub t1: IsolatingInterval,
    pub t2: IsolatingInterval,
    /// Sign certificates for the critical equation at t1's endpoints
    /// (opposite signs) and over t2's interval (excluding zero).
    pub certificates: Vec<SignCertificate>,
    pub k0: RationalInterval,
    /// The refined root of p4 inside the window that k0 pins down.
    pub p4_root: IsolatingInterval,
}

/// Certifies the t-side chain: the two candidate roots of p2 in
/// (1/2, 1), rejection of the extraneous one, k0 = h(t1), and the
/// placement of k0 as the unique root of p4 in the window.
pub fn theorem2_certify(
    data: &DataSet,
    prec: &PrecisionBudget,
) -> Result<Theorem2Certificate> {
    let half = rat(1, 2);
    let one = rat_int(1);
    let window_lo = data.param("k_window_lo")?;
    let window_hi = data.param("k_window_hi")?;
    let t1_hi = data.param("t1_window_hi")?;

    // the two roots of p2 in (1/2, 1)
    let roots = isolate_real_roots(&data.p2, Some((half.clone(), one.clone())))?;
    if roots.len() != 2 {
        return Err(Error::CertificationFailed(format!(
            "expected 2 roots of p2 in (1/2, 1), found {}",
            roots.len()
        )));
    }
    let t1 = refine_root(&data.p2, &roots[0], &rat(1, 1_000_000_000_000))?;
    let t2 = refine_root(&data.p2, &roots[1], &rat(1, 10_000_000_000))?;
    if !(t1.lo > half && t1.hi < t1_hi) {
        return Err(Error::CertificationFailed(
            "first root of p2 not inside its declared window".into(),
        ));
    }

    // t2 is extraneous: the radical equation's left side stays away
    // from zero over t2's whole interval
    let eq = critical_equation_lhs();
    let over_t2 = eq.eval_interval(
        &RationalInterval::new(t2.lo.clone(), t2.hi.clone())?,
        prec,
    )?;
    if over_t2.contains_zero() {
        return Err(Error::CertificationFailed(
            "could not exclude zero of the critical equation over t2".into(),
        ));
    }
    let mut certificates = vec![SignCertificate {
        subject: "critical equation over t2".into(),
        at: format!("[{}, {}]", format_rational(&t2.lo), format_rational(&t2.hi)),
        sign: if over_t2.is_strictly_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        },
        bits_used: prec.working_bits,
    }];

    // t1 satisfies the radical equation: certified sign change across
    // its interval
    let at_lo = certificate(&eq, "critical equation", &t1.lo, prec)?;
    let at_hi = certificate(&eq, "critical equation", &t1.hi, prec)?;
    let crossing = matches!(
        (at_lo.sign, at_hi.sign),
        (Sign::Positive, Sign::Negative) | (Sign::Negative, Sign::Positive)
    );
    if !crossing {
        return Err(Error::CertificationFailed(format!(
            "no certified sign change of the critical equation across t1: {} / {}",
            at_lo.describe(),
            at_hi.describe()
        )));
    }
    certificates.push(at_lo);
    certificates.push(at_hi);

    // k0 = h over t1's interval
    let h = h_expression();
    let k0 = h.eval_interval(
        &RationalInterval::new(t1.lo.clone(), t1.hi.clone())?,
        prec,
    )?;
    if !(k0.lo() > &window_lo && k0.hi() < &window_hi) {
        return Err(Error::CertificationFailed(format!(
            "k0 interval {k0} is not inside the window ({}, {})",
            format_rational(&window_lo),
            format_rational(&window_hi)
        )));
    }

    // p5 has no root in the window; p4 exactly one, and k0 brackets it
    if count_roots_in(&data.p5, &window_lo, &window_hi)? != 0 {
        return Err(Error::CertificationFailed(
            "p5 unexpectedly has a root in the window".into(),
        ));
    }
    let p4_roots = isolate_real_roots(&data.p4, Some((window_lo.clone(), window_hi.clone())))?;
    if p4_roots.len() != 1 {
        return Err(Error::CertificationFailed(format!(
            "expected exactly one root of p4 in the window, found {}",
            p4_roots.len()
        )));
    }
    let p4_root = refine_root(&data.p4, &p4_roots[0], &rat(1, 10_000_000_000))?;
    let s_lo = data.p4.eval(k0.lo());
    let s_hi = data.p4.eval(k0.hi());
    if s_lo.is_zero() || s_hi.is_zero() || s_lo.is_positive() == s_hi.is_positive() {
        return Err(Error::CertificationFailed(
            "p4 does not change sign across the k0 interval".into(),
        ));
    }
    if p4_root.hi < *k0.lo() || *k0.hi() < p4_root.lo {
        return Err(Error::CertificationFailed(
            "k0 interval does not meet p4's isolated root".into(),
        ));
    }

    Ok(Theorem2Certificate {
        t1,
        t2,
        certificates,
        k0,
        p4_root,
    })
}

/// Semiperimeter, inradius and circumradius of the triangle with side
/// intervals a, b, c, by the standard formulas.  (Both inequality
/// families are stated with p the semiperimeter.)
pub fn triangle_quantities(
    a: &RationalInterval,
    b: &RationalInterval,
    c: &RationalInterval,
    prec: &PrecisionBudget,
) -> Result<(RationalInterval, RationalInterval, RationalInterval)> {
    let s = a.add(b).add(c).scale(&rat(1, 2));
    let area_sq = s
        .mul(&s.sub(a))
        .mul(&s.sub(b))
        .mul(&s.sub(c));
    let area = interval_sqrt(&area_sq, prec)?;
    let r = area.div(&s)?;
    let big_r = a.mul(b).mul(c).div(&area.scale(&rat_int(4)))?;
    Ok((s, r, big_r))
}

fn relative_equality(
    lhs: &RationalInterval,
    rhs: &RationalInterval,
    tol: &Rational,
) -> bool {
    let diff = lhs.sub(rhs);
    let mag = lhs.hi().abs().max(rhs.hi().abs());
    let bound = tol * mag;
    diff.lo().abs() <= bound && diff.hi().abs() <= bound
}

/// Equality case of the first family: the triangle
/// a:b:c = 2(x1^2-3) : (x1^2+3) : (x1^2+3) achieves
/// sqrt(3) p = 10r - r (2r/R)^lambda at lambda = f(x1), within `tol`
/// relative.
pub fn equality_case_theorem1(
    x1: &IsolatingInterval,
    lambda: &RationalInterval,
    prec: &PrecisionBudget,
    tol: &Rational,
) -> Result<bool> {
    let x = RationalInterval::new(x1.lo.clone(), x1.hi.clone())?;
    let x2 = x.pow_int(2)?;
    let three = RationalInterval::point(rat_int(3));
    let a = x2.sub(&three).scale(&rat_int(2));
    let b = x2.add(&three);
    let (p, r, big_r) = triangle_quantities(&a, &b, &b, prec)?;
    let lhs = interval_sqrt(&RationalInterval::point(rat_int(3)), prec)?.mul(&p);
    let ratio = r.scale(&rat_int(2)).div(&big_r)?;
    let power = interval_exp(&interval_ln(&ratio, prec)?.mul(lambda), prec);
    let rhs = r.scale(&rat_int(10)).sub(&r.mul(&power));
    Ok(relative_equality(&lhs, &rhs, tol))
}

/// Equality case of the second family: the triangle a:b:c = 2 t1 : 1 : 1
/// achieves p = 3 sqrt(3) r + k (1 - (2r/R)^5) r at k = k0, within
/// `tol` relative.
pub fn equality_case_theorem2(
    t1: &IsolatingInterval,
    k0: &RationalInterval,
    prec: &PrecisionBudget,
    tol: &Rational,
) -> Result<bool> {
    let t = RationalInterval::new(t1.lo.clone(), t1.hi.clone())?;
    let a = t.scale(&rat_int(2));
    let one = RationalInterval::point(rat_int(1));
    let (p, r, big_r) = triangle_quantities(&a, &one, &one, prec)?;
    let ratio_pow = r.scale(&rat_int(2)).div(&big_r)?.pow_int(5)?;
    let rhs = interval_sqrt(&RationalInterval::point(rat_int(27)), prec)?
        .mul(&r)
        .add(&k0.mul(&one.sub(&ratio_pow)).mul(&r));
    Ok(relative_equality(&p, &rhs, tol))
}
