//! Sylvester resultants, bivariate elimination by
//! evaluation-interpolation, factorization verification and the two
//! fixed radical-elimination identities of the best-constant analysis.
//!
//! The resultant of two integer polynomials is taken as the determinant
//! of the Sylvester matrix (computed fraction-free); the resultant of
//! two bivariate polynomials with respect to `t` is reconstructed
//! exactly from univariate resultants at integer `k` nodes by Newton
//! interpolation, with a spare node used as an independent check.

use crate::discrimination::bareiss_determinant;
use crate::error::{Error, Result};
use crate::kernel::{format_rational, parse_rational, rat_int, Rational};
use crate::poly::UnivariatePolynomial;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// The (n+m) x (n+m) Sylvester matrix of F (degree n) and G (degree m):
/// m shifted rows of F's descending coefficients followed by n shifted
/// rows of G's.  Its determinant is the resultant.
#[derive(Debug, Clone)]
pub struct SylvesterMatrix {
    pub entries: Vec<Vec<Rational>>,
}

impl SylvesterMatrix {
    pub fn new(f: &UnivariatePolynomial, g: &UnivariatePolynomial) -> Result<Self> {
        let n = f
            .degree()
            .ok_or_else(|| Error::InvalidInput("Sylvester matrix of zero polynomial".into()))?;
        let m = g
            .degree()
            .ok_or_else(|| Error::InvalidInput("Sylvester matrix of zero polynomial".into()))?;
        let size = n + m;
        let fd: Vec<Rational> = (0..=n).map(|i| f.coeff(n - i)).collect();
        let gd: Vec<Rational> = (0..=m).map(|i| g.coeff(m - i)).collect();
        let mut entries = vec![vec![Rational::zero(); size]; size];
        for r in 0..m {
            for (j, c) in fd.iter().enumerate() {
                entries[r][r + j] = c.clone();
            }
        }
        for r in 0..n {
            for (j, c) in gd.iter().enumerate() {
                entries[m + r][r + j] = c.clone();
            }
        }
        Ok(SylvesterMatrix { entries })
    }
}

/// Res(F, G) as the Sylvester determinant.  Zero iff F and G share a
/// complex root.  Rational inputs are cleared to integers first and the
/// scaling factors divided back out.
pub fn resultant_univariate(
    f: &UnivariatePolynomial,
    g: &UnivariatePolynomial,
) -> Result<Rational> {
    let n = f
        .degree()
        .ok_or_else(|| Error::InvalidInput("resultant of zero polynomial".into()))?;
    let m = g
        .degree()
        .ok_or_else(|| Error::InvalidInput("resultant of zero polynomial".into()))?;
    if n + m == 0 {
        return Ok(rat_int(1));
    }
    // f = ff * fi, g = fg * gi with fi, gi primitive integer;
    // Res(f, g) = ff^m * fg^n * Res(fi, gi)
    let (fi, ff) = f.primitive_integer();
    let (gi, fg) = g.primitive_integer();
    let to_int = |p: &UnivariatePolynomial, d: usize| -> Vec<BigInt> {
        let asc = p.integer_coeffs().expect("primitive integer form");
        (0..=d).map(|i| asc[d - i].clone()).collect()
    };
    let fd = to_int(&fi, n);
    let gd = to_int(&gi, m);
    let size = n + m;
    let mut mtx = vec![vec![BigInt::zero(); size]; size];
    for r in 0..m {
        for (j, c) in fd.iter().enumerate() {
            mtx[r][r + j] = c.clone();
        }
    }
    for r in 0..n {
        for (j, c) in gd.iter().enumerate() {
            mtx[m + r][r + j] = c.clone();
        }
    }
    let det = bareiss_determinant(mtx);
    Ok(Rational::from_integer(det) * ff.pow(m as i32) * fg.pow(n as i32))
}

/// Polynomial in `t` and `k`, stored as one polynomial in `k` per
/// `t`-exponent (ascending, trailing zero coefficients trimmed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePolynomial {
    coeffs_in_t: Vec<UnivariatePolynomial>,
}

impl BivariatePolynomial {
    pub fn new(mut coeffs_in_t: Vec<UnivariatePolynomial>) -> Self {
        while coeffs_in_t.last().is_some_and(|c| c.is_zero()) {
            coeffs_in_t.pop();
        }
        BivariatePolynomial { coeffs_in_t }
    }

    pub fn zero() -> Self {
        BivariatePolynomial { coeffs_in_t: vec![] }
    }

    /// Lifts a polynomial in `t` alone.
    pub fn from_univariate_t(p: &UnivariatePolynomial) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .map(|c| UnivariatePolynomial::constant(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs_in_t.is_empty()
    }

    pub fn coeffs_in_t(&self) -> &[UnivariatePolynomial] {
        &self.coeffs_in_t
    }

    pub fn degree_t(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs_in_t.len() - 1)
        }
    }

    pub fn degree_k(&self) -> Option<usize> {
        self.coeffs_in_t.iter().filter_map(|c| c.degree()).max()
    }

    /// The `k`-polynomial multiplying `t^e`.
    pub fn coeff_t(&self, e: usize) -> UnivariatePolynomial {
        self.coeffs_in_t
            .get(e)
            .cloned()
            .unwrap_or_else(UnivariatePolynomial::zero)
    }

    /// The exact coefficient of `t^te * k^ke`.
    pub fn coeff(&self, te: usize, ke: usize) -> Rational {
        self.coeff_t(te).coeff(ke)
    }

    /// Specializes `k` to a rational value, leaving a polynomial in `t`.
    pub fn eval_at_k(&self, k: &Rational) -> UnivariatePolynomial {
        UnivariatePolynomial::new(self.coeffs_in_t.iter().map(|c| c.eval(k)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs_in_t.iter().map(|p| p.scale(c)).collect())
    }

    /// Parses the text format: one term per line, "t_exp k_exp
    /// coefficient", blank lines and '#' comments ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut terms: Vec<(usize, usize, Rational)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse_exp = |s: Option<&str>| -> Result<usize> {
                s.and_then(|v| v.parse().ok()).ok_or(Error::Parse {
                    line: idx + 1,
                    message: "expected \"t_exp k_exp coefficient\"".into(),
                })
            };
            let te = parse_exp(it.next())?;
            let ke = parse_exp(it.next())?;
            let c = it.next().ok_or(Error::Parse {
                line: idx + 1,
                message: "missing coefficient".into(),
            })?;
            if it.next().is_some() {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: "trailing tokens".into(),
                });
            }
            let c = parse_rational(c).map_err(|e| Error::Parse {
                line: idx + 1,
                message: e.to_string(),
            })?;
            terms.push((te, ke, c));
        }
        let dt = terms.iter().map(|(te, _, _)| *te).max().unwrap_or(0);
        let mut coeffs = vec![Vec::<Rational>::new(); dt + 1];
        for (te, ke, c) in terms {
            let slot = &mut coeffs[te];
            if slot.len() <= ke {
                slot.resize(ke + 1, Rational::zero());
            }
            slot[ke] += c;
        }
        Ok(Self::new(
            coeffs.into_iter().map(UnivariatePolynomial::new).collect(),
        ))
    }

    /// Renders in the same line-per-term format, ascending in t then k.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (te, c) in self.coeffs_in_t.iter().enumerate() {
            for (ke, v) in c.coeffs().iter().enumerate() {
                if !v.is_zero() {
                    out.push_str(&format!("{te} {ke} {}\n", format_rational(v)));
                }
            }
        }
        out
    }
}

/// Exact Newton interpolation through `(x_i, y_i)` with distinct nodes.
fn newton_interpolate(xs: &[Rational], ys: &[Rational]) -> UnivariatePolynomial {
    let n = xs.len();
    // divided differences in place
    let mut dd: Vec<Rational> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    // Horner-style accumulation of the Newton form
    let mut acc = UnivariatePolynomial::zero();
    for i in (0..n).rev() {
        let lin = UnivariatePolynomial::new(vec![-xs[i].clone(), rat_int(1)]);
        acc = acc
            .mul(&lin)
            .add(&UnivariatePolynomial::constant(dd[i].clone()));
    }
    acc
}

/// Res_t(P, Q) as a polynomial in `k`, by exact evaluation-interpolation
/// at integer `k` nodes.  Nodes where either leading `t`-coefficient
/// vanishes are skipped (the specialized determinant would drop rows);
/// one extra valid node cross-checks the interpolant.
pub fn resultant_in_t(
    p: &BivariatePolynomial,
    q: &BivariatePolynomial,
) -> Result<UnivariatePolynomial> {
    let (dtp, dtq) = match (p.degree_t(), q.degree_t()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::InvalidInput("resultant of zero polynomial".into())),
    };
    let dkp = p.degree_k().unwrap_or(0);
    let dkq = q.degree_k().unwrap_or(0);
    let bound = dtq * dkp + dtp * dkq;
    let lead_p = p.coeff_t(dtp);
    let lead_q = q.coeff_t(dtq);
    let mut xs: Vec<Rational> = Vec::with_capacity(bound + 2);
    let mut ys: Vec<Rational> = Vec::with_capacity(bound + 2);
    let mut node: i64 = 0;
    let mut next_node = || {
        // 0, 1, -1, 2, -2, ...
        let v = node;
        node = if node > 0 { -node } else { -node + 1 };
        v
    };
    let limit = 4 * (bound as i64 + 2) + 16;
    while xs.len() < bound + 2 {
        let kv = rat_int(next_node());
        if kv.numer().abs() > BigInt::from(limit) {
            return Err(Error::InvalidInput(
                "not enough valid interpolation nodes".into(),
            ));
        }
        if lead_p.eval(&kv).is_zero() || lead_q.eval(&kv).is_zero() {
            continue;
        }
        let r = resultant_univariate(&p.eval_at_k(&kv), &q.eval_at_k(&kv))?;
        xs.push(kv);
        ys.push(r);
    }
    // reserve the last node as an independent consistency check
    let (cx, cy) = (xs.pop().unwrap(), ys.pop().unwrap());
    let interp = newton_interpolate(&xs, &ys);
    if interp.eval(&cx) != cy {
        return Err(Error::CertificationFailed(format!(
            "interpolated resultant disagrees with direct evaluation at k = {}",
            format_rational(&cx)
        )));
    }
    Ok(interp)
}

/// True iff `r = constant * factors[0] * factors[1] * ...` exactly,
/// established by a chain of exact divisions.
pub fn verify_factorization(
    r: &UnivariatePolynomial,
    factors: &[UnivariatePolynomial],
    constant: &Rational,
) -> bool {
    let mut quo = r.clone();
    for f in factors {
        match quo.exact_div(f) {
            Ok(q) => quo = q,
            Err(_) => return false,
        }
    }
    quo == UnivariatePolynomial::constant(constant.clone())
}

fn t_poly(asc: &[i64]) -> UnivariatePolynomial {
    UnivariatePolynomial::from_integers(asc)
}

/// The raw eliminant of the system
///   (1+t) u - v - D(t) k = 0,  u^2 = 1 - t^2,  v^2 = 27 t^2 (1-t)^2,
/// with D(t) = t(1-t)(1 - (4t(1-t))^5), obtained by two squarings:
///   ((1+t)^2(1-t^2) - 27t^2(1-t)^2 - D^2 k^2)^2 - 108 t^2 (1-t)^2 D^2 k^2.
/// Even powers of k only: c0(t) + c2(t) k^2 + c4(t) k^4.
pub fn derive_eliminant_raw() -> BivariatePolynomial {
    let t = UnivariatePolynomial::x();
    let one = UnivariatePolynomial::one();
    let q = t.scale(&rat_int(4)).mul(&one.sub(&t)); // 4t(1-t)
    let d = t.mul(&one.sub(&t)).mul(&one.sub(&q.pow(5)));
    let p_part = t_poly(&[1, 1])
        .pow(2)
        .mul(&t_poly(&[1, 0, -1]))
        .sub(&t_poly(&[0, 0, 27]).mul(&t_poly(&[1, -1]).pow(2)));
    let d2 = d.mul(&d);
    let c0 = p_part.mul(&p_part);
    let c2 = p_part
        .scale(&rat_int(-2))
        .mul(&d2)
        .sub(&t_poly(&[0, 0, 108]).mul(&t_poly(&[1, -1]).pow(2)).mul(&d2));
    let c4 = d2.mul(&d2);
    let dt = [&c0, &c2, &c4]
        .iter()
        .filter_map(|p| p.degree())
        .max()
        .unwrap();
    let mut coeffs = Vec::with_capacity(dt + 1);
    for e in 0..=dt {
        coeffs.push(UnivariatePolynomial::new(vec![
            c0.coeff(e),
            Rational::zero(),
            c2.coeff(e),
            Rational::zero(),
            c4.coeff(e),
        ]));
    }
    BivariatePolynomial::new(coeffs)
}

/// Eliminates the radicals from the system above and strips the
/// extraneous content introduced by the squarings: the gcd in `t` of the
/// three `k`-coefficients is divided out and the result scaled so its
/// constant term is 1.  The output is the canonical eliminant.
pub fn derive_eliminant() -> Result<BivariatePolynomial> {
    let raw = derive_eliminant_raw();
    let dt = raw.degree_t().unwrap();
    // reassemble the three k-coefficients as polynomials in t
    let c_of_k = |ke: usize| {
        UnivariatePolynomial::new((0..=dt).map(|te| raw.coeff(te, ke)).collect())
    };
    let (c0, c2, c4) = (c_of_k(0), c_of_k(2), c_of_k(4));
    let content = c0.gcd(&c2).gcd(&c4);
    let (r0, r2, r4) = (
        c0.exact_div(&content)?,
        c2.exact_div(&content)?,
        c4.exact_div(&content)?,
    );
    let norm = r0.coeff(0);
    if norm.is_zero() {
        return Err(Error::CertificationFailed(
            "eliminant has zero constant term; normalization impossible".into(),
        ));
    }
    let s = norm.recip();
    let (r0, r2, r4) = (r0.scale(&s), r2.scale(&s), r4.scale(&s));
    let ndt = [&r0, &r2, &r4].iter().filter_map(|p| p.degree()).max().unwrap();
    let mut coeffs = Vec::with_capacity(ndt + 1);
    for e in 0..=ndt {
        coeffs.push(UnivariatePolynomial::new(vec![
            r0.coeff(e),
            Rational::zero(),
            r2.coeff(e),
            Rational::zero(),
            r4.coeff(e),
        ]));
    }
    Ok(BivariatePolynomial::new(coeffs))
}

/// Verifies the exact identity that rationalizes the degree-12 radical
/// equation of the best-constant derivation:
///   A(t)^2 - 3 * 15360^2 * (1 - t^2) (1 - t)^10 t^12
///     = p2(t) * (t + 1) * (2t - 1)^3,
/// where A is the polynomial part of the original equation.  `p2` is the
/// caller's degree-24 polynomial; a mismatch falsifies the identity.
pub fn radical_identity_holds(p2: &UnivariatePolynomial) -> bool {
    let a = UnivariatePolynomial::from_integers(&[
        1, 1, 0, 0, 0, -6144, 19456, -10240, -25600, 30720, 1024, -14336, 5120,
    ]);
    let t = UnivariatePolynomial::x();
    let one = UnivariatePolynomial::one();
    let radical_sq = one
        .sub(&t.mul(&t))
        .mul(&one.sub(&t).pow(10))
        .mul(&t.pow(12))
        .scale(&rat_int(3 * 15360 * 15360));
    let lhs = a.mul(&a).sub(&radical_sq);
    let rhs = p2
        .mul(&t_poly(&[1, 1]))
        .mul(&t_poly(&[-1, 2]).pow(3));
    lhs == rhs
}
