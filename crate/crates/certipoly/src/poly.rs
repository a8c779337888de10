//! Dense exact univariate polynomial arithmetic over the rationals,
//! including subresultant polynomial remainder sequences.
//!
//! Coefficients are stored ascending by exponent; the zero polynomial is
//! the empty coefficient vector.  All arithmetic is exact; interval
//! evaluation rounds outward through the kernel's interval operations.

use crate::error::{Error, Result};
use crate::kernel::{rat_int, Rational, RationalInterval};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariatePolynomial {
    coeffs: Vec<Rational>,
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "x")?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl UnivariatePolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivariatePolynomial { coeffs }
    }

    pub fn zero() -> Self {
        UnivariatePolynomial { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(rat_int(1))
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::new(vec![BigRational::zero(), rat_int(1)])
    }

    /// c * x^e.
    pub fn monomial(c: Rational, e: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = c;
        Self::new(coeffs)
    }

    pub fn from_integers(ascending: &[i64]) -> Self {
        Self::new(ascending.iter().map(|&v| rat_int(v)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, e: usize) -> Rational {
        self.coeffs.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UnivariatePolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder of exact rational polynomial division.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::InvalidInput("division by zero polynomial".into()))?;
        let dlead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quo = vec![
            BigRational::zero();
            self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1
        ];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() / &dlead;
            let shift = rd - dd;
            quo[shift] = factor.clone();
            let sub = divisor.mul(&Self::monomial(factor, shift));
            rem = rem.sub(&sub);
        }
        Ok((Self::new(quo), rem))
    }

    /// Exact division; a nonzero remainder is a divisibility failure,
    /// which callers use to falsify claimed factorizations.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::DivisibilityFailure(format!(
                "remainder {r} is nonzero"
            )));
        }
        Ok(q)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect(),
        )
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of the value at an exact rational point: -1, 0 or +1.
    /// Integer polynomials are evaluated by an all-integer homogeneous
    /// Horner scheme (no rational normalization), which is much faster
    /// on long coefficient chains.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        if let Some(ints) = self.integer_coeffs() {
            if ints.is_empty() {
                return 0;
            }
            // sign(sum c_i n^i d^(deg-i)) for x = n/d, d > 0
            let n = x.numer();
            let d = x.denom();
            let mut acc = ints.last().unwrap().clone();
            let mut dpow = BigInt::one();
            for c in ints.iter().rev().skip(1) {
                dpow *= d;
                acc = acc * n + c * &dpow;
            }
            return match acc.sign() {
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::NoSign => 0,
                num_bigint::Sign::Plus => 1,
            };
        }
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Horner evaluation over an interval; containment of the exact
    /// image follows from the outward rounding of each interval step.
    pub fn eval_interval(&self, x: &RationalInterval) -> RationalInterval {
        let mut acc = RationalInterval::point(BigRational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&RationalInterval::point(c.clone()));
        }
        acc
    }

    /// Substitute `x -> other`, i.e. polynomial composition.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(other).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Clears denominators and divides by the integer content; the result
    /// has coprime integer coefficients and a positive leading one.
    pub fn primitive_integer(&self) -> (Self, Rational) {
        if self.is_zero() {
            return (Self::zero(), rat_int(1));
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let mut content = BigInt::zero();
        for v in &scaled {
            content = content.gcd(v);
        }
        if scaled.last().unwrap().is_negative() {
            content = -content;
        }
        let prim = Self::new(
            scaled
                .iter()
                .map(|v| BigRational::from_integer(v / &content))
                .collect(),
        );
        // self = (content/den) * prim
        (prim, BigRational::new(content, den))
    }

    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.denom().is_one().then(|| c.numer().clone()))
            .collect()
    }

    /// Cauchy root bound: 1 + max |a_i| / |a_n|.
    pub fn cauchy_bound(&self) -> Result<Rational> {
        let lead = self
            .leading()
            .ok_or_else(|| Error::InvalidInput("root bound of zero polynomial".into()))?
            .abs();
        let mut max = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let a = c.abs();
            if a > max {
                max = a;
            }
        }
        Ok(rat_int(1) + max / lead)
    }

    /// gcd via the subresultant PRS, returned primitive with positive
    /// leading coefficient (gcd of anything with 0 is the other input).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_integer().0;
        }
        if other.is_zero() {
            return self.primitive_integer().0;
        }
        let (f, g) = if self.degree() >= other.degree() {
            (self, other)
        } else {
            (other, self)
        };
        let seq = subresultant_prs(f, g).expect("nonzero inputs");
        let last = seq.prs.last().expect("nonempty sequence");
        last.primitive_integer().0
    }

    /// f / gcd(f, f'), primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidInput("squarefree part of zero".into()));
        }
        if self.degree() == Some(0) {
            return Ok(Self::one());
        }
        let g = self.gcd(&self.derivative());
        let q = self.exact_div(&g)?;
        Ok(q.primitive_integer().0)
    }
}

/// Pseudo-remainder of `f` by `g` with the positive multiplier
/// `|lc(g)|^(deg f - deg g + 1)`, so sign information survives.
pub fn pseudo_rem_abs(f: &UnivariatePolynomial, g: &UnivariatePolynomial) -> UnivariatePolynomial {
    let df = f.degree().expect("nonzero dividend");
    let dg = g.degree().expect("nonzero divisor");
    debug_assert!(df >= dg);
    let delta = (df - dg + 1) as u32;
    let mult = g.leading().unwrap().abs().pow(delta as i32);
    let (_, r) = f.scale(&mult).div_rem(g).expect("divisor nonzero");
    r
}

/// A subresultant polynomial remainder sequence.
#[derive(Debug, Clone)]
pub struct SubresultantSequence {
    pub prs: Vec<UnivariatePolynomial>,
    pub principal_coefficients: Vec<Rational>,
}

/// Subresultant PRS of `f` and `g` (deg f >= deg g >= 0), after
/// clearing both inputs to primitive integer form.  The classic
/// Collins/Brown recurrence keeps coefficient growth polynomial while
/// staying exactly proportional to the true subresultants.
pub fn subresultant_prs(
    f: &UnivariatePolynomial,
    g: &UnivariatePolynomial,
) -> Result<SubresultantSequence> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::InvalidInput("subresultant PRS of zero input".into()));
    }
    if f.degree() < g.degree() {
        return Err(Error::InvalidInput(
            "subresultant PRS requires deg f >= deg g".into(),
        ));
    }
    let mut prs = vec![f.primitive_integer().0, g.primitive_integer().0];
    let mut psi = rat_int(-1);
    let mut prev_delta: i32 = 0;
    let mut first = true;
    loop {
        let a = &prs[prs.len() - 2];
        let b = &prs[prs.len() - 1];
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = (da - db) as i32;
        let beta = if first {
            if delta % 2 == 0 {
                rat_int(-1)
            } else {
                rat_int(1)
            }
        } else {
            psi = (-a.leading().unwrap()).pow(prev_delta) * psi.pow(1 - prev_delta);
            -(a.leading().unwrap() * psi.pow(delta))
        };
        // pseudo-remainder with multiplier lc(b)^(delta+1)
        let mult = b.leading().unwrap().pow(delta + 1);
        let (_, mut r) = a.scale(&mult).div_rem(b)?;
        if r.is_zero() {
            break;
        }
        r = r.scale(&beta.recip());
        prev_delta = delta;
        first = false;
        let constant = r.degree() == Some(0);
        prs.push(r);
        if constant {
            break;
        }
    }
    let principal_coefficients = prs
        .iter()
        .map(|p| p.leading().cloned().unwrap_or_else(BigRational::zero))
        .collect();
    Ok(SubresultantSequence {
        prs,
        principal_coefficients,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    fn p(asc: &[i64]) -> UnivariatePolynomial {
        UnivariatePolynomial::from_integers(asc)
    }

    #[test]
    fn mul_and_exact_div() {
        let xm1 = p(&[-1, 1]);
        let xp1 = p(&[1, 1]);
        assert_eq!(xm1.mul(&xp1), p(&[-1, 0, 1]));
        assert_eq!(p(&[-1, 0, 1]).exact_div(&xm1).unwrap(), xp1);
        assert!(p(&[1, 0, 1]).exact_div(&xm1).is_err());
    }

    #[test]
    fn derivative_examples() {
        // x^3 - 5x^2 + 15
        assert_eq!(p(&[15, 0, -5, 1]).derivative(), p(&[0, -10, 3]));
        assert_eq!(p(&[7]).derivative(), UnivariatePolynomial::zero());
    }

    #[test]
    fn eval_horner() {
        let f = p(&[15, 0, -5, 1]);
        assert_eq!(f.eval(&rat_int(3)), rat_int(-3));
        assert_eq!(f.eval(&rat(1, 2)), rat(111, 8));
    }

    #[test]
    fn eval_interval_contains_point_values() {
        let f = p(&[1, -3, 0, 2]);
        let i = RationalInterval::new(rat(-1, 2), rat(3, 2)).unwrap();
        let img = f.eval_interval(&i);
        for num in -4..=12 {
            let x = rat(num, 8);
            if i.contains(&x) {
                assert!(img.contains(&f.eval(&x)));
            }
        }
    }

    #[test]
    fn primitive_integer_normalization() {
        let f = UnivariatePolynomial::new(vec![rat(2, 3), rat(-4, 3)]);
        let (prim, factor) = f.primitive_integer();
        assert_eq!(prim, p(&[-1, 2]));
        assert_eq!(f, prim.scale(&factor));
        assert!(prim.leading().unwrap().is_positive());
    }

    #[test]
    fn subresultant_coprime_ends_constant() {
        let f = p(&[-1, 0, 1]);
        let g = p(&[0, 2]);
        let seq = subresultant_prs(&f, &g).unwrap();
        let last = seq.prs.last().unwrap();
        assert_eq!(last.degree(), Some(0));
        assert!(!last.coeff(0).is_zero());
    }

    #[test]
    fn subresultant_double_root() {
        // (x-1)^2 (x+2), gcd with derivative is x-1
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        let seq = subresultant_prs(&f, &f.derivative()).unwrap();
        let last = seq.prs.last().unwrap().primitive_integer().0;
        assert_eq!(last, p(&[-1, 1]));
    }

    #[test]
    fn squarefree_part_examples() {
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        assert_eq!(
            f.squarefree_part().unwrap(),
            p(&[-1, 1]).mul(&p(&[2, 1]))
        );
        let g = p(&[-2, 0, 1]);
        assert_eq!(g.squarefree_part().unwrap(), g);
    }

    #[test]
    fn cauchy_bound_simple() {
        let f = p(&[15, 0, -5, 1]);
        assert_eq!(f.cauchy_bound().unwrap(), rat_int(16));
    }
}
