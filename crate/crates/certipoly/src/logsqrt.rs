//! Closed representation of expressions of the form
//! `rational(x) + sum c_i(x) ln(a_i(x)) + sum d_j(x) sqrt(b_j(x))`
//! with rational-function coefficients and arguments, closed under
//! formal differentiation, plus certified sign evaluation.
//!
//! The exact-zero path is structural only: a term contributes an exact
//! point interval when its `ln` argument is exactly 1, its `sqrt`
//! argument a perfect square, or its coefficient zero.  Everything else
//! is decided by adaptive-precision interval arithmetic, and a sign that
//! never certifies is reported indeterminate rather than guessed.

use crate::error::{Error, Result};
use crate::expr::Sign;
use crate::kernel::{
    interval_ln, interval_sqrt, PrecisionBudget, Rational, RationalInterval,
};
use crate::poly::UnivariatePolynomial;
use num_traits::{Signed, Zero};
use std::fmt;

/// A reduced ratio of polynomials; the denominator has positive leading
/// coefficient and shares no factor with the numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: UnivariatePolynomial,
    den: UnivariatePolynomial,
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UnivariatePolynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl RationalFunction {
    pub fn new(num: UnivariatePolynomial, den: UnivariatePolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num,
                den: UnivariatePolynomial::one(),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g)?;
        let mut den = den.exact_div(&g)?;
        if den.leading().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        // make the denominator monic so equal functions are equal values
        let lead = den.leading().unwrap().clone();
        num = num.scale(&lead.recip());
        den = den.scale(&lead.recip());
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: UnivariatePolynomial) -> Self {
        RationalFunction {
            num: p,
            den: UnivariatePolynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(UnivariatePolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(UnivariatePolynomial::one())
    }

    pub fn numerator(&self) -> &UnivariatePolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &UnivariatePolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::new(num, den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Quotient-rule derivative, reduced.
    pub fn derivative(&self) -> Self {
        let num = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        let den = self.den.mul(&self.den);
        Self::new(num, den).expect("nonzero denominator")
    }

    /// Exact value at a rational point; errors if the point is a pole.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Interval extension; errors if the denominator interval straddles
    /// zero.
    pub fn eval_interval(&self, x: &RationalInterval) -> Result<RationalInterval> {
        let d = self.den.eval_interval(x);
        if d.contains_zero() {
            return Err(Error::IntervalDivisionByZero(format!(
                ": denominator {} over {x}",
                self.den
            )));
        }
        self.num.eval_interval(x).div(&d)
    }
}

/// One transcendental term: `coefficient * fn(argument)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coefficient: RationalFunction,
    pub argument: RationalFunction,
}

/// `rational_part + sum log_terms + sum sqrt_terms`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogSqrtExpression {
    pub rational_part: RationalFunction,
    pub log_terms: Vec<Term>,
    pub sqrt_terms: Vec<Term>,
}

fn merge_terms(terms: Vec<Term>) -> Vec<Term> {
    let mut out: Vec<Term> = Vec::new();
    for t in terms {
        if t.coefficient.is_zero() {
            continue;
        }
        match out.iter_mut().find(|o| o.argument == t.argument) {
            Some(o) => o.coefficient = o.coefficient.add(&t.coefficient),
            None => out.push(t),
        }
    }
    out.retain(|t| !t.coefficient.is_zero());
    out
}

impl LogSqrtExpression {
    pub fn new(
        rational_part: RationalFunction,
        log_terms: Vec<Term>,
        sqrt_terms: Vec<Term>,
    ) -> Self {
        LogSqrtExpression {
            rational_part,
            log_terms: merge_terms(log_terms),
            sqrt_terms: merge_terms(sqrt_terms),
        }
    }

    pub fn from_rational(r: RationalFunction) -> Self {
        Self::new(r, vec![], vec![])
    }

    pub fn is_pure_rational(&self) -> bool {
        self.log_terms.is_empty() && self.sqrt_terms.is_empty()
    }

    /// Formal derivative, staying inside the representation:
    ///   (c ln a)'  = c' ln a + c a'/a
    ///   (c sqrt a)' = (c' + c a'/(2a)) sqrt a
    pub fn differentiate(&self) -> Self {
        let mut rational = self.rational_part.derivative();
        let mut logs = Vec::new();
        for t in &self.log_terms {
            logs.push(Term {
                coefficient: t.coefficient.derivative(),
                argument: t.argument.clone(),
            });
            let a_ratio = t.argument.derivative().div(&t.argument).expect("nonzero ln argument");
            rational = rational.add(&t.coefficient.mul(&a_ratio));
        }
        let mut sqrts = Vec::new();
        for t in &self.sqrt_terms {
            let a_ratio = t.argument.derivative().div(&t.argument).expect("nonzero sqrt argument");
            let half = RationalFunction::from_poly(UnivariatePolynomial::constant(
                crate::kernel::rat(1, 2),
            ));
            sqrts.push(Term {
                coefficient: t
                    .coefficient
                    .derivative()
                    .add(&t.coefficient.mul(&a_ratio).mul(&half)),
                argument: t.argument.clone(),
            });
        }
        Self::new(rational, logs, sqrts)
    }

    /// Validated interval evaluation.
    pub fn eval_interval(
        &self,
        x: &RationalInterval,
        prec: &PrecisionBudget,
    ) -> Result<RationalInterval> {
        let mut acc = self.rational_part.eval_interval(x)?;
        for t in &self.log_terms {
            let arg = t.argument.eval_interval(x)?;
            let l = interval_ln(&arg, prec)?;
            acc = acc.add(&t.coefficient.eval_interval(x)?.mul(&l));
        }
        for t in &self.sqrt_terms {
            let arg = t.argument.eval_interval(x)?;
            let s = interval_sqrt(&arg, prec)?;
            acc = acc.add(&t.coefficient.eval_interval(x)?.mul(&s));
        }
        Ok(acc)
    }

    /// Sign at a rational point with precision escalation; `Zero` only
    /// via structural cancellation (the evaluation interval is the exact
    /// point zero), `Indeterminate` once the budget is exhausted.
    pub fn certify_sign(&self, at: &Rational, prec: &PrecisionBudget) -> Result<(Sign, u32)> {
        let mut budget = *prec;
        let point = RationalInterval::point(at.clone());
        loop {
            let v = self.eval_interval(&point, &budget)?;
            if v.is_strictly_positive() {
                return Ok((Sign::Positive, budget.working_bits));
            }
            if v.is_strictly_negative() {
                return Ok((Sign::Negative, budget.working_bits));
            }
            if v.lo().is_zero() && v.hi().is_zero() {
                return Ok((Sign::Zero, budget.working_bits));
            }
            match budget.escalate() {
                Some(next) => budget = next,
                None => return Ok((Sign::Indeterminate, budget.working_bits)),
            }
        }
    }
}

impl fmt::Display for LogSqrtExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rational_part)?;
        for t in &self.log_terms {
            write!(f, " + [{}] * ln({})", t.coefficient, t.argument)?;
        }
        for t in &self.sqrt_terms {
            write!(f, " + [{}] * sqrt({})", t.coefficient, t.argument)?;
        }
        Ok(())
    }
}
