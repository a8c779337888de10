//! Expression trees over one variable with `ln` and `sqrt`, validated
//! interval evaluation, and a parenthesized prefix text form for report
//! embedding and replay.
//!
//! Evaluation is the interval extension of each node: the result always
//! contains the exact image of the input interval.  Domain violations
//! (`ln` touching zero, `sqrt` of a negative, division by an interval
//! containing zero) are reported together with the offending subtree.

use crate::error::{Error, Result};
use crate::kernel::{
    format_rational, interval_ln, interval_sqrt, parse_rational, rat_int, PrecisionBudget,
    Rational, RationalInterval,
};
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprNode {
    Const(Rational),
    Var,
    Add(Box<ExprNode>, Box<ExprNode>),
    Sub(Box<ExprNode>, Box<ExprNode>),
    Mul(Box<ExprNode>, Box<ExprNode>),
    Div(Box<ExprNode>, Box<ExprNode>),
    IntPow(Box<ExprNode>, i64),
    Sqrt(Box<ExprNode>),
    Ln(Box<ExprNode>),
}

/// Certified sign of a value, with "don't know" distinct from error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
    Zero,
    Indeterminate,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Sign::Positive => "positive",
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Indeterminate => "indeterminate",
        };
        write!(f, "{s}")
    }
}

impl ExprNode {
    pub fn constant(v: Rational) -> Self {
        ExprNode::Const(v)
    }

    pub fn int(v: i64) -> Self {
        ExprNode::Const(rat_int(v))
    }

    pub fn var() -> Self {
        ExprNode::Var
    }

    pub fn add(self, other: Self) -> Self {
        ExprNode::Add(Box::new(self), Box::new(other))
    }

    pub fn sub(self, other: Self) -> Self {
        ExprNode::Sub(Box::new(self), Box::new(other))
    }

    pub fn mul(self, other: Self) -> Self {
        ExprNode::Mul(Box::new(self), Box::new(other))
    }

    pub fn div(self, other: Self) -> Self {
        ExprNode::Div(Box::new(self), Box::new(other))
    }

    pub fn pow(self, e: i64) -> Self {
        ExprNode::IntPow(Box::new(self), e)
    }

    pub fn sqrt(self) -> Self {
        ExprNode::Sqrt(Box::new(self))
    }

    pub fn ln(self) -> Self {
        ExprNode::Ln(Box::new(self))
    }

    /// Validated interval evaluation; the result contains the exact
    /// image of `at`.  Domain errors name the offending subtree.
    pub fn eval_interval(
        &self,
        at: &RationalInterval,
        prec: &PrecisionBudget,
    ) -> Result<RationalInterval> {
        match self {
            ExprNode::Const(v) => Ok(RationalInterval::point(v.clone())),
            ExprNode::Var => Ok(at.clone()),
            ExprNode::Add(a, b) => Ok(a.eval_interval(at, prec)?.add(&b.eval_interval(at, prec)?)),
            ExprNode::Sub(a, b) => Ok(a.eval_interval(at, prec)?.sub(&b.eval_interval(at, prec)?)),
            ExprNode::Mul(a, b) => Ok(a.eval_interval(at, prec)?.mul(&b.eval_interval(at, prec)?)),
            ExprNode::Div(a, b) => {
                let den = b.eval_interval(at, prec)?;
                if den.contains_zero() {
                    return Err(Error::IntervalDivisionByZero(format!(
                        " in subtree {}",
                        self.render()
                    )));
                }
                a.eval_interval(at, prec)?.div(&den)
            }
            ExprNode::IntPow(a, e) => {
                let base = a.eval_interval(at, prec)?;
                if *e < 0 && base.contains_zero() {
                    return Err(Error::IntervalDivisionByZero(format!(
                        " in subtree {}",
                        self.render()
                    )));
                }
                base.pow_int(*e)
            }
            ExprNode::Sqrt(a) => {
                let arg = a.eval_interval(at, prec)?;
                interval_sqrt(&arg, prec).map_err(|_| {
                    Error::SqrtDomain(format!(
                        "{} in subtree {}",
                        format_rational(arg.lo()),
                        self.render()
                    ))
                })
            }
            ExprNode::Ln(a) => {
                let arg = a.eval_interval(at, prec)?;
                interval_ln(&arg, prec).map_err(|_| {
                    Error::LnDomain(format!(
                        "{} in subtree {}",
                        format_rational(arg.lo()),
                        self.render()
                    ))
                })
            }
        }
    }

    /// Sign of the expression at a rational point, escalating precision
    /// per the budget until the evaluation interval excludes zero.
    /// Exact zero is reported only when the interval is the point zero
    /// (structural cancellation, e.g. `ln` of exact 1); otherwise the
    /// outcome after the final budget is `Indeterminate`.
    pub fn certify_sign(&self, at: &Rational, prec: &PrecisionBudget) -> Result<(Sign, u32)> {
        let mut budget = *prec;
        loop {
            let v = self.eval_interval(&RationalInterval::point(at.clone()), &budget)?;
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

    /// Parenthesized prefix form, rationals as "num/den".
    pub fn render(&self) -> String {
        match self {
            ExprNode::Const(v) => format_rational(v),
            ExprNode::Var => "x".to_string(),
            ExprNode::Add(a, b) => format!("(+ {} {})", a.render(), b.render()),
            ExprNode::Sub(a, b) => format!("(- {} {})", a.render(), b.render()),
            ExprNode::Mul(a, b) => format!("(* {} {})", a.render(), b.render()),
            ExprNode::Div(a, b) => format!("(/ {} {})", a.render(), b.render()),
            ExprNode::IntPow(a, e) => format!("(pow {} {e})", a.render()),
            ExprNode::Sqrt(a) => format!("(sqrt {})", a.render()),
            ExprNode::Ln(a) => format!("(ln {})", a.render()),
        }
    }

    /// Parses the prefix form produced by [`ExprNode::render`].
    pub fn parse(text: &str) -> Result<Self> {
        let tokens = tokenize(text);
        let mut pos = 0;
        let node = parse_tokens(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::InvalidInput(format!(
                "trailing tokens after expression: {:?}",
                &tokens[pos..]
            )));
        }
        Ok(node)
    }
}

impl fmt::Display for ExprNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn tokenize(text: &str) -> Vec<String> {
    text.replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(str::to_string)
        .collect()
}

fn parse_tokens(tokens: &[String], pos: &mut usize) -> Result<ExprNode> {
    let bad = |msg: &str| Error::InvalidInput(format!("expression parse: {msg}"));
    let tok = tokens.get(*pos).ok_or_else(|| bad("unexpected end"))?;
    *pos += 1;
    if tok != "(" {
        if tok == "x" {
            return Ok(ExprNode::Var);
        }
        return parse_rational(tok).map(ExprNode::Const);
    }
    let op = tokens.get(*pos).ok_or_else(|| bad("missing operator"))?.clone();
    *pos += 1;
    let node = match op.as_str() {
        "+" | "-" | "*" | "/" => {
            let a = parse_tokens(tokens, pos)?;
            let b = parse_tokens(tokens, pos)?;
            match op.as_str() {
                "+" => a.add(b),
                "-" => a.sub(b),
                "*" => a.mul(b),
                _ => a.div(b),
            }
        }
        "pow" => {
            let a = parse_tokens(tokens, pos)?;
            let e = tokens
                .get(*pos)
                .and_then(|t| t.parse::<i64>().ok())
                .ok_or_else(|| bad("pow needs an integer exponent"))?;
            *pos += 1;
            a.pow(e)
        }
        "sqrt" => parse_tokens(tokens, pos)?.sqrt(),
        "ln" => parse_tokens(tokens, pos)?.ln(),
        other => return Err(bad(&format!("unknown operator {other:?}"))),
    };
    match tokens.get(*pos) {
        Some(t) if t == ")" => {
            *pos += 1;
            Ok(node)
        }
        _ => Err(bad("missing closing parenthesis")),
    }
}
