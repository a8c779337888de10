//! Exact rational arithmetic and validated interval evaluation of
//! elementary functions (`ln`, `sqrt`, `exp`).
//!
//! Every interval operation satisfies the outward-rounding contract: the
//! returned interval contains the exact image of the input.  Endpoints
//! stay rational; precision is controlled by a [`PrecisionBudget`] that
//! bounds how far the certified series tails are pushed.  Floating point
//! never enters any code path here.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_int(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// Shorthand for `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the text format "num/den" or "num".  Accepts both ASCII '-'
/// and the typographic minus U+2212.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim().replace('\u{2212}', "-");
    let parse_int = |p: &str| -> Result<BigInt> {
        p.parse::<BigInt>()
            .map_err(|_| Error::InvalidInput(format!("bad integer {p:?}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(parse_int(n)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(&s)?)),
    }
}

/// Renders a rational in the canonical "num/den" (or "num") text format.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Exact rational arithmetic with the division-by-zero case surfaced as
/// an error instead of a panic.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// 2^e as an exact rational, for any sign of `e`.
pub fn pow2(e: i64) -> Rational {
    let two = BigInt::from(2);
    if e >= 0 {
        BigRational::from_integer(two.pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), two.pow((-e) as u32))
    }
}

/// Precision control for the certified series evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecisionBudget {
    pub working_bits: u32,
    pub max_bits: u32,
    pub growth_factor: u32,
}

impl Default for PrecisionBudget {
    fn default() -> Self {
        PrecisionBudget {
            working_bits: 128,
            max_bits: 16384,
            growth_factor: 2,
        }
    }
}

impl PrecisionBudget {
    pub fn new(working_bits: u32, max_bits: u32, growth_factor: u32) -> Result<Self> {
        if working_bits == 0 || working_bits > max_bits || growth_factor < 2 {
            return Err(Error::InvalidInput(format!(
                "bad precision budget {working_bits}/{max_bits}/{growth_factor}"
            )));
        }
        Ok(PrecisionBudget {
            working_bits,
            max_bits,
            growth_factor,
        })
    }

    /// Next budget in the escalation ladder, or `None` once the cap is hit.
    pub fn escalate(&self) -> Option<Self> {
        if self.working_bits >= self.max_bits {
            return None;
        }
        let next = self
            .working_bits
            .saturating_mul(self.growth_factor)
            .min(self.max_bits);
        Some(PrecisionBudget {
            working_bits: next,
            ..*self
        })
    }
}

/// A closed interval with rational endpoints, `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            format_rational(&self.lo),
            format_rational(&self.hi)
        )
    }
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInput(format!(
                "interval endpoints out of order: [{}, {}]",
                format_rational(&lo),
                format_rational(&hi)
            )));
        }
        Ok(RationalInterval { lo, hi })
    }

    pub fn point(v: Rational) -> Self {
        RationalInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn neg(&self) -> Self {
        RationalInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        RationalInterval { lo, hi }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_negative() {
            RationalInterval {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            RationalInterval {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.contains_zero() {
            return Err(Error::IntervalDivisionByZero(format!(": {self}")));
        }
        Ok(RationalInterval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    /// Integer power with exact case analysis around zero.
    pub fn pow_int(&self, e: i64) -> Result<Self> {
        if e == 0 {
            return Ok(RationalInterval::point(rat_int(1)));
        }
        if e < 0 {
            return self.recip()?.pow_int(-e);
        }
        let n = e as u32;
        let plo = self.lo.pow(n as i32);
        let phi = self.hi.pow(n as i32);
        if n % 2 == 1 {
            Ok(RationalInterval { lo: plo, hi: phi })
        } else if !self.contains_zero() {
            let (lo, hi) = if plo <= phi { (plo, phi) } else { (phi, plo) };
            Ok(RationalInterval { lo, hi })
        } else {
            Ok(RationalInterval {
                lo: BigRational::zero(),
                hi: plo.max(phi),
            })
        }
    }
}

fn bigint_bits(n: &BigInt) -> i64 {
    n.bits() as i64
}

/// Outward dyadic rounding to about `bits` significant bits: rounds
/// down when `up` is false, up when true.  Sign and magnitude are
/// preserved to relative error 2^-bits, so replacing an interval
/// endpoint with its outward rounding keeps any enclosure valid.
fn round_dyadic(q: &Rational, bits: u32, up: bool) -> Rational {
    let e = bits as i64 - (bigint_bits(q.numer()) - bigint_bits(q.denom()));
    let scaled = q * pow2(e);
    let n = if up {
        scaled.ceil().to_integer()
    } else {
        scaled.floor().to_integer()
    };
    BigRational::from_integer(n) * pow2(-e)
}

/// Rounds only when the exact representation is already much larger
/// than the working precision, so small/exact inputs (perfect squares,
/// ln 1, integer arguments) pass through untouched.
fn compress(q: &Rational, bits: u32, up: bool) -> Rational {
    let size = bigint_bits(q.numer()) + bigint_bits(q.denom());
    if size > 4 * bits as i64 + 64 {
        round_dyadic(q, 2 * bits + 8, up)
    } else {
        q.clone()
    }
}

/// Certified lower/upper bounds for `atanh(u)`, `|u| < 1/2`, with series
/// tail pushed below `2^-guard_bits`.
fn atanh_bounds(u: &Rational, guard_bits: u32) -> (Rational, Rational) {
    debug_assert!(u.abs() < rat(1, 2));
    if u.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    let u2 = u * u;
    let one_minus_u2 = rat_int(1) - &u2;
    let eps = pow2(-(guard_bits as i64));
    let mut term = u.clone(); // u^(2j+1)
    let mut sum = BigRational::zero();
    let mut j: i64 = 0;
    loop {
        sum += &term / rat_int(2 * j + 1);
        term *= &u2;
        j += 1;
        // |remainder| <= |u|^(2j+1) / ((2j+1)(1-u^2))
        let bound = term.abs() / (rat_int(2 * j + 1) * &one_minus_u2);
        if bound <= eps {
            return (&sum - &bound, sum + bound);
        }
    }
}

/// Certified interval for ln 2 at the requested precision.
pub fn ln2_interval(bits: u32) -> RationalInterval {
    // ln 2 = 2 atanh(1/3)
    let (lo, hi) = atanh_bounds(&rat(1, 3), bits + 4);
    RationalInterval {
        lo: lo * rat_int(2),
        hi: hi * rat_int(2),
    }
}

/// Certified bounds for `ln y` at a single positive rational point.
fn ln_point_bounds(y: &Rational, bits: u32) -> Result<(Rational, Rational)> {
    if !y.is_positive() {
        return Err(Error::LnDomain(format_rational(y)));
    }
    if y.is_one() {
        return Ok((BigRational::zero(), BigRational::zero()));
    }
    // reduce y = m * 2^e with m in [2/3, 4/3]
    let mut e = bigint_bits(y.numer()) - bigint_bits(y.denom());
    let mut m = y * pow2(-e);
    let lo_bound = rat(2, 3);
    let hi_bound = rat(4, 3);
    while m > hi_bound {
        e += 1;
        m = &m / rat_int(2);
    }
    while m < lo_bound {
        e -= 1;
        m = &m * rat_int(2);
    }
    // ln m = 2 atanh((m-1)/(m+1)), argument in [-1/5, 1/7]
    let u = (&m - rat_int(1)) / (&m + rat_int(1));
    let (alo, ahi) = atanh_bounds(&u, bits + 4);
    let series = RationalInterval {
        lo: alo * rat_int(2),
        hi: ahi * rat_int(2),
    };
    let total = if e == 0 {
        series
    } else {
        series.add(&ln2_interval(bits).scale(&rat_int(e)))
    };
    Ok((total.lo, total.hi))
}

/// Validated `ln` over an interval.  Requires `I.lo > 0`.
pub fn interval_ln(i: &RationalInterval, prec: &PrecisionBudget) -> Result<RationalInterval> {
    if !i.lo.is_positive() {
        return Err(Error::LnDomain(format_rational(&i.lo)));
    }
    let b = prec.working_bits;
    let (lo, _) = ln_point_bounds(&compress(&i.lo, b, false), b)?;
    let (_, hi) = ln_point_bounds(&compress(&i.hi, b, true), b)?;
    RationalInterval::new(lo, hi)
}

fn biguint_of(n: &BigInt) -> BigUint {
    n.magnitude().clone()
}

/// Certified bounds for `sqrt y` at a single nonnegative rational point.
/// Perfect-square rationals come back exact.
fn sqrt_point_bounds(y: &Rational, bits: u32) -> Result<(Rational, Rational)> {
    if y.is_negative() {
        return Err(Error::SqrtDomain(format_rational(y)));
    }
    if y.is_zero() {
        return Ok((BigRational::zero(), BigRational::zero()));
    }
    let n = biguint_of(y.numer());
    let d = biguint_of(y.denom());
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &sn * &sn == n && &sd * &sd == d {
        let exact = BigRational::new(BigInt::from(sn), BigInt::from(sd));
        return Ok((exact.clone(), exact));
    }
    // sqrt(n/d) = sqrt(n*d)/d; scale by 2^(2*bits) before the integer sqrt
    let scaled = (&n * &d) << (2 * bits as usize);
    let r = scaled.sqrt();
    let denom = BigInt::from(d) << (bits as usize);
    let lo = BigRational::new(BigInt::from(r.clone()), denom.clone());
    let hi = BigRational::new(BigInt::from(r + BigUint::one()), denom);
    Ok((lo, hi))
}

/// Validated `sqrt` over an interval.  Requires `I.lo >= 0`.
pub fn interval_sqrt(i: &RationalInterval, prec: &PrecisionBudget) -> Result<RationalInterval> {
    if i.lo.is_negative() {
        return Err(Error::SqrtDomain(format_rational(&i.lo)));
    }
    let b = prec.working_bits;
    let (lo, _) = sqrt_point_bounds(&compress(&i.lo, b, false), b)?;
    let (_, hi) = sqrt_point_bounds(&compress(&i.hi, b, true), b)?;
    RationalInterval::new(lo, hi)
}

/// Certified bounds for `exp y` at a single rational point.
fn exp_point_bounds(y: &Rational, bits: u32) -> (Rational, Rational) {
    if y.is_zero() {
        return (rat_int(1), rat_int(1));
    }
    if y.is_negative() {
        let (lo, hi) = exp_point_bounds(&-y, bits);
        return (hi.recip(), lo.recip());
    }
    // halve until the series argument is at most 1/2
    let mut s: u32 = 0;
    let mut arg = y.clone();
    let half = rat(1, 2);
    while arg > half {
        arg = &arg / rat_int(2);
        s += 1;
    }
    // extra guard bits absorb the relative-error doubling per squaring
    // and the magnitude of the final value
    let magnitude_bits = (y.to_integer().to_u32().unwrap_or(64)).saturating_mul(2) + 4;
    let guard = bits + 2 * s + 8 + magnitude_bits;
    let eps = pow2(-(guard as i64));
    let mut term = rat_int(1);
    let mut sum = BigRational::zero();
    let mut j: i64 = 0;
    loop {
        sum += &term;
        j += 1;
        term = &term * &arg / rat_int(j);
        // tail <= 2 * next term since arg <= 1/2
        let bound = &term * rat_int(2);
        if bound <= eps {
            let mut lo = sum.clone();
            let mut hi = sum + bound;
            for _ in 0..s {
                lo = &lo * &lo;
                hi = &hi * &hi;
            }
            return (lo, hi);
        }
    }
}

/// Validated `exp` over an interval.  Total on all rational inputs.
pub fn interval_exp(i: &RationalInterval, prec: &PrecisionBudget) -> RationalInterval {
    let b = prec.working_bits;
    let (lo, _) = exp_point_bounds(&compress(&i.lo, b, false), b);
    let (_, hi) = exp_point_bounds(&compress(&i.hi, b, true), b);
    RationalInterval { lo, hi }
}

/// Formats a rational to `sig` significant decimal digits (round half
/// away from zero), e.g. for side-by-side comparison with published
/// decimal expansions.
pub fn decimal_string(q: &Rational, sig: usize) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let neg = q.is_negative();
    let a = q.abs();
    let ten = rat_int(10);
    // find e with 10^e <= a < 10^(e+1)
    let mut e: i64 = 0;
    let mut scaled = a.clone();
    while scaled >= ten {
        scaled = &scaled / &ten;
        e += 1;
    }
    while scaled < rat_int(1) {
        scaled = &scaled * &ten;
        e -= 1;
    }
    // digits = round(a * 10^(sig-1-e))
    let shift = sig as i64 - 1 - e;
    let mut v = a;
    if shift >= 0 {
        v *= BigRational::from_integer(BigInt::from(10).pow(shift as u32));
    } else {
        v /= BigRational::from_integer(BigInt::from(10).pow((-shift) as u32));
    }
    let rounded = (&v + rat(1, 2)).floor().to_integer();
    let mut digits = rounded.to_string();
    let mut exp10 = e;
    if digits.len() > sig {
        // rounding carried over, e.g. 999.96 -> 1000
        digits.truncate(sig);
        exp10 += 1;
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if (0..sig as i64).contains(&exp10) {
        let ip = (exp10 + 1) as usize;
        out.push_str(&digits[..ip]);
        if ip < digits.len() {
            out.push('.');
            out.push_str(&digits[ip..]);
        }
    } else if (-6..0).contains(&exp10) {
        out.push_str("0.");
        for _ in 0..(-exp10 - 1) {
            out.push('0');
        }
        out.push_str(&digits);
    } else {
        out.push_str(&digits[..1]);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        out.push_str(&format!("e{exp10}"));
    }
    out
}

/// Parses a plain decimal literal like "3.067873979" into the exact
/// rational it denotes, together with the half-ulp of its last digit.
pub fn parse_decimal(s: &str) -> Result<(Rational, Rational)> {
    let s = s.trim();
    let (int_part, frac_part) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    let value: BigInt = digits
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad decimal {s:?}")))?;
    let den = BigInt::from(10).pow(frac_part.len() as u32);
    let ulp = BigRational::new(BigInt::one(), den.clone());
    Ok((BigRational::new(value, den), ulp / rat_int(2)))
}
