//! Real-root isolation by Sturm chains, exact root counting in
//! intervals, and certified bisection refinement.
//!
//! Counting uses the classical sign-variation difference of the Sturm
//! chain of the squarefree part; every count is exact.  Isolation
//! recursively bisects a root-bounded interval until each piece holds at
//! most one root; refinement bisects with exact sign evaluation so the
//! isolated root can never escape.

use crate::error::{Error, Result};
use crate::kernel::{format_rational, rat_int, Rational};
use crate::poly::{pseudo_rem_abs, UnivariatePolynomial};
use num_traits::{One, Signed, Zero};

/// An open-above interval `(lo, hi]`-style bracket holding exactly one
/// distinct real root of the target polynomial; neither endpoint is a
/// root of the squarefree target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    pub fn contains(&self, v: &Rational) -> bool {
        &self.lo <= v && v <= &self.hi
    }
}

/// The Sturm chain of f: starts f, f', then negated pseudo-remainders
/// with positive multipliers, each member stripped to primitive integer
/// form (positive constants do not disturb sign variations).
#[derive(Debug, Clone)]
pub struct SturmChain {
    pub chain: Vec<UnivariatePolynomial>,
}

impl SturmChain {
    /// Builds the chain of the squarefree part of `f`.
    pub fn new(f: &UnivariatePolynomial) -> Result<Self> {
        let f = f.squarefree_part()?;
        let mut chain = vec![f.clone()];
        if f.degree() == Some(0) {
            return Ok(SturmChain { chain });
        }
        chain.push(f.derivative().primitive_integer().0);
        loop {
            let a = &chain[chain.len() - 2];
            let b = &chain[chain.len() - 1];
            if b.degree().is_none() {
                break;
            }
            if b.degree() == Some(0) {
                break;
            }
            let r = pseudo_rem_abs(a, b);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive_integer().0.scale(
                // primitive_integer forces a positive leading coefficient,
                // which would silently flip odd-degree negatives; rescale
                // to preserve the true sign.
                &sign_rational(&r.neg()),
            ));
        }
        Ok(SturmChain { chain })
    }

    /// Number of sign variations of the chain evaluated at `x`.
    pub fn variations_at(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut prev: i8 = 0; // sign of last nonzero value
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if prev != 0 && prev != s {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Exact number of distinct real roots in the open interval
    /// `(lo, hi)`, endpoints assumed non-roots of the squarefree part.
    pub fn count_in(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo) - self.variations_at(hi)
    }
}

fn sign_rational(p: &UnivariatePolynomial) -> Rational {
    match p.leading() {
        Some(l) if l.is_negative() => rat_int(-1),
        _ => rat_int(1),
    }
}

/// Exact count of distinct real roots of `f` in the open interval
/// `(lo, hi)`.  Endpoint roots (of the squarefree part) are rejected so
/// the count is unambiguous; callers perturb and retry.
pub fn count_roots_in(f: &UnivariatePolynomial, lo: &Rational, hi: &Rational) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::InvalidInput("root count of zero polynomial".into()));
    }
    if lo >= hi {
        return Err(Error::InvalidInput(format!(
            "empty interval ({}, {})",
            format_rational(lo),
            format_rational(hi)
        )));
    }
    let sf = f.squarefree_part()?;
    if sf.eval(lo).is_zero() {
        return Err(Error::EndpointRoot(format_rational(lo)));
    }
    if sf.eval(hi).is_zero() {
        return Err(Error::EndpointRoot(format_rational(hi)));
    }
    let chain = SturmChain::new(f)?;
    Ok(chain.count_in(lo, hi))
}

/// Nudges an endpoint off a root of `sf` by shrinking steps, moving in
/// the direction `dir` (+1 outward right, -1 outward left).
fn perturb_endpoint(sf: &UnivariatePolynomial, x: &Rational, dir: i64) -> Rational {
    let mut step = Rational::new(
        num_bigint::BigInt::from(dir),
        x.denom() * num_bigint::BigInt::from(2),
    );
    loop {
        let cand = x + &step;
        if !sf.eval(&cand).is_zero() {
            return cand;
        }
        step /= rat_int(2);
    }
}

/// Isolates every distinct real root of `f` in `range` (default: the
/// whole real line, bounded by the Cauchy bound).  Returns disjoint
/// intervals ordered left to right, one per distinct root, with
/// endpoints that are not roots of the squarefree part.
pub fn isolate_real_roots(
    f: &UnivariatePolynomial,
    range: Option<(Rational, Rational)>,
) -> Result<Vec<IsolatingInterval>> {
    if f.is_zero() {
        return Err(Error::InvalidInput("isolation of zero polynomial".into()));
    }
    let sf = f.squarefree_part()?;
    if sf.degree() == Some(0) {
        return Ok(vec![]);
    }
    let chain = SturmChain::new(&sf)?;
    let (mut lo, mut hi) = match range {
        Some((lo, hi)) => {
            if lo >= hi {
                return Err(Error::InvalidInput(format!(
                    "empty range ({}, {})",
                    format_rational(&lo),
                    format_rational(&hi)
                )));
            }
            (lo, hi)
        }
        None => {
            // round the Cauchy bound up to a power of two so every
            // bisection midpoint stays a small dyadic rational
            let mut b = Rational::one();
            let exact = sf.cauchy_bound()?;
            while b < exact {
                b = b * rat_int(2);
            }
            (-b.clone(), b)
        }
    };
    // endpoint roots are perturbed outward so no root is missed
    if sf.eval(&lo).is_zero() {
        lo = perturb_endpoint(&sf, &lo, -1);
    }
    if sf.eval(&hi).is_zero() {
        hi = perturb_endpoint(&sf, &hi, 1);
    }
    let mut out = Vec::new();
    // carry variation counts with each endpoint so no point is
    // evaluated against the chain twice
    let va = chain.variations_at(&lo);
    let vb = chain.variations_at(&hi);
    let mut stack = vec![(lo, va, hi, vb)];
    while let Some((a, va, b, vb)) = stack.pop() {
        match va - vb {
            0 => {}
            1 => out.push(IsolatingInterval { lo: a, hi: b }),
            _ => {
                let mut mid = (&a + &b) / rat_int(2);
                if sf.eval(&mid).is_zero() {
                    // shift the cut point so the midpoint root lands
                    // strictly inside one half
                    mid = (&a + &mid) / rat_int(2);
                    if sf.eval(&mid).is_zero() {
                        mid = perturb_endpoint(&sf, &mid, 1);
                    }
                }
                let vm = chain.variations_at(&mid);
                stack.push((mid.clone(), vm, b, vb));
                stack.push((a, va, mid, vm));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(out)
}

/// Shrinks an isolating interval of `f` below `width` by bisection with
/// exact sign evaluation.  The root never escapes the input interval.
pub fn refine_root(
    f: &UnivariatePolynomial,
    iv: &IsolatingInterval,
    width: &Rational,
) -> Result<IsolatingInterval> {
    if !width.is_positive() {
        return Err(Error::InvalidInput("refinement width must be positive".into()));
    }
    let sf = f.squarefree_part()?;
    let chain = SturmChain::new(&sf)?;
    if chain.count_in(&iv.lo, &iv.hi) != 1 {
        return Err(Error::InvalidInput(format!(
            "interval ({}, {}) does not isolate a single root",
            format_rational(&iv.lo),
            format_rational(&iv.hi)
        )));
    }
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let slo = sf.sign_at(&lo);
    // the isolated root is simple, so the signs at lo and hi differ
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / rat_int(2);
        let v = sf.sign_at(&mid);
        if v == 0 {
            // exact rational root: shrink symmetrically around it
            let quarter = width / rat_int(4);
            let nlo = (&mid - &quarter).max(lo.clone());
            let nhi = (&mid + &quarter).min(hi.clone());
            return Ok(IsolatingInterval { lo: nlo, hi: nhi });
        }
        if v == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(IsolatingInterval { lo, hi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    fn p(asc: &[i64]) -> UnivariatePolynomial {
        UnivariatePolynomial::from_integers(asc)
    }

    #[test]
    fn sturm_chain_quadratic() {
        let chain = SturmChain::new(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(chain.chain.len(), 3);
        assert_eq!(chain.count_in(&rat_int(0), &rat_int(2)), 1);
        assert_eq!(chain.count_in(&rat_int(-2), &rat_int(2)), 2);
        assert_eq!(chain.count_in(&rat_int(2), &rat_int(3)), 0);
    }

    #[test]
    fn count_rejects_endpoint_roots() {
        let f = p(&[-2, 0, 1]);
        assert!(count_roots_in(&f, &rat_int(0), &rat_int(2)).is_ok());
        let g = p(&[-4, 0, 1]);
        assert!(matches!(
            count_roots_in(&g, &rat_int(0), &rat_int(2)),
            Err(Error::EndpointRoot(_))
        ));
    }

    #[test]
    fn isolate_sqrt_two() {
        let ivs = isolate_real_roots(&p(&[-2, 0, 1]), None).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].hi <= rat_int(0));
        assert!(ivs[1].lo >= rat_int(0));
        assert!(ivs[0].contains(&rat(-3, 2)) || ivs[0].width() < rat_int(1));
    }

    #[test]
    fn isolate_with_multiplicities() {
        // (x-1)^2 (x+2)^3 has two distinct real roots
        let f = p(&[-1, 1]).pow(2).mul(&p(&[2, 1]).pow(3));
        let ivs = isolate_real_roots(&f, None).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].contains(&rat_int(-2)));
        assert!(ivs[1].contains(&rat_int(1)));
    }

    #[test]
    fn isolate_in_range() {
        let f = p(&[-2, 0, 1]);
        let ivs = isolate_real_roots(&f, Some((rat_int(0), rat_int(2)))).unwrap();
        assert_eq!(ivs.len(), 1);
        let ivs = isolate_real_roots(&f, Some((rat_int(2), rat_int(3)))).unwrap();
        assert!(ivs.is_empty());
    }

    #[test]
    fn refine_sqrt_two() {
        let f = p(&[-2, 0, 1]);
        let iv = IsolatingInterval {
            lo: rat_int(1),
            hi: rat_int(2),
        };
        let w = rat(1, 1_000_000_000);
        let r = refine_root(&f, &iv, &w).unwrap();
        assert!(r.width() <= w);
        assert!(iv.lo <= r.lo && r.hi <= iv.hi);
        // 1.414213562 +/- 1e-9
        let (v, _) = crate::kernel::parse_decimal("1.414213562").unwrap();
        assert!((r.midpoint() - v).abs() < rat(2, 1_000_000_000));
    }

    #[test]
    fn refine_exact_rational_root() {
        // root at 3/2 hit exactly by bisection of (1, 2)
        let f = p(&[-3, 2]);
        let iv = IsolatingInterval {
            lo: rat_int(1),
            hi: rat_int(2),
        };
        let r = refine_root(&f, &iv, &rat(1, 1000)).unwrap();
        assert!(r.width() <= rat(1, 1000));
        assert!(r.contains(&rat(3, 2)));
    }

    #[test]
    fn cubic_maximal_root() {
        // x^3 - 5x^2 + 15 has three real roots; the largest is near 4.1135
        let f = p(&[15, 0, -5, 1]);
        let ivs = isolate_real_roots(&f, None).unwrap();
        assert_eq!(ivs.len(), 3);
        let r = refine_root(&f, ivs.last().unwrap(), &rat(1, 1_000_000_000)).unwrap();
        let (v, _) = crate::kernel::parse_decimal("4.113537611").unwrap();
        assert!((r.midpoint() - v).abs() < rat(2, 1_000_000_000));
    }

    #[test]
    fn endpoint_root_perturbed_in_isolation() {
        // roots at exactly -2 and 2 equal the Cauchy-bound corner case
        let f = p(&[-4, 0, 1]);
        let ivs = isolate_real_roots(&f, Some((rat_int(-2), rat_int(2)))).unwrap();
        assert_eq!(ivs.len(), 2);
    }
}
