//! Complete discrimination system: discriminant sequence, sign lists,
//! revised sign lists and the root-count rule.
//!
//! The discrimination matrix of f (degree n) and f' is the 2n x 2n
//! integer matrix whose row pairs hold the coefficient vectors of f and
//! f' (the latter led by an explicit zero), each pair shifted one column
//! right of the previous pair.  `D_k` is the leading principal minor of
//! order 2k.  The number of sign changes `v` of the revised sign list
//! equals the number of distinct conjugate imaginary root pairs, and
//! `l - 2v` (with `l` the number of non-vanishing members) the number of
//! distinct real roots.

use crate::error::{Error, Result};
use crate::poly::UnivariatePolynomial;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantSequence {
    /// D_1 .. D_n as exact integers (for the primitive integer form of f).
    pub values: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignList {
    pub signs: Vec<i8>,
    pub revised: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCount {
    pub distinct_real: usize,
    pub imaginary_pairs: usize,
}

impl DiscriminantSequence {
    pub fn sign_list(&self) -> SignList {
        SignList {
            signs: self
                .values
                .iter()
                .map(|v| {
                    if v.is_zero() {
                        0
                    } else if v.is_positive() {
                        1
                    } else {
                        -1
                    }
                })
                .collect(),
            revised: false,
        }
    }
}

impl SignList {
    /// Renders in the usual bracketed comma-separated form.
    pub fn bracketed(&self) -> String {
        let items: Vec<String> = self.signs.iter().map(|s| s.to_string()).collect();
        format!("[{}]", items.join(","))
    }

    pub fn sign_changes(&self) -> usize {
        let mut changes = 0;
        let mut prev: Option<i8> = None;
        for &s in &self.signs {
            if s == 0 {
                continue;
            }
            if let Some(p) = prev {
                if p != s {
                    changes += 1;
                }
            }
            prev = Some(s);
        }
        changes
    }

    pub fn non_vanishing(&self) -> usize {
        self.signs.iter().filter(|&&s| s != 0).count()
    }
}

/// Builds the 2n x 2n discrimination matrix of f and f' over the
/// integers (f taken in primitive integer form).
pub fn discrimination_matrix(f: &UnivariatePolynomial) -> Result<Vec<Vec<BigInt>>> {
    let n = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::InvalidInput("discrimination of a constant".into()))?;
    let (prim, _) = f.primitive_integer();
    let a: Vec<BigInt> = prim
        .integer_coeffs()
        .expect("primitive form has integer coefficients");
    // descending coefficient vectors for f and f'
    let fa: Vec<BigInt> = (0..=n).map(|i| a[n - i].clone()).collect();
    let fb: Vec<BigInt> = (0..n).map(|i| &a[n - i] * BigInt::from((n - i) as u64)).collect();
    let size = 2 * n;
    let mut m = vec![vec![BigInt::zero(); size]; size];
    for k in 0..n {
        for (j, v) in fa.iter().enumerate() {
            if k + j < size {
                m[2 * k][k + j] = v.clone();
            }
        }
        for (j, v) in fb.iter().enumerate() {
            // f' row led by an explicit zero: entries at columns k+1 ..
            if k + 1 + j < size {
                m[2 * k + 1][k + 1 + j] = v.clone();
            }
        }
    }
    Ok(m)
}

/// Exact determinant by fraction-free Bareiss elimination with row
/// pivoting.  Returns zero for singular matrices.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1i8;
    let mut prev = BigInt::from(1);
    for r in 0..n {
        if m[r][r].is_zero() {
            match (r + 1..n).find(|&i| !m[i][r].is_zero()) {
                Some(i) => {
                    m.swap(r, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in r + 1..n {
            for j in r + 1..n {
                let num = &m[r][r] * &m[i][j] - &m[i][r] * &m[r][j];
                m[i][j] = num / &prev;
            }
            m[i][r] = BigInt::zero();
        }
        prev = m[r][r].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

fn leading_submatrix(m: &[Vec<BigInt>], order: usize) -> Vec<Vec<BigInt>> {
    m[..order].iter().map(|row| row[..order].to_vec()).collect()
}

/// All leading principal minors 1..n of `m` by a single pivot-free
/// Bareiss sweep.  Fails (returns None) if a zero pivot blocks the sweep
/// before the last row; callers then fall back to per-minor determinants.
fn leading_principal_minors(mut m: Vec<Vec<BigInt>>) -> Option<Vec<BigInt>> {
    let n = m.len();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::from(1);
    for r in 0..n {
        minors.push(m[r][r].clone());
        if m[r][r].is_zero() {
            if r + 1 == n {
                break;
            }
            return None;
        }
        for i in r + 1..n {
            for j in r + 1..n {
                let num = &m[r][r] * &m[i][j] - &m[i][r] * &m[r][j];
                m[i][j] = num / &prev;
            }
            m[i][r] = BigInt::zero();
        }
        prev = m[r][r].clone();
    }
    Some(minors)
}

/// Yang's discriminant sequence D_1 .. D_n of f.
pub fn discriminant_sequence(f: &UnivariatePolynomial) -> Result<DiscriminantSequence> {
    let m = discrimination_matrix(f)?;
    let n = m.len() / 2;
    let values = match leading_principal_minors(m.clone()) {
        Some(minors) => (1..=n).map(|k| minors[2 * k - 1].clone()).collect(),
        None => (1..=n)
            .map(|k| bareiss_determinant(leading_submatrix(&m, 2 * k)))
            .collect(),
    };
    Ok(DiscriminantSequence { values })
}

/// Replaces every maximal internal zero run by the period-4 pattern
/// -s, -s, s, s, ... taken from the preceding nonzero sign; trailing
/// zeros are preserved.
pub fn revise_sign_list(s: &SignList) -> SignList {
    assert!(!s.revised, "sign list already revised");
    let signs = &s.signs;
    let mut out = signs.clone();
    let mut i = 0;
    while i < signs.len() {
        if signs[i] != 0 {
            i += 1;
            continue;
        }
        // maximal zero run [i, j)
        let mut j = i;
        while j < signs.len() && signs[j] == 0 {
            j += 1;
        }
        let bounded = i > 0 && j < signs.len();
        if bounded {
            let s_prev = signs[i - 1];
            for (r, slot) in out[i..j].iter_mut().enumerate() {
                // r = 0,1,2,3,... -> -s, -s, s, s, -s, -s, ...
                *slot = match r % 4 {
                    0 | 1 => -s_prev,
                    _ => s_prev,
                };
            }
        }
        i = j;
    }
    SignList {
        signs: out,
        revised: true,
    }
}

/// Lemma-2 root counting from the revised sign list.
pub fn count_roots(f: &UnivariatePolynomial) -> Result<RootCount> {
    let seq = discriminant_sequence(f)?;
    let revised = revise_sign_list(&seq.sign_list());
    let v = revised.sign_changes();
    let l = revised.non_vanishing();
    Ok(RootCount {
        distinct_real: l - 2 * v,
        imaginary_pairs: v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(asc: &[i64]) -> UnivariatePolynomial {
        UnivariatePolynomial::from_integers(asc)
    }

    #[test]
    fn quadratic_sign_patterns() {
        let seq = discriminant_sequence(&p(&[1, 0, 1])).unwrap();
        assert_eq!(seq.sign_list().signs, vec![1, -1]);
        let seq = discriminant_sequence(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(seq.sign_list().signs, vec![1, 1]);
    }

    #[test]
    fn count_roots_quadratics() {
        let rc = count_roots(&p(&[1, 0, 1])).unwrap();
        assert_eq!(
            rc,
            RootCount {
                distinct_real: 0,
                imaginary_pairs: 1
            }
        );
        let rc = count_roots(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(
            rc,
            RootCount {
                distinct_real: 2,
                imaginary_pairs: 0
            }
        );
    }

    #[test]
    fn revision_rule_examples() {
        let s = SignList {
            signs: vec![1, 0, 0, 1],
            revised: false,
        };
        assert_eq!(revise_sign_list(&s).signs, vec![1, -1, -1, 1]);
        let s = SignList {
            signs: vec![1, -1, 1],
            revised: false,
        };
        assert_eq!(revise_sign_list(&s).signs, vec![1, -1, 1]);
        let s = SignList {
            signs: vec![1, 0, 0, 0, -1],
            revised: false,
        };
        assert_eq!(revise_sign_list(&s).signs, vec![1, -1, -1, 1, -1]);
        // trailing zeros preserved
        let s = SignList {
            signs: vec![1, -1, 0, 0],
            revised: false,
        };
        assert_eq!(revise_sign_list(&s).signs, vec![1, -1, 0, 0]);
    }

    #[test]
    fn positive_scaling_invariance() {
        let f = p(&[3, -2, 0, 5, 1]);
        let scaled = f.scale(&crate::kernel::rat(7, 3));
        let a = discriminant_sequence(&f).unwrap().sign_list();
        let b = discriminant_sequence(&scaled).unwrap().sign_list();
        assert_eq!(a, b);
    }

    #[test]
    fn constant_rejected() {
        assert!(discriminant_sequence(&p(&[5])).is_err());
    }

    #[test]
    fn cubic_with_multiple_root_has_zero_tail() {
        // (x-1)^2 (x+2): one double root, sign list ends in zero
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1]));
        let seq = discriminant_sequence(&f).unwrap();
        assert_eq!(seq.values.len(), 3);
        assert!(seq.values[2].is_zero());
        let rc = count_roots(&f).unwrap();
        assert_eq!(rc.distinct_real, 2);
        assert_eq!(rc.imaginary_pairs, 0);
    }
}
