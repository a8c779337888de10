//! Loading and rendering of the checked-in polynomial and parameter
//! data files, with SHA-256 content digests and a built-in manifest of
//! expected degrees and leading coefficients.
//!
//! File formats:
//! - univariate (`*.poly`): first line `degree N`, then lines
//!   `exponent coefficient`; unlisted exponents are zero.
//! - bivariate (`*.bipoly`): lines `t_exp k_exp coefficient`.
//! - sign lists: a single bracketed comma-separated line, e.g. `[1,-1]`.
//! - interval lists: one `lo hi` rational pair per line.
//! - parameters: `key = value` lines with rational values.

use crate::discrimination::SignList;
use crate::error::{Error, Result};
use crate::kernel::{format_rational, parse_rational, Rational};
use crate::poly::UnivariatePolynomial;
use crate::resultant::BivariatePolynomial;
use num_traits::Zero;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    format!("{:x}", h.finalize())
}

/// Parses the univariate polynomial file format.
pub fn parse_univariate(text: &str) -> Result<UnivariatePolynomial> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .ok_or(Error::Parse {
            line: 1,
            message: "empty polynomial file".into(),
        })?;
    let degree: usize = header
        .trim()
        .strip_prefix("degree")
        .and_then(|s| s.trim().parse().ok())
        .ok_or(Error::Parse {
            line: 1,
            message: format!("expected \"degree N\", got {header:?}"),
        })?;
    let mut coeffs = vec![Rational::zero(); degree + 1];
    for (idx, raw) in lines {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let e: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(Error::Parse {
                line: idx + 1,
                message: "expected \"exponent coefficient\"".into(),
            })?;
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
        if e > degree {
            return Err(Error::Parse {
                line: idx + 1,
                message: format!("exponent {e} exceeds declared degree {degree}"),
            });
        }
        coeffs[e] = parse_rational(c).map_err(|err| Error::Parse {
            line: idx + 1,
            message: err.to_string(),
        })?;
    }
    if coeffs[degree].is_zero() {
        return Err(Error::DataMismatch(format!(
            "declared degree {degree} but leading coefficient is zero"
        )));
    }
    Ok(UnivariatePolynomial::new(coeffs))
}

/// Renders in the same format; exact round-trip with [`parse_univariate`].
pub fn render_univariate(p: &UnivariatePolynomial) -> Result<String> {
    let d = p
        .degree()
        .ok_or_else(|| Error::InvalidInput("cannot render zero polynomial".into()))?;
    let mut out = format!("degree {d}\n");
    for (e, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out.push_str(&format!("{e} {}\n", format_rational(c)));
        }
    }
    Ok(out)
}

/// Parses a bracketed sign list like `[1,1,-1,0]`.
pub fn parse_sign_list(text: &str) -> Result<SignList> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or(Error::Parse {
            line: 1,
            message: format!("expected bracketed sign list, got {t:?}"),
        })?;
    let signs = inner
        .split(',')
        .map(|s| match s.trim() {
            "1" | "+1" => Ok(1i8),
            "-1" | "\u{2212}1" => Ok(-1i8),
            "0" => Ok(0i8),
            other => Err(Error::Parse {
                line: 1,
                message: format!("bad sign entry {other:?}"),
            }),
        })
        .collect::<Result<Vec<i8>>>()?;
    Ok(SignList {
        signs,
        revised: false,
    })
}

/// Parses one `lo hi` rational pair per line.
pub fn parse_intervals(text: &str) -> Result<Vec<(Rational, Rational)>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let bad = || Error::Parse {
            line: idx + 1,
            message: "expected \"lo hi\"".into(),
        };
        let lo = parse_rational(it.next().ok_or_else(bad)?)?;
        let hi = parse_rational(it.next().ok_or_else(bad)?)?;
        if it.next().is_some() || lo >= hi {
            return Err(bad());
        }
        out.push((lo, hi));
    }
    Ok(out)
}

/// Parses `key = value` parameter lines with rational values.
pub fn parse_params(text: &str) -> Result<BTreeMap<String, Rational>> {
    let mut out = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or(Error::Parse {
            line: idx + 1,
            message: "expected \"key = value\"".into(),
        })?;
        out.insert(k.trim().to_string(), parse_rational(v)?);
    }
    Ok(out)
}

/// Everything the certification suites consume, loaded and
/// manifest-checked, with per-file SHA-256 digests for the report.
#[derive(Debug, Clone)]
pub struct DataSet {
    pub p: UnivariatePolynomial,
    pub p2: UnivariatePolynomial,
    pub p3: BivariatePolynomial,
    pub p4: UnivariatePolynomial,
    pub p5: UnivariatePolynomial,
    pub cubic_x0: UnivariatePolynomial,
    pub m: Rational,
    pub sign_list_p: SignList,
    pub sign_list_p2: SignList,
    pub sign_list_p5: SignList,
    pub p5_root_intervals: Vec<(Rational, Rational)>,
    pub params: BTreeMap<String, Rational>,
    pub digests: BTreeMap<String, String>,
}

/// Expected shape of each checked-in polynomial; a mismatch means the
/// data file was corrupted or swapped and is a hard error.
struct ManifestEntry {
    degree: usize,
    leading: &'static str,
}

fn check_manifest(name: &str, p: &UnivariatePolynomial, m: &ManifestEntry) -> Result<()> {
    if p.degree() != Some(m.degree) {
        return Err(Error::DataMismatch(format!(
            "{name}: expected degree {}, found {:?}",
            m.degree,
            p.degree()
        )));
    }
    let expected = parse_rational(m.leading)?;
    if p.leading() != Some(&expected) {
        return Err(Error::DataMismatch(format!(
            "{name}: leading coefficient mismatch"
        )));
    }
    Ok(())
}

impl DataSet {
    pub fn load(dir: &Path) -> Result<Self> {
        let mut digests = BTreeMap::new();
        let mut read = |name: &str| -> Result<String> {
            let path: PathBuf = dir.join(name);
            let bytes = std::fs::read(&path).map_err(|e| {
                Error::InvalidInput(format!("cannot read {}: {e}", path.display()))
            })?;
            digests.insert(name.to_string(), sha256_hex(&bytes));
            String::from_utf8(bytes)
                .map_err(|_| Error::InvalidInput(format!("{name} is not UTF-8")))
        };

        let p = parse_univariate(&read("p.poly")?)?;
        let p2 = parse_univariate(&read("p2.poly")?)?;
        let p4 = parse_univariate(&read("p4.poly")?)?;
        let p5 = parse_univariate(&read("p5.poly")?)?;
        let cubic_x0 = parse_univariate(&read("cubic_x0.poly")?)?;
        let p3 = BivariatePolynomial::parse(&read("p3.bipoly")?)?;
        let m = parse_rational(read("m.txt")?.trim())?;
        let sign_list_p = parse_sign_list(&read("sign_list_p.txt")?)?;
        let sign_list_p2 = parse_sign_list(&read("sign_list_p2.txt")?)?;
        let sign_list_p5 = parse_sign_list(&read("sign_list_p5.txt")?)?;
        let p5_root_intervals = parse_intervals(&read("p5_root_intervals.txt")?)?;
        let params = parse_params(&read("params.txt")?)?;

        check_manifest(
            "p.poly",
            &p,
            &ManifestEntry {
                degree: 18,
                leading: "5",
            },
        )?;
        check_manifest(
            "p2.poly",
            &p2,
            &ManifestEntry {
                degree: 20,
                leading: "91750400",
            },
        )?;
        check_manifest(
            "p4.poly",
            &p4,
            &ManifestEntry {
                degree: 40,
                leading: "582076609134674072265625",
            },
        )?;
        check_manifest(
            "p5.poly",
            &p5,
            &ManifestEntry {
                degree: 40,
                leading: "8860655573197291232645511627197265625",
            },
        )?;
        check_manifest(
            "cubic_x0.poly",
            &cubic_x0,
            &ManifestEntry {
                degree: 3,
                leading: "1",
            },
        )?;
        if p3.degree_t() != Some(42)
            || p3.degree_k() != Some(4)
            || p3.coeff(42, 4) != parse_rational("68719476736")?
        {
            return Err(Error::DataMismatch(
                "p3.bipoly: expected deg_t 42, deg_k 4, leading term 68719476736 k^4 t^42"
                    .into(),
            ));
        }
        Ok(DataSet {
            p,
            p2,
            p3,
            p4,
            p5,
            cubic_x0,
            m,
            sign_list_p,
            sign_list_p2,
            sign_list_p5,
            p5_root_intervals,
            params,
            digests,
        })
    }

    /// A required named parameter from `params.txt`.
    pub fn param(&self, key: &str) -> Result<Rational> {
        self.params
            .get(key)
            .cloned()
            .ok_or_else(|| Error::DataMismatch(format!("missing parameter {key:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, rat_int};

    #[test]
    fn univariate_roundtrip() {
        let text = "degree 3\n0 15\n2 -5\n3 1\n";
        let p = parse_univariate(text).unwrap();
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.coeff(1), rat_int(0));
        assert_eq!(render_univariate(&p).unwrap(), text);
    }

    #[test]
    fn univariate_rejects_bad_files() {
        assert!(parse_univariate("degree 2\n3 1\n").is_err());
        assert!(parse_univariate("degree 2\n0 1\n").is_err()); // zero leading
        assert!(parse_univariate("poly 2\n0 1\n").is_err());
        assert!(parse_univariate("degree 1\n1 x\n").is_err());
    }

    #[test]
    fn sign_list_parsing() {
        let s = parse_sign_list("[1,-1,0,1]").unwrap();
        assert_eq!(s.signs, vec![1, -1, 0, 1]);
        assert!(parse_sign_list("[1,2]").is_err());
        assert!(parse_sign_list("1,-1").is_err());
    }

    #[test]
    fn interval_and_param_parsing() {
        let ivs = parse_intervals("2 5/2\n-3 -5/2\n").unwrap();
        assert_eq!(ivs[0], (rat_int(2), rat(5, 2)));
        assert!(parse_intervals("3 2\n").is_err());
        let params = parse_params("a = 1/2\nb = -3\n").unwrap();
        assert_eq!(params["a"], rat(1, 2));
        assert_eq!(params["b"], rat_int(-3));
    }

    #[test]
    fn dataset_loads_and_digests() {
        let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("../../data");
        let ds = DataSet::load(&dir).unwrap();
        assert_eq!(ds.p.degree(), Some(18));
        assert_eq!(ds.p2.degree(), Some(20));
        assert_eq!(ds.sign_list_p.signs.len(), 18);
        assert_eq!(ds.sign_list_p2.signs.len(), 20);
        assert_eq!(ds.sign_list_p5.signs.len(), 40);
        assert_eq!(ds.p5_root_intervals.len(), 8);
        assert_eq!(ds.digests.len(), 12);
        assert_eq!(ds.param("conjecture_lambda").unwrap(), rat_int(5));
    }
}
