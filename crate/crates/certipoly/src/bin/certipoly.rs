//! Command-line front end: runs certification suites and exposes the
//! core primitives (sign lists, root isolation, bivariate resultants)
//! on polynomial files.
//!
//! Exit codes: 0 certified, 1 falsified, 2 indeterminate, 3 usage or
//! data error.

use certipoly::dataio::{parse_univariate, sha256_hex};
use certipoly::discrimination::{count_roots, discriminant_sequence, revise_sign_list};
use certipoly::isolation::{isolate_real_roots, refine_root};
use certipoly::kernel::{decimal_string, format_rational, parse_rational, PrecisionBudget};
use certipoly::resultant::{resultant_in_t, BivariatePolynomial};
use certipoly::suite::{run_suite, SuiteConfig, SuiteKind};
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "certipoly",
    about = "Exact symbolic-numeric certification of two geometric inequality best constants",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a certification suite over the checked-in polynomial data.
    Verify {
        /// theorem1, theorem2, conjecture or all
        suite: String,
        /// Target width for refined root intervals (rational, e.g. 1/100000000)
        #[arg(long)]
        width: Option<String>,
        /// Starting working precision in bits
        #[arg(long)]
        bits: Option<u32>,
        /// Maximum working precision in bits before reporting indeterminate
        #[arg(long)]
        max_bits: Option<u32>,
        /// Directory holding the polynomial data files
        #[arg(long, default_value = "data")]
        data: PathBuf,
        /// Write the report to this path
        #[arg(long)]
        report: Option<PathBuf>,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the revised sign list and root counts of a polynomial file.
    Signlist {
        poly_file: PathBuf,
    },
    /// Isolate (and refine) the real roots of a polynomial file.
    Isolate {
        poly_file: PathBuf,
        /// Restrict to the open interval (LO, HI)
        #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
        range: Option<Vec<String>>,
    },
    /// Resultant in t of a univariate polynomial in t and a bivariate
    /// polynomial in t and k, printed as a polynomial in k.
    Resultant {
        poly_t_file: PathBuf,
        bipoly_file: PathBuf,
    },
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            suite,
            width,
            bits,
            max_bits,
            data,
            report,
            json,
        } => {
            let kind: SuiteKind = suite.parse().map_err(|e| format!("{e}"))?;
            let mut cfg = SuiteConfig::new(kind, data);
            if let Some(w) = width {
                let w = parse_rational(&w).map_err(|e| format!("--width: {e}"))?;
                if !w.numer().sign().eq(&num_bigint::Sign::Plus) {
                    return Err("--width must be positive".into());
                }
                cfg.target_root_width = w;
            }
            let b = bits.unwrap_or(PrecisionBudget::default().working_bits);
            let mb = max_bits.unwrap_or_else(|| PrecisionBudget::default().max_bits.max(b));
            cfg.precision =
                PrecisionBudget::new(b, mb.max(b), 2).map_err(|e| format!("{e}"))?;
            cfg.report_path = report;
            cfg.emit_json = json;

            let rep = run_suite(&cfg).map_err(|e| format!("{e}"))?;
            let rendered = if cfg.emit_json {
                rep.to_json()
            } else {
                rep.render_text()
            };
            match &cfg.report_path {
                Some(path) => {
                    std::fs::write(path, &rendered).map_err(|e| format!("{e}"))?;
                    println!("suite {}: {} (report written to {})", rep.suite, rep.verdict, path.display());
                }
                None => print!("{rendered}"),
            }
            Ok(rep.verdict.exit_code() as u8)
        }
        Command::Signlist { poly_file } => {
            let text = std::fs::read_to_string(&poly_file).map_err(|e| format!("{e}"))?;
            let p = parse_univariate(&text).map_err(|e| format!("{e}"))?;
            let seq = discriminant_sequence(&p).map_err(|e| format!("{e}"))?;
            let raw = seq.sign_list();
            let revised = revise_sign_list(&raw);
            let rc = count_roots(&p).map_err(|e| format!("{e}"))?;
            println!("file: {} (sha256 {})", poly_file.display(), sha256_hex(text.as_bytes()));
            println!("sign list:         {}", raw.bracketed());
            println!("revised sign list: {}", revised.bracketed());
            println!("sign changes: {}", revised.sign_changes());
            println!(
                "distinct real roots: {}  imaginary pairs: {}",
                rc.distinct_real, rc.imaginary_pairs
            );
            Ok(0)
        }
        Command::Isolate { poly_file, range } => {
            let text = std::fs::read_to_string(&poly_file).map_err(|e| format!("{e}"))?;
            let p = parse_univariate(&text).map_err(|e| format!("{e}"))?;
            let range = match range {
                Some(v) => {
                    let lo = parse_rational(&v[0]).map_err(|e| format!("--range LO: {e}"))?;
                    let hi = parse_rational(&v[1]).map_err(|e| format!("--range HI: {e}"))?;
                    Some((lo, hi))
                }
                None => None,
            };
            let roots = isolate_real_roots(&p, range).map_err(|e| format!("{e}"))?;
            println!("{} isolating interval(s)", roots.len());
            for iv in &roots {
                let fine = refine_root(&p, iv, &certipoly::kernel::rat(1, 1_000_000_000))
                    .map_err(|e| format!("{e}"))?;
                println!(
                    "[{}, {}] ~ {}",
                    format_rational(&iv.lo),
                    format_rational(&iv.hi),
                    decimal_string(&fine.midpoint(), 10)
                );
            }
            Ok(0)
        }
        Command::Resultant {
            poly_t_file,
            bipoly_file,
        } => {
            let pt = std::fs::read_to_string(&poly_t_file).map_err(|e| format!("{e}"))?;
            let pb = std::fs::read_to_string(&bipoly_file).map_err(|e| format!("{e}"))?;
            let p = parse_univariate(&pt).map_err(|e| format!("{e}"))?;
            let q = BivariatePolynomial::parse(&pb).map_err(|e| format!("{e}"))?;
            let r = resultant_in_t(&BivariatePolynomial::from_univariate_t(&p), &q)
                .map_err(|e| format!("{e}"))?;
            print!(
                "{}",
                certipoly::dataio::render_univariate(&r).map_err(|e| format!("{e}"))?
            );
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
