//! End-to-end tour: runs the conjecture suite (the integer-exponent
//! lambda = 5 inequality and the k < 1 coefficient bound) and prints the
//! full certification report.
//!
//!     cargo run --release --example conjecture

use certipoly::suite::{run_suite, SuiteConfig, SuiteKind};
use std::path::PathBuf;
use std::process::exit;

fn main() {
    let cfg = SuiteConfig::new(SuiteKind::Conjecture, PathBuf::from("data"));
    match run_suite(&cfg) {
        Ok(report) => {
            print!("{}", report.render_text());
            exit(report.verdict.exit_code());
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit(3);
        }
    }
}
