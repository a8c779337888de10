//! Certifies the power inequality
//!     [24(x^2-3)/(x^2+3)^2]^lambda >= -2(x^3-5x^2+15)/(x^2-3)
//! for all x >= 3 at the integer exponent lambda = 5, splitting the ray
//! into four regimes (exact identity at 3, monotone growth just past 3,
//! adaptive interval subdivision up to x0, nonpositive right side
//! beyond x0).
//!
//!     cargo run --release --example verify_inequality

use certipoly::analytic::verify_power_inequality;
use certipoly::dataio::DataSet;
use certipoly::isolation::{isolate_real_roots, refine_root};
use certipoly::kernel::{rat, rat_int, PrecisionBudget};
use std::path::Path;

fn main() {
    let data = DataSet::load(Path::new("data")).expect("data files");
    let prec = PrecisionBudget::default();

    // x0 is the largest real root of x^3 - 5x^2 + 15
    let roots = isolate_real_roots(&data.cubic_x0, Some((rat_int(3), rat_int(5))))
        .expect("x0 isolation");
    assert_eq!(roots.len(), 1);
    let x0 = refine_root(&data.cubic_x0, &roots[0], &rat(1, 1_000_000_000)).expect("x0");

    let lambda = data.param("conjecture_lambda").expect("lambda param");
    let (verdict, notes) = verify_power_inequality(&data, &lambda, &x0, 4096, &prec)
        .expect("verification");
    println!("lambda = {lambda}: {verdict}");
    println!("{notes}");
}
