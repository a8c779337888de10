//! Runs the full monotonicity cascade, refines the critical point x1
//! to width 1e-14, and prints a validated enclosure of the best
//! exponent f(x1).
//!
//!     cargo run --release --example best_exponent

use certipoly::analytic::{
    best_exponent_interval, certify_monotone_chain_theorem1, g_derivatives,
    refine_transcendental_root,
};
use certipoly::dataio::DataSet;
use certipoly::expr::Sign;
use certipoly::kernel::{decimal_string, rat, PrecisionBudget};
use std::path::Path;

fn main() {
    let data = DataSet::load(Path::new("data")).expect("data files");
    let prec = PrecisionBudget::default();
    let width = rat(1, 100_000_000);

    let chain = certify_monotone_chain_theorem1(&data, &prec, &width).expect("cascade");
    println!(
        "x0 in [{}, {}]",
        decimal_string(&chain.x0.lo, 12),
        decimal_string(&chain.x0.hi, 12)
    );
    for s in &chain.steps {
        println!(
            "level {}: root ~ {}  ({})",
            s.level,
            decimal_string(&s.root.midpoint(), 10),
            s.description
        );
        for c in &s.endpoint_certificates {
            println!("    endpoint: {} at {} -> {}", c.subject, c.at, c.sign);
        }
    }

    let [g, _, _, _, _] = g_derivatives();
    let x1 = refine_transcendental_root(
        &g,
        "g",
        &chain.x1,
        Sign::Positive,
        &rat(1, 100_000_000_000_000),
        &prec,
    )
    .expect("x1 refinement");
    println!(
        "x1 ~ {}  (width {})",
        decimal_string(&x1.midpoint(), 12),
        decimal_string(&x1.width(), 3)
    );

    let lm = best_exponent_interval(&x1, &prec).expect("best exponent");
    println!(
        "best exponent in [{}, {}]  (width {})",
        decimal_string(lm.lo(), 12),
        decimal_string(lm.hi(), 12),
        decimal_string(&lm.width(), 3)
    );
}
