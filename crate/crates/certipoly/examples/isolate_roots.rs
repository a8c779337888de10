//! Isolates every real root of the cubic x^3 - 5x^2 + 15 and of p2 with
//! Sturm chains, then refines the largest cubic root x0 and the first
//! p2 root below width 1e-12 by exact bisection.
//!
//!     cargo run --release --example isolate_roots

use certipoly::dataio::DataSet;
use certipoly::isolation::{count_roots_in, isolate_real_roots, refine_root};
use certipoly::kernel::{decimal_string, rat, rat_int};
use std::path::Path;

fn main() {
    let data = DataSet::load(Path::new("data")).expect("data files");
    let width = rat(1, 1_000_000_000_000);

    let cubic_roots = isolate_real_roots(&data.cubic_x0, None).expect("cubic isolation");
    println!("x^3 - 5x^2 + 15 has {} real roots:", cubic_roots.len());
    for iv in &cubic_roots {
        let tight = refine_root(&data.cubic_x0, iv, &width).expect("refinement");
        println!(
            "  root ~ {}  (bracket width {})",
            decimal_string(&tight.midpoint(), 12),
            decimal_string(&tight.width(), 3)
        );
    }

    let p2_roots =
        isolate_real_roots(&data.p2, Some((rat(1, 2), rat_int(1)))).expect("p2 isolation");
    println!("\np2 has {} roots in (1/2, 1):", p2_roots.len());
    for iv in &p2_roots {
        let tight = refine_root(&data.p2, iv, &width).expect("refinement");
        println!("  root ~ {}", decimal_string(&tight.midpoint(), 12));
    }

    let n = count_roots_in(&data.p2, &rat_int(-1), &rat_int(2)).expect("count");
    println!("\np2 has {n} distinct real roots in (-1, 2)");
}
