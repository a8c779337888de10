//! Certifies the best coefficient k0 of the k-family: isolates the two
//! candidate roots of p2 in (1/2, 1), rejects the extraneous one by a
//! certified sign evaluation of the critical equation, evaluates
//! k0 = h(t1) as a validated interval, and pins k0 down as the unique
//! root of p4 in (1/2, 9/13).
//!
//!     cargo run --release --example best_coefficient

use certipoly::analytic::theorem2_certify;
use certipoly::dataio::DataSet;
use certipoly::kernel::{decimal_string, PrecisionBudget};
use std::path::Path;

fn main() {
    let data = DataSet::load(Path::new("data")).expect("data files");
    let prec = PrecisionBudget::default();

    let cert = theorem2_certify(&data, &prec).expect("certification");
    println!(
        "t1 ~ {}  (genuine critical point)",
        decimal_string(&cert.t1.midpoint(), 11)
    );
    println!(
        "t2 ~ {}  (extraneous, rejected)",
        decimal_string(&cert.t2.midpoint(), 11)
    );
    for c in &cert.certificates {
        println!("  certificate: {} at {} -> {} ({} bits)", c.subject, c.at, c.sign, c.bits_used);
    }
    println!(
        "k0 in [{}, {}]",
        decimal_string(cert.k0.lo(), 11),
        decimal_string(cert.k0.hi(), 11)
    );
    println!(
        "p4 root in the window ~ {}  (bracketed by k0's endpoints)",
        decimal_string(&cert.p4_root.midpoint(), 11)
    );
}
