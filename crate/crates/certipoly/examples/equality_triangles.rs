//! Checks the equality triangles of both families with validated
//! interval arithmetic: a:b:c = 2(x1^2-3) : (x1^2+3) : (x1^2+3) at the
//! best exponent, and a:b:c = 2 t1 : 1 : 1 at the best coefficient.
//! Both sides of each inequality agree to within 1e-8 relative.
//!
//!     cargo run --release --example equality_triangles

use certipoly::analytic::{
    best_exponent_interval, certify_monotone_chain_theorem1, equality_case_theorem1,
    equality_case_theorem2, g_derivatives, refine_transcendental_root, theorem2_certify,
};
use certipoly::dataio::DataSet;
use certipoly::expr::Sign;
use certipoly::kernel::{decimal_string, rat, PrecisionBudget};
use std::path::Path;

fn main() {
    let data = DataSet::load(Path::new("data")).expect("data files");
    let prec = PrecisionBudget::default();
    let tol = rat(1, 100_000_000);

    let chain =
        certify_monotone_chain_theorem1(&data, &prec, &rat(1, 100_000_000)).expect("cascade");
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
    let lambda = best_exponent_interval(&x1, &prec).expect("best exponent");
    let eq1 = equality_case_theorem1(&x1, &lambda, &prec, &tol).expect("equality check");
    println!(
        "exponent family: equality at x1 ~ {} holds within 1e-8 relative: {}",
        decimal_string(&x1.midpoint(), 10),
        eq1
    );
    assert!(eq1);

    let cert = theorem2_certify(&data, &prec).expect("certification");
    let eq2 = equality_case_theorem2(&cert.t1, &cert.k0, &prec, &tol).expect("equality check");
    println!(
        "coefficient family: equality at t1 ~ {} holds within 1e-8 relative: {}",
        decimal_string(&cert.t1.midpoint(), 10),
        eq2
    );
    assert!(eq2);
}
