//! Eliminates t between p2(t) and the bivariate eliminant p3(t, k) via
//! an exact Sylvester resultant (evaluation-interpolation in k), then
//! verifies that the resulting degree-80 polynomial in k factors exactly
//! as m * p4(k) * p5(k).
//!
//! The checked-in p3 has its content (1-t)^2 (2t-1)^4 removed, so the
//! resultant of p2 against that content is restored before division.
//!
//!     cargo run --release --example resultant_factorization

use certipoly::dataio::DataSet;
use certipoly::kernel::format_rational;
use certipoly::resultant::{
    resultant_in_t, resultant_univariate, verify_factorization, BivariatePolynomial,
};
use certipoly::UnivariatePolynomial;
use std::path::Path;

fn main() {
    let data = DataSet::load(Path::new("data")).expect("data files");

    let r = resultant_in_t(&BivariatePolynomial::from_univariate_t(&data.p2), &data.p3)
        .expect("resultant");
    println!("Res_t(p2, p3) has degree {} in k", r.degree().unwrap());

    let content = UnivariatePolynomial::from_integers(&[1, -1])
        .pow(2)
        .mul(&UnivariatePolynomial::from_integers(&[-1, 2]).pow(4));
    let content_res = resultant_univariate(&data.p2, &content).expect("content resultant");
    println!("Res(p2, (1-t)^2 (2t-1)^4) = {}", format_rational(&content_res));

    let full = r.scale(&content_res);
    let ok = verify_factorization(&full, &[data.p4.clone(), data.p5.clone()], &data.m);
    println!(
        "full resultant / (p4 * p5) leaves exactly the constant m ({} digits): {}",
        format_rational(&data.m).len(),
        if ok { "yes" } else { "NO" }
    );
    assert!(ok);
}
