//! Computes complete discrimination sequences, revised sign lists, and
//! exact root counts for the two key integer polynomials p (degree 18,
//! no real roots) and p2 (degree 10, six distinct real roots).
//!
//!     cargo run --release --example sign_lists

use certipoly::dataio::DataSet;
use certipoly::discrimination::{count_roots, discriminant_sequence, revise_sign_list};
use certipoly::UnivariatePolynomial;
use std::path::Path;

fn show(name: &str, f: &UnivariatePolynomial) {
    let seq = discriminant_sequence(f).expect("discriminant sequence");
    let revised = revise_sign_list(&seq.sign_list());
    let counts = count_roots(f).expect("root counts");
    println!("{name} (degree {:?})", f.degree().unwrap());
    println!("  revised sign list: {}", revised.bracketed());
    println!(
        "  sign changes: {}  =>  {} distinct real roots, {} imaginary pairs",
        revised.sign_changes(),
        counts.distinct_real,
        counts.imaginary_pairs
    );
}

fn main() {
    let data = DataSet::load(Path::new("data")).expect("data files");

    show("p", &data.p);
    show("p2", &data.p2);
    show("p5", &data.p5);

    // a small hand-checkable case: (x^2+1)(x-2) has one real root
    let small = UnivariatePolynomial::from_integers(&[-2, 1, -2, 1]);
    show("(x^2+1)(x-2)", &small);
}
