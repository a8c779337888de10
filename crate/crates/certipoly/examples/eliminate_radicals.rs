//! Replays the radical-elimination chain on the t-side of the k-family:
//! checks the closed-form rationalization identity against p2 and
//! rederives the eliminant p3(t, k) from scratch, comparing it with the
//! checked-in copy.
//!
//!     cargo run --release --example eliminate_radicals

use certipoly::dataio::DataSet;
use certipoly::resultant::{derive_eliminant, radical_identity_holds};
use std::path::Path;

fn main() {
    let data = DataSet::load(Path::new("data")).expect("data files");

    let ok = radical_identity_holds(&data.p2);
    println!("rationalization identity against p2: {}", if ok { "holds" } else { "FAILS" });
    assert!(ok);

    let derived = derive_eliminant().expect("elimination");
    println!(
        "derived eliminant: degree {} in t, degree {} in k",
        derived.degree_t().unwrap(),
        derived.degree_k().unwrap()
    );
    let matches = derived == data.p3;
    println!(
        "matches the checked-in p3 coefficient-for-coefficient: {}",
        if matches { "yes" } else { "NO" }
    );
    assert!(matches);
}
