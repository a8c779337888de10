//! Evaluates ln, sqrt, and exp over exact rational intervals with
//! outward rounding, and shows the enclosures tightening as the working
//! precision doubles.
//!
//!     cargo run --release --example validated_intervals

use certipoly::kernel::{
    decimal_string, interval_exp, interval_ln, interval_sqrt, rat, PrecisionBudget,
    RationalInterval,
};

fn main() {
    let x = RationalInterval::new(rat(1999, 1000), rat(2001, 1000)).unwrap();

    for bits in [32u32, 64, 128, 256] {
        let prec = PrecisionBudget::new(bits, bits, 2).unwrap();
        let l = interval_ln(&x, &prec).expect("ln");
        let s = interval_sqrt(&x, &prec).expect("sqrt");
        let e = interval_exp(&x, &prec);
        println!("bits = {bits}");
        println!(
            "  ln   x in [{}, {}]  width {}",
            decimal_string(l.lo(), 15),
            decimal_string(l.hi(), 15),
            decimal_string(&l.width(), 3)
        );
        println!(
            "  sqrt x in [{}, {}]  width {}",
            decimal_string(s.lo(), 15),
            decimal_string(s.hi(), 15),
            decimal_string(&s.width(), 3)
        );
        println!(
            "  exp  x in [{}, {}]  width {}",
            decimal_string(e.lo(), 15),
            decimal_string(e.hi(), 15),
            decimal_string(&e.width(), 3)
        );
    }

    // the enclosures are genuine: ln 2 lies in every ln enclosure of a
    // point interval at 2, at any precision
    let two = RationalInterval::point(rat(2, 1));
    let coarse = interval_ln(&two, &PrecisionBudget::new(16, 16, 2).unwrap()).unwrap();
    let fine = interval_ln(&two, &PrecisionBudget::new(512, 512, 2).unwrap()).unwrap();
    assert!(coarse.contains_interval(&fine));
    println!(
        "\nln 2 in [{}, {}] at 512 bits (contained in every coarser enclosure)",
        decimal_string(fine.lo(), 30),
        decimal_string(fine.hi(), 30)
    );
}
