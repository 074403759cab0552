//! Pants Hurwitz numbers from the closed formula against an independent count
//! of permutation factorizations, and the complex genus 0 numbers against
//! explicit transposition tuples.
//!
//! cargo run --release --example pants_oracle

use gardens::hurwitz::{complex_g0_oracle, complex_hurwitz_g0, factorization_oracle, hurwitz_pants, to_decimal_string};

fn main() {
    let cases: [&[u64]; 9] = [&[1], &[2], &[3], &[4], &[1, 1], &[1, 2], &[2, 2], &[1, 3], &[1, 1, 1]];
    for w in cases {
        let formula = hurwitz_pants(w).unwrap();
        let oracle = factorization_oracle(w).unwrap();
        println!(
            "{w:?}: formula={} oracle={} {}",
            to_decimal_string(&formula),
            to_decimal_string(&oracle),
            if formula == oracle { "agree" } else { "DIFFER" }
        );
    }
    for n in 1..=4 {
        let o = complex_g0_oracle(n);
        println!(
            "n={n}: complex g0 formula={} tuples/n!={} orbits={}",
            to_decimal_string(&complex_hurwitz_g0(n).unwrap()),
            to_decimal_string(&o.mass),
            o.orbits
        );
    }
}
