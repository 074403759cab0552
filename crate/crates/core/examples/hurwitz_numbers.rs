//! Real Hurwitz numbers H_G of every garden of a given weight, computed by
//! the closed formula and by the pants collection, next to the complex
//! genus 0 and genus 1 numbers.
//!
//! cargo run --release --example hurwitz_numbers -- 4

use gardens::enumerate::{enumerate_gardens, Budget, EnumerationQuery};
use gardens::hurwitz::{complex_hurwitz_g0, complex_hurwitz_g1, direct_count_garden, hurwitz_garden, to_decimal_string};

fn main() {
    let n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let r = enumerate_gardens(&EnumerationQuery::new(n), Budget::default()).expect("within budget");
    for g in &r.gardens {
        let h = hurwitz_garden(g).unwrap();
        let d = direct_count_garden(g).unwrap();
        println!(
            "l={} H_G={} direct={} {}",
            g.diagram.chord_count(),
            to_decimal_string(&h),
            to_decimal_string(&d),
            g.to_json_string()
        );
    }
    for m in 1..=n.max(2) {
        let g1 = if m >= 2 { to_decimal_string(&complex_hurwitz_g1(m).unwrap()) } else { "-".into() };
        println!("n={m} complex g0={} g1={g1}", to_decimal_string(&complex_hurwitz_g0(m).unwrap()));
    }
}
