//! Counts garden classes by total weight and chord count, and prints the
//! canonical representatives for a small weight.
//!
//! cargo run --release --example enumerate_gardens -- 5

use gardens::enumerate::{count_components, enumerate_gardens, Budget, EnumerationQuery};

fn main() {
    let max_n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for n in 1..=max_n {
        let c = count_components(n, Budget::default()).expect("within budget");
        let by_l: Vec<String> = c.by_order.iter().map(|(l, k)| format!("l={l}:{k}")).collect();
        println!("n={n} total={} [{}]", c.total(), by_l.join(" "));
    }

    println!("\nweight 3 representatives:");
    let r = enumerate_gardens(&EnumerationQuery::new(3), Budget::default()).unwrap();
    for g in &r.gardens {
        println!("{}", g.to_json_string());
    }
}
