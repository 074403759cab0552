//! For each degree, the number of garden classes and the sum of H_G per
//! number of real critical values, as CSV.
//!
//! cargo run --release --example component_tables -- 5

use gardens::enumerate::Budget;
use gardens::hurwitz::real_hurwitz_table;

fn main() {
    let max_n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    println!("n,l,count,sum_HG");
    for n in 1..=max_n {
        match real_hurwitz_table(n, Budget::default()) {
            Ok(t) => {
                for (l, row) in &t.rows {
                    println!("{n},{l},{},{}", row.gardens, row.sum);
                }
            }
            Err(e) => {
                eprintln!("n={n}: {e}");
                break;
            }
        }
    }
}
