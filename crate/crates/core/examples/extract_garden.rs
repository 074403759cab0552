//! Garden of a real rational function given by coefficient lists in
//! ascending degree.
//!
//! cargo run --release --example extract_garden -- "-1,0,1" "1"
//! cargo run --release --example extract_garden -- "0,3,0,1"

use gardens::extract::{extract, RationalFunction, TraceConfig};
use gardens::hurwitz::{hurwitz_garden, to_decimal_string};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = args.first().map_or("-1,0,1", String::as_str);
    let den = args.get(1).map_or("1", String::as_str);
    let split = |s: &str| s.split(',').map(|c| c.trim().to_string()).collect::<Vec<_>>();
    let f = RationalFunction::from_strs(&split(num), &split(den)).expect("coefficients parse");
    match extract(&f, &TraceConfig::default()) {
        Ok(e) => {
            println!("garden      {}", e.garden.to_json_string());
            println!("diagnostics {}", serde_json::to_string(&e.diagnostics).unwrap());
            for c in &e.tracing.curves {
                println!("curve {:?} weight {:?} counts {:?} ({} points)", c.kind, c.weight, c.counts, c.polyline.len());
            }
            println!("H_G = {}", to_decimal_string(&hurwitz_garden(&e.garden).unwrap()));
        }
        Err(err) => println!("no garden: {err}"),
    }
}
