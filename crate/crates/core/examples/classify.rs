//! Closed-form Pfaffian classification of every polyhex up to a size.
//!
//! `cargo run --example classify -- 24`

use polyhex::cli::cmd_classify;
use polyhex::polyhex::PolyhexSpec;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(20);
    println!("{:<10} {:>8} {:<14} {:>7} {:>4}", "spec", "pfaffian", "reason", "planar", "fw");
    for spec in PolyhexSpec::enumerate(max) {
        let c = cmd_classify(&spec);
        println!(
            "{:<10} {:>8} {:<14} {:>7} {:>4}",
            spec.to_string(),
            c.pfaffian,
            c.reason.to_string(),
            c.planar,
            c.face_width_class
        );
    }
}
