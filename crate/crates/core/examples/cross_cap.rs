//! Checks that every cycle of a non-bipartite Klein polyhex is odd
//! exactly when it is one-sided.

use polyhex::pfaffian::cross_cap_odd_check;
use polyhex::polyhex::{build_polyhex, PolyhexSpec};

fn main() -> polyhex::Result<()> {
    for text in ["Ko:3,2", "Ko:4,4", "Ko:6,4", "Ko:5,4"] {
        let spec: PolyhexSpec = text.parse()?;
        let r = cross_cap_odd_check(&build_polyhex(&spec)?)?;
        println!(
            "{spec}: {} cycles, {} one-sided, cross-cap-odd: {}",
            r.cycles_checked, r.one_sided, r.holds
        );
        if let Some(c) = r.first_violation {
            println!("  counterexample {:?}", c.vertices());
        }
    }
    Ok(())
}
