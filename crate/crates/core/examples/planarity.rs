//! Closed-form planarity against the planarity test and a verified
//! K_{3,3} subdivision.

use polyhex::graph::{find_k33_subdivision, is_planar};
use polyhex::polyhex::{build_polyhex, is_planar_polyhex, PolyhexSpec};

fn main() -> polyhex::Result<()> {
    for spec in PolyhexSpec::enumerate(20) {
        let g = build_polyhex(&spec)?.graph;
        let witness = find_k33_subdivision(&g)?;
        let formula = is_planar_polyhex(&spec);
        print!("{spec:<10} formula {formula:<5} planar {:<5}", is_planar(&g));
        match witness {
            Some(w) => println!(" K33 {:?} | {:?} verified {}", w.left, w.right, w.verify(&g)),
            None => println!(" no K33"),
        }
    }
    Ok(())
}
