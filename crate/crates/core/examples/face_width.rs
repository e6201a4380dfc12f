//! Compares the face-width formula with the shared-edge witness on small
//! tori and Klein polyhexes.

use polyhex::polyhex::{build_polyhex, face_width_class, face_width_witness, FaceWidthClass, PolyhexSpec};

fn main() -> polyhex::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(16);
    for spec in PolyhexSpec::enumerate(max) {
        let formula = face_width_class(&spec);
        let witness = face_width_witness(&build_polyhex(&spec)?);
        let mark = if witness.is_some() == (formula == FaceWidthClass::Two) { "" } else { "  <- disagree" };
        let formula = formula.to_string();
        match witness {
            Some(w) => println!("{spec:<10} formula {formula:<3} witness faces {:?}{mark}", w.faces),
            None => println!("{spec:<10} formula {formula:<3} no witness{mark}"),
        }
    }
    Ok(())
}
