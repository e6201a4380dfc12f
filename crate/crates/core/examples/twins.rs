//! Pairs every torus with its twin and finds an isomorphism mapping
//! hexagons to hexagons.

use polyhex::graph::{find_isomorphism, FaceLists};
use polyhex::polyhex::{build_polyhex, torus_param_twin, Family, PolyhexSpec};

fn main() -> polyhex::Result<()> {
    for spec in PolyhexSpec::enumerate(20).into_iter().filter(|s| s.family() == Family::Torus) {
        let twin = torus_param_twin(&spec)?;
        if twin < spec {
            continue;
        }
        let (a, b) = (build_polyhex(&spec)?, build_polyhex(&twin)?);
        let (fa, fb) = (a.face_boundaries(), b.face_boundaries());
        let map = find_isomorphism(&a.graph, &b.graph, Some(FaceLists { first: &fa, second: &fb }));
        match map {
            Some(_) if spec == twin => println!("{spec} is its own twin"),
            Some(m) => println!("{spec} ~ {twin}: {m:?}"),
            None => println!("{spec} and {twin}: no hexagon-preserving isomorphism"),
        }
    }
    Ok(())
}
