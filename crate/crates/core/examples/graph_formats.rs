//! Writes a polyhex as graph6, DOT and JSON, and reads the graph back.

use polyhex::cli::{cmd_gen, GenFormat};
use polyhex::graph::format::{from_graph6, from_json, to_json};
use polyhex::polyhex::{build_polyhex, PolyhexSpec};

fn main() -> polyhex::Result<()> {
    let spec: PolyhexSpec = std::env::args().nth(1).as_deref().unwrap_or("Ke:4,2").parse()?;
    let g6 = cmd_gen(&spec, GenFormat::Graph6)?;
    println!("graph6: {}", g6.trim());
    print!("{}", cmd_gen(&spec, GenFormat::Dot)?);

    let g = build_polyhex(&spec)?.graph;
    assert_eq!(from_graph6(g6.trim())?, g);
    assert_eq!(from_json(&to_json(&g))?, g);
    println!("graph6 and edge-list JSON read back unchanged");
    Ok(())
}
