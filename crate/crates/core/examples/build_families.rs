//! Builds one polyhex of each family and checks the embedding.
//!
//! `cargo run --example build_families -- T:14,1,2 Ke:4,3 Ko:5,4`

use polyhex::polyhex::{build_polyhex, validate_polyhex, PolyhexSpec};

fn main() -> polyhex::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        vec!["T:14,1,2".to_string(), "Ke:4,3".into(), "Ko:5,4".into()]
    } else {
        args
    };
    for text in inputs {
        let spec: PolyhexSpec = text.parse()?;
        let e = build_polyhex(&spec)?;
        println!(
            "{spec}: {} vertices, {} edges, {} hexagons on the {:?}, bipartite: {}",
            e.graph.n(),
            e.graph.edge_count(),
            e.faces.len(),
            e.surface,
            e.graph.is_bipartite()
        );
        if !e.crossing_edges.is_empty() {
            let pairs: Vec<_> = e.crossing_edges.iter().map(|&x| e.graph.edge(x)).collect();
            println!("  E_0 = {pairs:?}");
        }
        for check in validate_polyhex(&e).checks {
            println!("  [{}] {} {}", if check.passed { "ok" } else { "FAILED" }, check.name, check.detail);
        }
    }
    Ok(())
}
