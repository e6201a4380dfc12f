//! Finds a Pfaffian orientation of the Heawood graph, counts its perfect
//! matchings two ways, then breaks the orientation and shows the verifier
//! catching it. K_{3,3} has no Pfaffian orientation at all.

use polyhex::graph::{count_perfect_matchings, named};
use polyhex::pfaffian::{first_violation, matching_count_by_determinant, pfaffian_search_report};

fn main() -> polyhex::Result<()> {
    let heawood = named::heawood();
    let report = pfaffian_search_report(&heawood)?;
    println!(
        "Heawood: {} central cycles, cycle space dimension {}, {} classes tried",
        report.central_cycles, report.dimension, report.classes_checked
    );
    let mut d = report.orientation.expect("the Heawood graph is Pfaffian");
    println!("orientation: {}", d.to_json());
    println!(
        "perfect matchings: {} by sqrt(det), {} by enumeration",
        matching_count_by_determinant(&d)?,
        count_perfect_matchings(&heawood)
    );

    d.reverse_edge(0);
    if let Some(c) = first_violation(&d)? {
        println!("after reversing edge {:?}: central cycle {:?} is evenly oriented", heawood.edge(0), c.vertices());
    }

    let k33 = named::complete_bipartite(3, 3);
    let report = pfaffian_search_report(&k33)?;
    println!(
        "K33: Pfaffian {} after {} classes; {} perfect matchings",
        report.orientation.is_some(),
        report.classes_checked,
        count_perfect_matchings(&k33)
    );
    Ok(())
}
