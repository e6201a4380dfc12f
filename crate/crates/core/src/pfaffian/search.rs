use rayon::prelude::*;
use serde::Serialize;

use super::{central_cycles, Orientation};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_SEARCH_BUDGET: usize = 24;
pub const BUDGET_ENV: &str = "POLYHEX_SEARCH_BUDGET";

/// Largest co-tree dimension the search accepts: `POLYHEX_SEARCH_BUDGET`
/// if set to an integer, otherwise 24.
pub fn search_budget() -> usize {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEARCH_BUDGET)
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub orientation: Option<Orientation>,
    /// Co-tree dimension `|E| - |V| + 1`; `2^dimension` classes exist.
    pub dimension: usize,
    pub classes_checked: u64,
    pub central_cycles: usize,
}

/// A central cycle projected onto the co-tree: it is oddly oriented under
/// co-tree assignment `a` iff `parity ^ popcount(a & mask)` is 1.
struct Constraint {
    mask: u64,
    parity: u32,
}

/// Searches switching classes of orientations: spanning-tree edges keep the
/// reference direction, co-tree assignments run in lexicographic order
/// (first co-tree edge is the most significant bit).
pub fn pfaffian_search_report(g: &Graph) -> Result<SearchReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dimension = g.cycle_space_dimension();
    let budget = search_budget().min(63);
    if dimension > budget {
        return Err(Error::SearchBudget { dimension, budget });
    }
    let in_tree = g.spanning_forest();
    let cotree: Vec<usize> = (0..g.edge_count()).filter(|&e| !in_tree[e]).collect();
    let mut bit = vec![None; g.edge_count()];
    for (i, &e) in cotree.iter().enumerate() {
        bit[e] = Some(dimension - 1 - i);
    }

    let cycles = central_cycles(g)?;
    let mut constraints: Vec<Constraint> = cycles
        .iter()
        .map(|c| {
            let mut mask = 0u64;
            let mut forward = 0u32;
            for (u, v) in c.steps() {
                let e = g.edge_id(u, v).expect("cycle edge");
                if u < v {
                    forward += 1;
                }
                if let Some(b) = bit[e] {
                    mask |= 1 << b;
                }
            }
            Constraint {
                mask,
                parity: forward % 2,
            }
        })
        .collect();
    // short cycles reject most candidates early
    constraints.sort_by_key(|c| c.mask.count_ones());

    let pfaffian = |a: u64| {
        constraints
            .iter()
            .all(|c| (c.parity ^ (a & c.mask).count_ones()) & 1 == 1)
    };
    let classes = 1u64 << dimension;
    let found = (0..classes).into_par_iter().find_first(|&a| pfaffian(a));
    let orientation = found.map(|a| {
        let forward = (0..g.edge_count())
            .map(|e| match bit[e] {
                Some(b) => a >> b & 1 == 0,
                None => true,
            })
            .collect();
        Orientation::from_forward(g, forward).expect("one direction per edge")
    });
    let classes_checked = found.map_or(classes, |a| a + 1);
    Ok(SearchReport {
        orientation,
        dimension,
        classes_checked,
        central_cycles: cycles.len(),
    })
}

/// A Pfaffian orientation, or `None` after exhausting every switching class.
pub fn pfaffian_search(g: &Graph) -> Result<Option<Orientation>> {
    Ok(pfaffian_search_report(g)?.orientation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::pfaffian::is_pfaffian_orientation;

    #[test]
    fn k33_has_no_pfaffian_orientation() {
        let r = pfaffian_search_report(&named::complete_bipartite(3, 3)).unwrap();
        assert!(r.orientation.is_none());
        assert_eq!(r.dimension, 4);
        assert_eq!(r.classes_checked, 16);
    }

    #[test]
    fn cube_and_heawood_are_pfaffian() {
        for g in [named::cube(), named::heawood()] {
            let d = pfaffian_search(&g).unwrap().unwrap();
            assert!(is_pfaffian_orientation(&d).unwrap());
        }
    }

    #[test]
    fn preconditions() {
        let two_squares = Graph::new(8, (0..4).flat_map(|i| [(i, (i + 1) % 4), (4 + i, 4 + (i + 1) % 4)]))
            .unwrap();
        assert_eq!(pfaffian_search(&two_squares), Err(Error::Disconnected));
        assert_eq!(pfaffian_search(&named::star(3)), Err(Error::NoPerfectMatching));
    }
}
