//! Tri-sums of braces, ideal tri-cuts, and the cyclic 4-edge-connectivity
//! of cubic Pfaffian braces.

mod trisum;
mod tricut;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{
    cyclic_edge_connectivity, find_isomorphism, is_brace, minimum_cyclic_edge_cut, named,
    CyclicConnectivity, EdgeCut, Graph,
};
use crate::pfaffian::pfaffian_search;

pub use tricut::{find_ideal_tri_cut, TriCut, TriCutSide};
pub use trisum::{tri_sum_compose, TriSumJson, TriSumSpec};

#[derive(Debug, Clone, Serialize)]
pub struct BraceConnectivityReport {
    /// Names of failed preconditions: `cubic`, `brace`, `pfaffian`,
    /// `not-heawood`.
    pub failed_preconditions: Vec<&'static str>,
    pub cyclic_connectivity: Option<CyclicConnectivity>,
    pub cut: Option<EdgeCut>,
    pub holds: bool,
}

/// For a cubic Pfaffian brace other than the Heawood graph, checks that the
/// cyclic edge-connectivity is exactly 4 and returns a witnessing cut.
pub fn verify_pfaffian_brace_connectivity(g: &Graph) -> Result<BraceConnectivityReport> {
    let mut failed = Vec::new();
    let cubic = g.is_cubic();
    if !cubic {
        failed.push("cubic");
    }
    if !is_brace(g) {
        failed.push("brace");
    }
    if failed.is_empty() && pfaffian_search(g)?.is_none() {
        failed.push("pfaffian");
    }
    if cubic && find_isomorphism(g, &named::heawood(), None).is_some() {
        failed.push("not-heawood");
    }
    if !failed.is_empty() {
        return Ok(BraceConnectivityReport {
            failed_preconditions: failed,
            cyclic_connectivity: None,
            cut: None,
            holds: false,
        });
    }
    let cut = minimum_cyclic_edge_cut(g);
    let connectivity = cyclic_edge_connectivity(g);
    Ok(BraceConnectivityReport {
        failed_preconditions: failed,
        holds: connectivity == CyclicConnectivity::Finite(4),
        cyclic_connectivity: Some(connectivity),
        cut,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_and_cube_trisum() {
        let r = verify_pfaffian_brace_connectivity(&named::cube()).unwrap();
        assert!(r.holds);
        assert_eq!(r.cut.unwrap().len(), 4);

        let spec = TriSumSpec::uniform(&named::cube(), [0, 1, 3, 2], [true; 4]);
        let g = tri_sum_compose(&spec).unwrap();
        let r = verify_pfaffian_brace_connectivity(&g).unwrap();
        assert!(r.failed_preconditions.is_empty(), "{:?}", r.failed_preconditions);
        assert_eq!(r.cyclic_connectivity, Some(CyclicConnectivity::Finite(4)));
        assert!(r.cut.unwrap().is_cyclic(&g));
        assert!(r.holds);
    }

    #[test]
    fn k33_trisum_is_not_a_brace() {
        // the three K2 sides' edges form a cyclic 3-edge-cut
        let k33 = named::complete_bipartite(3, 3);
        let g = tri_sum_compose(&TriSumSpec::uniform(&k33, [0, 3, 1, 4], [true; 4])).unwrap();
        assert_eq!(cyclic_edge_connectivity(&g), CyclicConnectivity::Finite(3));
        let r = verify_pfaffian_brace_connectivity(&g).unwrap();
        assert_eq!(r.failed_preconditions, vec!["brace"]);
    }

    #[test]
    fn heawood_and_k33_fail_preconditions() {
        let r = verify_pfaffian_brace_connectivity(&named::heawood()).unwrap();
        assert_eq!(r.failed_preconditions, vec!["not-heawood"]);
        assert!(!r.holds);
        let r = verify_pfaffian_brace_connectivity(&named::complete_bipartite(3, 3)).unwrap();
        assert_eq!(r.failed_preconditions, vec!["pfaffian"]);
        let r = verify_pfaffian_brace_connectivity(&named::petersen()).unwrap();
        assert_eq!(r.failed_preconditions, vec!["brace"]);
    }
}
