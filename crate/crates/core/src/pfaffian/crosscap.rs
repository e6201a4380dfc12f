use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{enumerate_cycles, Cycle};
use crate::polyhex::Embedding;

#[derive(Debug, Clone, Serialize)]
pub struct CrossCapReport {
    pub holds: bool,
    pub cycles_checked: usize,
    /// Cycles crossing `E_0` an odd number of times.
    pub one_sided: usize,
    pub first_violation: Option<Cycle>,
}

/// Checks `|E(C)| ≡ |E(C) ∩ E_0| (mod 2)` for every cycle `C`, i.e. a
/// cycle is odd exactly when it is one-sided.
pub fn cross_cap_odd_check(e: &Embedding) -> Result<CrossCapReport> {
    if e.crossing_edges.is_empty() {
        return Err(Error::NoCrossingEdges);
    }
    let mut crossing = vec![false; e.graph.edge_count()];
    for &x in &e.crossing_edges {
        crossing[x] = true;
    }
    let cycles = enumerate_cycles(&e.graph);
    let mut one_sided = 0;
    let mut first_violation = None;
    for c in &cycles {
        let delta = c.edges().iter().filter(|&&x| crossing[x]).count();
        if delta % 2 == 1 {
            one_sided += 1;
        }
        if first_violation.is_none() && delta % 2 != c.len() % 2 {
            first_violation = Some(c.clone());
        }
    }
    Ok(CrossCapReport {
        holds: first_violation.is_none(),
        cycles_checked: cycles.len(),
        one_sided,
        first_violation,
    })
}
