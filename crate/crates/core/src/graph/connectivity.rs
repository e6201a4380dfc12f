//! Vertex connectivity by exhaustive separator search, and cyclic edge
//! connectivity as a minimum over pairs of disjoint cycles of the max-flow
//! between them.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{enumerate_cycles, induced_cycles, EdgeCut, Graph};

/// True iff no set of fewer than `k` vertices disconnects `g`.
pub fn vertex_connectivity_at_least(g: &Graph, k: usize) -> bool {
    assert!(k >= 1, "connectivity threshold must be positive");
    let mut removed = vec![false; g.n()];
    separator_free(g, k - 1, 0, &mut removed)
}

fn separator_free(g: &Graph, budget: usize, from: usize, removed: &mut [bool]) -> bool {
    if g.components_avoiding(removed).len() > 1 {
        return false;
    }
    if budget == 0 {
        return true;
    }
    for v in from..g.n() {
        removed[v] = true;
        let ok = separator_free(g, budget - 1, v + 1, removed);
        removed[v] = false;
        if !ok {
            return false;
        }
    }
    true
}

/// Cyclic edge connectivity; `Infinite` orders above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CyclicConnectivity {
    Finite(usize),
    Infinite,
}

impl CyclicConnectivity {
    pub fn at_least(self, k: usize) -> bool {
        self >= CyclicConnectivity::Finite(k)
    }
}

impl fmt::Display for CyclicConnectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicConnectivity::Finite(k) => write!(f, "{k}"),
            CyclicConnectivity::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for CyclicConnectivity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CyclicConnectivity::Finite(k) => s.serialize_u64(*k as u64),
            CyclicConnectivity::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Unit-capacity flow network on the undirected graph with two terminal
/// vertex sets contracted.
struct CutSolver<'g> {
    g: &'g Graph,
}

impl<'g> CutSolver<'g> {
    /// Max flow between `source` and `sink`, stopping once it reaches
    /// `limit`. Returns the flow value and, when below `limit`, the source
    /// side of a minimum cut.
    fn min_cut(
        &self,
        source: &FixedBitSet,
        sink: &FixedBitSet,
        limit: usize,
    ) -> (usize, Option<Vec<bool>>) {
        let g = self.g;
        // flow[e]: +1 along (u -> v) of edge (u, v), -1 along (v -> u)
        let mut flow = vec![0i8; g.edge_count()];
        let mut value = 0;
        loop {
            if value >= limit {
                return (value, None);
            }
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; g.n()];
            let mut seen = vec![false; g.n()];
            let mut queue = VecDeque::new();
            for s in source.ones() {
                seen[s] = true;
                queue.push_back(s);
            }
            let mut reached = None;
            'bfs: while let Some(u) = queue.pop_front() {
                for &(w, e) in g.incident(u) {
                    if seen[w] {
                        continue;
                    }
                    let forward = if g.edge(e).0 == u { 1 } else { -1 };
                    // residual capacity of u -> w is 1 - flow in that direction
                    if flow[e] * forward >= 1 {
                        continue;
                    }
                    seen[w] = true;
                    prev[w] = Some((u, e));
                    if sink.contains(w) {
                        reached = Some(w);
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
            let Some(mut t) = reached else {
                return (value, Some(seen));
            };
            while let Some((u, e)) = prev[t] {
                let forward = if g.edge(e).0 == u { 1 } else { -1 };
                flow[e] += forward;
                t = u;
                if source.contains(t) {
                    break;
                }
            }
            value += 1;
        }
    }
}

/// A minimum cyclic edge cut, or `None` when no two vertex-disjoint cycles
/// exist.
pub fn minimum_cyclic_edge_cut(g: &Graph) -> Option<EdgeCut> {
    let all = enumerate_cycles(g);
    // every side of a cyclic cut contains a chordless cycle
    let cycles = induced_cycles(g, &all);
    let sets: Vec<FixedBitSet> = cycles
        .iter()
        .map(|c| {
            let mut s = FixedBitSet::with_capacity(g.n());
            for &v in c.vertices() {
                s.insert(v);
            }
            s
        })
        .collect();
    let solver = CutSolver { g };

    // Upper bound from the first disjoint pair, then prune with it.
    let best_for = |i: usize, bound: usize| -> Option<(usize, Vec<bool>)> {
        let mut best: Option<(usize, Vec<bool>)> = None;
        let mut limit = bound;
        for j in i + 1..sets.len() {
            if !sets[i].is_disjoint(&sets[j]) {
                continue;
            }
            let (value, side) = solver.min_cut(&sets[i], &sets[j], limit);
            if let Some(side) = side {
                if value < limit {
                    limit = value;
                    best = Some((value, side));
                }
            }
        }
        best
    };

    let limit = g.edge_count() + 1;
    let best = (0..sets.len())
        .into_par_iter()
        .filter_map(|i| best_for(i, limit).map(|(v, side)| (v, i, side)))
        .min_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)))?;
    let (_, _, side) = best;
    let inside: Vec<usize> = (0..g.n()).filter(|&v| side[v]).collect();
    let outside: Vec<usize> = (0..g.n()).filter(|&v| !side[v]).collect();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| side[u] != side[v])
        .map(|(e, _)| e)
        .collect();
    Some(EdgeCut {
        edges,
        sides: (inside, outside),
    })
}

pub fn cyclic_edge_connectivity(g: &Graph) -> CyclicConnectivity {
    match minimum_cyclic_edge_cut(g) {
        Some(cut) => CyclicConnectivity::Finite(cut.len()),
        None => CyclicConnectivity::Infinite,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn vertex_connectivity_examples() {
        assert!(vertex_connectivity_at_least(&named::heawood(), 3));
        assert!(!vertex_connectivity_at_least(&named::heawood(), 4));
        assert!(!vertex_connectivity_at_least(&named::path(3), 2));
        assert!(vertex_connectivity_at_least(&named::path(3), 1));
        assert!(vertex_connectivity_at_least(&named::complete_bipartite(3, 3), 3));
        assert!(!vertex_connectivity_at_least(&Graph::empty(2), 1));
    }

    #[test]
    fn k33_has_no_cyclic_cut() {
        let g = named::complete_bipartite(3, 3);
        assert_eq!(cyclic_edge_connectivity(&g), CyclicConnectivity::Infinite);
        assert!(cyclic_edge_connectivity(&g).at_least(100));
    }

    #[test]
    fn small_cyclic_connectivities() {
        assert_eq!(cyclic_edge_connectivity(&named::cube()), CyclicConnectivity::Finite(4));
        assert_eq!(cyclic_edge_connectivity(&named::heawood()), CyclicConnectivity::Finite(6));
        assert_eq!(cyclic_edge_connectivity(&named::petersen()), CyclicConnectivity::Finite(5));
        // two triangles joined by one edge
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap();
        assert_eq!(cyclic_edge_connectivity(&g), CyclicConnectivity::Finite(1));
    }

    #[test]
    fn witness_cut_is_cyclic() {
        let g = named::heawood();
        let cut = minimum_cyclic_edge_cut(&g).unwrap();
        assert_eq!(cut.len(), 6);
        assert!(cut.is_cyclic(&g));
        let after = g.without_edges(&cut.edges);
        assert!(after.components().len() >= 2);
    }
}
