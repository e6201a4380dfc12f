//! Orientations, central cycles and Pfaffian orientations.
//!
//! An orientation is Pfaffian when every central cycle (an even cycle whose
//! removal leaves a graph with a perfect matching) has an odd number of
//! edges pointing along any traversal.

mod classify;
mod crosscap;
mod determinant;
mod search;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{enumerate_cycles, has_perfect_matching_avoiding, Cycle, EdgeId, Graph};

pub use classify::{classify_pfaffian, Classification, PfaffianReason, PfaffianVerdict};
pub use crosscap::{cross_cap_odd_check, CrossCapReport};
pub use determinant::{matching_count_by_determinant, skew_determinant, SkewIntMatrix};
pub use search::{
    pfaffian_search, pfaffian_search_report, search_budget, SearchReport, BUDGET_ENV,
    DEFAULT_SEARCH_BUDGET,
};

/// A direction for every edge of `host`. `forward[e]` means edge `(u, v)`
/// with `u < v` points `u -> v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    host: Graph,
    forward: Vec<bool>,
}

impl Orientation {
    /// Every edge from its smaller to its larger endpoint.
    pub fn reference(g: &Graph) -> Self {
        Orientation {
            host: g.clone(),
            forward: vec![true; g.edge_count()],
        }
    }

    /// From `(tail, head)` pairs covering each edge exactly once.
    pub fn from_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut forward: Vec<Option<bool>> = vec![None; g.edge_count()];
        for &(tail, head) in pairs {
            let e = g
                .edge_id(tail, head)
                .ok_or_else(|| Error::InvalidOrientation(format!("{tail}->{head} is not an edge")))?;
            if forward[e].replace(tail < head).is_some() {
                return Err(Error::InvalidOrientation(format!(
                    "edge {tail}-{head} oriented twice"
                )));
            }
        }
        let forward = forward
            .into_iter()
            .enumerate()
            .map(|(e, f)| {
                f.ok_or_else(|| {
                    let (u, v) = g.edge(e);
                    Error::InvalidOrientation(format!("edge {u}-{v} has no direction"))
                })
            })
            .collect::<Result<_>>()?;
        Ok(Orientation {
            host: g.clone(),
            forward,
        })
    }

    pub fn from_forward(g: &Graph, forward: Vec<bool>) -> Result<Self> {
        if forward.len() != g.edge_count() {
            return Err(Error::InvalidOrientation(format!(
                "{} directions for {} edges",
                forward.len(),
                g.edge_count()
            )));
        }
        Ok(Orientation {
            host: g.clone(),
            forward,
        })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// `(tail, head)` of edge `e`.
    pub fn direction(&self, e: EdgeId) -> (usize, usize) {
        let (u, v) = self.host.edge(e);
        if self.forward[e] {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.host.edge_count()).map(|e| self.direction(e)).collect()
    }

    pub fn reverse_edge(&mut self, e: EdgeId) {
        self.forward[e] = !self.forward[e];
    }

    /// Reverses every edge at `v`.
    pub fn switch_at(&mut self, v: usize) {
        for &(_, e) in self.host.incident(v) {
            self.forward[e] = !self.forward[e];
        }
    }

    pub fn to_json(&self) -> String {
        let pairs: Vec<[usize; 2]> = self.pairs().into_iter().map(|(t, h)| [t, h]).collect();
        serde_json::to_string(&pairs).expect("pairs serialise")
    }

    /// Parses `[[tail, head], ...]`.
    pub fn from_json(g: &Graph, text: &str) -> Result<Self> {
        let pairs: Vec<[usize; 2]> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let pairs: Vec<(usize, usize)> = pairs.into_iter().map(|[t, h]| (t, h)).collect();
        Self::from_pairs(g, &pairs)
    }
}

impl Serialize for Orientation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[usize; 2]> = self.pairs().into_iter().map(|(t, h)| [t, h]).collect();
        pairs.serialize(s)
    }
}

/// Even cycles `C` such that `g - V(C)` has a perfect matching, in the
/// order of [`enumerate_cycles`] (by length, then edge ids).
pub fn central_cycles(g: &Graph) -> Result<Vec<Cycle>> {
    let none = vec![false; g.n()];
    if !has_perfect_matching_avoiding(g, &none) {
        return Err(Error::NoPerfectMatching);
    }
    let dimension = g.cycle_space_dimension();
    if dimension >= 40 {
        return Err(Error::SearchBudget {
            dimension,
            budget: 39,
        });
    }
    let mut removed = vec![false; g.n()];
    Ok(enumerate_cycles(g)
        .into_iter()
        .filter(|c| {
            if !c.is_even() {
                return false;
            }
            for &v in c.vertices() {
                removed[v] = true;
            }
            let central = has_perfect_matching_avoiding(g, &removed);
            for &v in c.vertices() {
                removed[v] = false;
            }
            central
        })
        .collect())
}

/// Whether an odd number of edges of `c` point along its traversal.
pub fn is_oddly_oriented(c: &Cycle, d: &Orientation) -> Result<bool> {
    if !c.is_even() {
        return Err(Error::OddCycle(c.len()));
    }
    let mut forward = 0;
    for (u, v) in c.steps() {
        let e = d
            .host
            .edge_id(u, v)
            .ok_or_else(|| Error::NotAnEdge(format!("{u}-{v}")))?;
        if d.direction(e) == (u, v) {
            forward += 1;
        }
    }
    Ok(forward % 2 == 1)
}

/// The first central cycle that is evenly oriented, if any.
pub fn first_violation(d: &Orientation) -> Result<Option<Cycle>> {
    for c in central_cycles(&d.host)? {
        if !is_oddly_oriented(&c, d)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

pub fn is_pfaffian_orientation(d: &Orientation) -> Result<bool> {
    Ok(first_violation(d)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn k33_all_cycles_central() {
        let g = named::complete_bipartite(3, 3);
        assert_eq!(central_cycles(&g).unwrap().len(), 15);
    }

    #[test]
    fn hexagon_has_one_central_cycle() {
        let g = named::cycle(6);
        let cs = central_cycles(&g).unwrap();
        assert_eq!(cs.len(), 1);
        let d = Orientation::reference(&g);
        // 0->1->..->5 forward, 0-5 points 0->5 against the walk 5->0
        assert!(is_oddly_oriented(&cs[0], &d).unwrap());
        assert!(is_pfaffian_orientation(&d).unwrap());
    }

    #[test]
    fn no_perfect_matching_is_an_error() {
        assert_eq!(central_cycles(&named::star(3)), Err(Error::NoPerfectMatching));
    }

    #[test]
    fn square_parity() {
        let g = named::cycle(4);
        let c = Cycle::new(&g, vec![0, 1, 2, 3]).unwrap();
        let clockwise = Orientation::from_pairs(&g, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_oddly_oriented(&c, &clockwise).unwrap());
        let mut one_reversed = clockwise.clone();
        one_reversed.reverse_edge(0);
        assert!(is_oddly_oriented(&c, &one_reversed).unwrap());
    }

    #[test]
    fn odd_cycles_are_rejected() {
        let g = named::cycle(5);
        let c = Cycle::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(is_oddly_oriented(&c, &Orientation::reference(&g)), Err(Error::OddCycle(5)));
    }

    #[test]
    fn malformed_orientation_files() {
        let g = named::cycle(4);
        let missing = Orientation::from_json(&g, "[[0,1],[1,2],[2,3]]");
        assert!(matches!(missing, Err(Error::InvalidOrientation(_))));
        let twice = Orientation::from_json(&g, "[[0,1],[1,0],[1,2],[2,3],[3,0]]");
        assert!(matches!(twice, Err(Error::InvalidOrientation(_))));
        let bogus = Orientation::from_json(&g, "[[0,2],[0,1],[1,2],[2,3],[3,0]]");
        assert!(matches!(bogus, Err(Error::InvalidOrientation(_))));
        let ok = Orientation::from_json(&g, "[[1,0],[1,2],[2,3],[3,0]]").unwrap();
        assert_eq!(Orientation::from_json(&g, &ok.to_json()).unwrap(), ok);
    }
}
