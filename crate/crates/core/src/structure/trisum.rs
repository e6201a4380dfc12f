use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::format::EdgeListJson;
use crate::graph::{has_perfect_matching_avoiding, Graph};

/// Three graphs sharing the 4-cycle `cycle[0] cycle[1] cycle[2] cycle[3]`
/// (the same vertex ids in every part). Bit `i` of `delete_mask` removes the
/// edge `cycle[i] cycle[i+1]` from the union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriSumSpec {
    pub parts: [Graph; 3],
    pub cycle: [usize; 4],
    pub delete_mask: [bool; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriSumJson {
    pub parts: Vec<EdgeListJson>,
    pub cycle: [usize; 4],
    pub delete_mask: [bool; 4],
}

impl TriSumSpec {
    /// Three copies of `part`.
    pub fn uniform(part: &Graph, cycle: [usize; 4], delete_mask: [bool; 4]) -> Self {
        TriSumSpec {
            parts: [part.clone(), part.clone(), part.clone()],
            cycle,
            delete_mask,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: TriSumJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let parts: Vec<Graph> = j
            .parts
            .into_iter()
            .map(Graph::try_from)
            .collect::<Result<_>>()?;
        let parts: [Graph; 3] = parts
            .try_into()
            .map_err(|p: Vec<Graph>| Error::InvalidTriSum(format!("{} parts, expected 3", p.len())))?;
        Ok(TriSumSpec {
            parts,
            cycle: j.cycle,
            delete_mask: j.delete_mask,
        })
    }

    pub fn to_json(&self) -> String {
        let j = TriSumJson {
            parts: self.parts.iter().map(EdgeListJson::from).collect(),
            cycle: self.cycle,
            delete_mask: self.delete_mask,
        };
        serde_json::to_string(&j).expect("tri-sum serialises")
    }
}

/// Glues the parts along the shared 4-cycle and deletes the masked cycle
/// edges. The cycle vertices become `0..4`; the remaining vertices of each
/// part follow in part order, keeping their relative order.
pub fn tri_sum_compose(spec: &TriSumSpec) -> Result<Graph> {
    let c = spec.cycle;
    let distinct: BTreeSet<usize> = c.iter().copied().collect();
    if distinct.len() != 4 {
        return Err(Error::InvalidTriSum(format!("cycle {c:?} repeats a vertex")));
    }
    let mut n = 4;
    let mut edges = BTreeSet::new();
    for (i, part) in spec.parts.iter().enumerate() {
        if let Some(&v) = c.iter().find(|&&v| v >= part.n()) {
            return Err(Error::InvalidTriSum(format!("part {i} has no vertex {v}")));
        }
        for j in 0..4 {
            if !part.has_edge(c[j], c[(j + 1) % 4]) {
                return Err(Error::InvalidTriSum(format!(
                    "part {i} is missing cycle edge {}-{}",
                    c[j],
                    c[(j + 1) % 4]
                )));
            }
        }
        if part.n() == 4 {
            return Err(Error::InvalidTriSum(format!("part {i} minus the cycle is empty")));
        }
        let mut id = vec![usize::MAX; part.n()];
        for (j, &v) in c.iter().enumerate() {
            id[v] = j;
        }
        for slot in id.iter_mut().filter(|x| **x == usize::MAX) {
            *slot = n;
            n += 1;
        }
        for &(u, v) in part.edges() {
            let (a, b) = (id[u], id[v]);
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let union = Graph::new(n, edges.iter().copied())?;
    let mut removed = vec![false; n];
    removed[..4].fill(true);
    if !has_perfect_matching_avoiding(&union, &removed) {
        return Err(Error::InvalidTriSum(
            "the shared cycle is not central in the union".into(),
        ));
    }
    let deleted: Vec<usize> = (0..4)
        .filter(|&j| spec.delete_mask[j])
        .map(|j| union.edge_id(j, (j + 1) % 4).expect("cycle edge"))
        .collect();
    Ok(union.without_edges(&deleted))
}
