//! Simple undirected graphs with stable integer vertex ids, and the
//! combinatorial predicates the rest of the crate is built on.
//!
//! A [`Graph`] is immutable after construction. Edge ids index the
//! lexicographically sorted edge list, so two graphs with the same edge set
//! always agree on edge ids.

mod coloring;
mod connectivity;
mod cycles;
pub mod format;
mod isomorphism;
mod matching;
mod planarity;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use coloring::{hamiltonian_cycle, three_edge_coloring};
pub use connectivity::{
    cyclic_edge_connectivity, minimum_cyclic_edge_cut, vertex_connectivity_at_least,
    CyclicConnectivity,
};
pub use cycles::{enumerate_cycles, induced_cycles};
pub use isomorphism::{automorphism_vertex_orbits, find_isomorphism, FaceLists};
pub use matching::{
    count_perfect_matchings, enumerate_perfect_matchings, has_perfect_matching,
    has_perfect_matching_avoiding, is_bicritical, is_brace, is_brick, is_k_extendable,
};
pub use planarity::{find_k33_subdivision, is_planar, K33Subdivision};

pub type EdgeId = usize;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "format::EdgeListJson", into = "format::EdgeListJson")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, EdgeId)>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a simple graph on vertices `0..n`. Edge endpoints may be given
    /// in either order; loops, repeated edges and out-of-range ids are errors.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in list.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted; the index is the edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (usize, usize) {
        self.edges[id]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// Neighbors of `v` paired with the connecting edge id, sorted by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adj[v]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a]
            .binary_search_by_key(&b, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[a][i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 3)
    }

    pub fn require_cubic(&self) -> Result<()> {
        match (0..self.n).find(|&v| self.degree(v) != 3) {
            Some(v) => Err(Error::NotCubic {
                vertex: v,
                degree: self.degree(v),
            }),
            None => Ok(()),
        }
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    /// Vertices flagged in `removed` are skipped.
    pub fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = removed.to_vec();
        seen.resize(self.n, false);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&[])
    }

    /// The empty graph and single vertices count as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS 2-colouring; component roots (smallest vertex) get colour `false`
    /// ("black"). `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Induced subgraph on the vertices not flagged in `removed`; returns the
    /// subgraph and the old id of each new vertex.
    pub fn without_vertices(&self, removed: &[bool]) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n)
            .filter(|&v| !removed.get(v).copied().unwrap_or(false))
            .collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| (new_id[u], new_id[v]));
        (Graph::new(keep.len(), edges).expect("induced subgraph is simple"), keep)
    }

    pub fn without_edges(&self, removed: &[EdgeId]) -> Graph {
        let mut drop = vec![false; self.edges.len()];
        for &e in removed {
            drop[e] = true;
        }
        let edges = self
            .edges
            .iter()
            .zip(&drop)
            .filter(|(_, &d)| !d)
            .map(|(&e, _)| e);
        Graph::new(self.n, edges).expect("edge subset is simple")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabelling by a permutation keeps the graph simple")
    }

    /// All-pairs BFS distances; `usize::MAX` for unreachable pairs.
    pub fn distances(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|s| {
                let mut dist = vec![usize::MAX; self.n];
                dist[s] = 0;
                let mut queue = VecDeque::from([s]);
                while let Some(u) = queue.pop_front() {
                    for w in self.neighbors(u) {
                        if dist[w] == usize::MAX {
                            dist[w] = dist[u] + 1;
                            queue.push_back(w);
                        }
                    }
                }
                dist
            })
            .collect()
    }

    /// A spanning forest (BFS from each component's smallest vertex) as a
    /// per-edge membership flag.
    pub fn spanning_forest(&self) -> Vec<bool> {
        let mut in_tree = vec![false; self.edges.len()];
        let mut seen = vec![false; self.n];
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, e) in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        in_tree[e] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        in_tree
    }

    /// Dimension of the binary cycle space, |E| - |V| + c.
    pub fn cycle_space_dimension(&self) -> usize {
        self.edges.len() + self.components().len() - self.n
    }
}

/// A set of pairwise disjoint edges of a host graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<EdgeId>,
}

impl Matching {
    pub fn new(g: &Graph, mut edges: Vec<EdgeId>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        let mut used = vec![false; g.n()];
        for &e in &edges {
            if e >= g.edge_count() {
                return Err(Error::NotAnEdge(format!("edge id {e}")));
            }
            let (u, v) = g.edge(e);
            if used[u] || used[v] {
                return Err(Error::Parse(format!("edges share vertex in matching at edge {e}")));
            }
            used[u] = true;
            used[v] = true;
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        2 * self.edges.len() == g.n()
    }
}

/// A cycle given by its cyclic vertex sequence. Stored with the smallest
/// vertex first and its smaller cycle-neighbour second.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cycle {
    vertices: Vec<usize>,
    edges: Vec<EdgeId>,
}

impl Cycle {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let len = vertices.len();
        if len < 3 {
            return Err(Error::InvalidCycle(format!("length {len} < 3")));
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCycle("repeated vertex".into()));
        }
        let mut edges = Vec::with_capacity(len);
        for i in 0..len {
            let (u, v) = (vertices[i], vertices[(i + 1) % len]);
            match g.edge_id(u, v) {
                Some(e) => edges.push(e),
                None => return Err(Error::NotAnEdge(format!("{u}-{v}"))),
            }
        }
        edges.sort_unstable();
        Ok(Cycle {
            vertices: normalize_rotation(vertices),
            edges,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Sorted edge ids.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.vertices.len().is_multiple_of(2)
    }

    /// Consecutive vertex pairs in traversal order, closing the cycle.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let len = self.vertices.len();
        (0..len).map(move |i| (self.vertices[i], self.vertices[(i + 1) % len]))
    }
}

fn normalize_rotation(mut vs: Vec<usize>) -> Vec<usize> {
    let (pos, _) = vs.iter().enumerate().min_by_key(|&(_, v)| *v).unwrap();
    vs.rotate_left(pos);
    let len = vs.len();
    if vs[len - 1] < vs[1] {
        vs[1..].reverse();
    }
    vs
}

/// An edge cut separating `sides.0` from `sides.1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    pub edges: Vec<EdgeId>,
    pub sides: (Vec<usize>, Vec<usize>),
}

impl EdgeCut {
    /// True when each side induces a subgraph containing a cycle.
    pub fn is_cyclic(&self, g: &Graph) -> bool {
        let has_cycle = |side: &[usize]| {
            let mut removed = vec![true; g.n()];
            for &v in side {
                removed[v] = false;
            }
            let (sub, _) = g.without_vertices(&removed);
            sub.cycle_space_dimension() > 0
        };
        has_cycle(&self.sides.0) && has_cycle(&self.sides.1)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// A few standard graphs used as fixtures throughout the crate.
pub mod named {
    use super::Graph;

    pub fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::new(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)))).unwrap()
    }

    pub fn cube() -> Graph {
        Graph::new(
            8,
            (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))).filter(|&(u, v)| u < v),
        )
        .unwrap()
    }

    /// Point-line incidence graph of the Fano plane.
    pub fn heawood() -> Graph {
        let edges = (0..14usize).map(|i| (i, (i + 1) % 14)).chain(
            (0..14usize)
                .step_by(2)
                .map(|i| (i, (i + 5) % 14)),
        );
        Graph::new(14, edges).unwrap()
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::new(2, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = named::heawood();
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            assert!(u < v);
            assert_eq!(g.edge_id(u, v), Some(id));
            assert_eq!(g.edge_id(v, u), Some(id));
        }
        for v in 0..g.n() {
            let ns: Vec<_> = g.neighbors(v).collect();
            assert!(ns.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(g.is_cubic());
    }

    #[test]
    fn empty_graph_is_connected_and_bipartite() {
        let g = Graph::empty(0);
        assert!(g.is_connected());
        assert!(g.is_bipartite());
    }

    #[test]
    fn bipartition_roots_are_black() {
        let g = named::cycle(6);
        let c = g.bipartition().unwrap();
        assert!(!c[0]);
        assert!(c[1]);
        assert!(named::cycle(5).bipartition().is_none());
    }

    #[test]
    fn cycle_normalizes_rotation_and_direction() {
        let g = named::cycle(5);
        let c = Cycle::new(&g, vec![3, 2, 1, 0, 4]).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3, 4]);
        assert!(Cycle::new(&g, vec![0, 2, 3]).is_err());
    }

    #[test]
    fn named_graph_sizes() {
        assert_eq!(named::cube().edge_count(), 12);
        assert_eq!(named::heawood().edge_count(), 21);
        assert_eq!(named::petersen().edge_count(), 15);
        assert!(named::heawood().is_bipartite());
    }
}
