//! Cycle enumeration over the binary cycle space.
//!
//! The fundamental cycles of a BFS spanning forest form a basis. Walking the
//! basis combinations in Gray-code order costs one symmetric difference per
//! step; a combination is kept when it is 2-regular and connected.

use fixedbitset::FixedBitSet;

use super::{Cycle, Graph};

fn fundamental_cycles(g: &Graph) -> Vec<FixedBitSet> {
    let in_tree = g.spanning_forest();
    // parent pointers from the same BFS
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.n()];
    let mut depth = vec![0usize; g.n()];
    let mut seen = vec![false; g.n()];
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in g.incident(u) {
                if in_tree[e] && !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((u, e));
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut basis = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if in_tree[e] {
            continue;
        }
        let mut set = FixedBitSet::with_capacity(g.edge_count());
        set.insert(e);
        let (mut a, mut b) = (u, v);
        while a != b {
            if depth[a] >= depth[b] {
                let (p, pe) = parent[a].unwrap();
                set.insert(pe);
                a = p;
            } else {
                let (p, pe) = parent[b].unwrap();
                set.insert(pe);
                b = p;
            }
        }
        basis.push(set);
    }
    basis
}

/// Vertex sequence of the edge set if it forms a single cycle.
fn as_cycle(g: &Graph, set: &FixedBitSet) -> Option<Vec<usize>> {
    let mut deg = vec![0u8; g.n()];
    let mut start = None;
    let mut count = 0;
    for e in set.ones() {
        let (u, v) = g.edge(e);
        for w in [u, v] {
            deg[w] += 1;
            if deg[w] > 2 {
                return None;
            }
        }
        start.get_or_insert(u);
        count += 1;
    }
    let start = start?;
    let mut walk = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .incident(cur)
            .iter()
            .find(|&&(w, e)| set.contains(e) && w != prev)
            .map(|&(w, _)| w)?;
        if next == start {
            break;
        }
        walk.push(next);
        prev = cur;
        cur = next;
    }
    (walk.len() == count).then_some(walk)
}

/// Every cycle of `g` exactly once, ordered by length and then by sorted
/// edge ids.
pub fn enumerate_cycles(g: &Graph) -> Vec<Cycle> {
    let basis = fundamental_cycles(g);
    assert!(
        basis.len() < 40,
        "cycle space of dimension {} is beyond desk scale",
        basis.len()
    );
    let mut cycles = Vec::new();
    let mut current = FixedBitSet::with_capacity(g.edge_count());
    let total: u64 = 1 << basis.len();
    for i in 1..total {
        // Gray code: flip the basis element at the lowest set bit of i
        current.symmetric_difference_with(&basis[i.trailing_zeros() as usize]);
        if let Some(vs) = as_cycle(g, &current) {
            cycles.push(Cycle::new(g, vs).expect("walk is a cycle"));
        }
    }
    cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.edges().cmp(b.edges())));
    cycles
}

/// The chordless cycles among `cycles`.
pub fn induced_cycles(g: &Graph, cycles: &[Cycle]) -> Vec<Cycle> {
    cycles
        .iter()
        .filter(|c| {
            let mut on = vec![false; g.n()];
            for &v in c.vertices() {
                on[v] = true;
            }
            let inner = c
                .vertices()
                .iter()
                .flat_map(|&v| g.neighbors(v).filter(move |&w| v < w))
                .filter(|&w| on[w])
                .count();
            inner == c.len()
        })
        .cloned()
        .collect()
}
