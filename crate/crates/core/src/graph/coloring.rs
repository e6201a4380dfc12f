use super::{Cycle, Graph};
use crate::error::Result;

/// A proper 3-edge-colouring (colour per edge id) of a cubic graph, by
/// backtracking in edge-id order.
pub fn three_edge_coloring(g: &Graph) -> Result<Option<Vec<u8>>> {
    g.require_cubic()?;
    let mut colors = vec![u8::MAX; g.edge_count()];
    // used[v] is a 3-bit mask of colours present at v
    let mut used = vec![0u8; g.n()];
    fn go(g: &Graph, e: usize, colors: &mut [u8], used: &mut [u8]) -> bool {
        if e == g.edge_count() {
            return true;
        }
        let (u, v) = g.edge(e);
        for c in 0..3u8 {
            let bit = 1 << c;
            if used[u] & bit != 0 || used[v] & bit != 0 {
                continue;
            }
            // symmetry: the first edge takes colour 0
            if e == 0 && c > 0 {
                break;
            }
            colors[e] = c;
            used[u] |= bit;
            used[v] |= bit;
            if go(g, e + 1, colors, used) {
                return true;
            }
            used[u] &= !bit;
            used[v] &= !bit;
        }
        colors[e] = u8::MAX;
        false
    }
    Ok(go(g, 0, &mut colors, &mut used).then_some(colors))
}

/// A Hamiltonian cycle found by backtracking from vertex 0.
pub fn hamiltonian_cycle(g: &Graph) -> Option<Cycle> {
    let n = g.n();
    if n < 3 || !g.is_connected() || (0..n).any(|v| g.degree(v) < 2) {
        return None;
    }
    let mut path = vec![0usize];
    let mut on = vec![false; n];
    on[0] = true;
    fn go(g: &Graph, path: &mut Vec<usize>, on: &mut [bool]) -> bool {
        let last = *path.last().unwrap();
        if path.len() == g.n() {
            return g.has_edge(last, path[0]);
        }
        for w in g.neighbors(last) {
            if on[w] {
                continue;
            }
            // unvisited neighbours of the old end still need two usable cycle neighbours
            on[w] = true;
            path.push(w);
            let stranded = g.neighbors(last).any(|x| {
                !on[x]
                    && g.neighbors(x).filter(|&y| !on[y] || y == path[0] || y == w).count() < 2
                    && path.len() < g.n()
            });
            if !stranded && go(g, path, on) {
                return true;
            }
            path.pop();
            on[w] = false;
        }
        false
    }
    if go(g, &mut path, &mut on) {
        Some(Cycle::new(g, path).expect("hamiltonian walk closes"))
    } else {
        None
    }
}
