//! Planarity by path addition (Demoucron, Malgrange, Pertuiset) on each
//! biconnected block, and Kuratowski subgraph extraction by edge deletion.
//!
//! Only subcubic inputs are accepted by [`find_k33_subdivision`]: a
//! subdivided `K_5` needs branch vertices of degree 4, so for these graphs a
//! minimal non-planar subgraph is always a subdivided `K_{3,3}`.

use serde::Serialize;

use super::{EdgeId, Graph};
use crate::error::{Error, Result};

/// Biconnected blocks as edge-id lists (Hopcroft-Tarjan, iterative).
fn blocks(g: &Graph) -> Vec<Vec<EdgeId>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent edge, next incident index)
        let mut stack: Vec<(usize, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(&mut (u, pe, ref mut idx)) = stack.last_mut() {
            if *idx < g.incident(u).len() {
                let (w, e) = g.incident(u)[*idx];
                *idx += 1;
                if Some(e) == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, Some(e), 0));
                } else if disc[w] < disc[u] {
                    edge_stack.push(e);
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let pe = pe.unwrap();
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Path-addition planarity test on a biconnected graph given by its edges.
fn biconnected_planar(g: &Graph, block: &[EdgeId]) -> bool {
    let mut verts: Vec<usize> = block
        .iter()
        .flat_map(|&e| {
            let (u, v) = g.edge(e);
            [u, v]
        })
        .collect();
    verts.sort_unstable();
    verts.dedup();
    let nv = verts.len();
    if nv < 5 || block.len() < 9 || block.len() <= nv + 2 {
        // too small to contain a Kuratowski subdivision
        return true;
    }
    if block.len() > 3 * nv - 6 {
        return false;
    }
    let local = |v: usize| verts.binary_search(&v).unwrap();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
    for (i, &e) in block.iter().enumerate() {
        let (u, v) = g.edge(e);
        let (a, b) = (local(u), local(v));
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let m = block.len();

    // initial cycle by DFS from vertex 0 until a back edge closes
    let mut embedded_v = vec![false; nv];
    let mut embedded_e = vec![false; m];
    let first_cycle = find_cycle(&adj, nv).expect("biconnected block has a cycle");
    for i in 0..first_cycle.len() {
        let a = first_cycle[i];
        let b = first_cycle[(i + 1) % first_cycle.len()];
        embedded_v[a] = true;
        let e = adj[a].iter().find(|&&(w, _)| w == b).unwrap().1;
        embedded_e[e] = true;
    }
    let mut faces: Vec<Vec<usize>> = vec![first_cycle.clone(), first_cycle];
    let mut n_embedded = faces[0].len();

    while n_embedded < m {
        let fragments = fragments(&adj, &embedded_v, &embedded_e);
        let mut chosen: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = chosen.expect("at least one fragment remains");
        let path = fragment_path(&adj, &fragments[fi], &embedded_v, &embedded_e);
        for w in path.windows(2) {
            let e = adj[w[0]].iter().find(|&&(x, _)| x == w[1]).unwrap().1;
            embedded_e[e] = true;
            n_embedded += 1;
        }
        for &v in &path {
            embedded_v[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let pa = face.iter().position(|&x| x == a).unwrap();
        let pb = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        // face walk a -> b, then back along the path (interior reversed)
        let mut f1 = Vec::new();
        let mut i = pa;
        loop {
            f1.push(face[i]);
            if i == pb {
                break;
            }
            i = (i + 1) % len;
        }
        f1.extend(path[1..path.len() - 1].iter().rev());
        let mut f2 = Vec::new();
        let mut i = pb;
        loop {
            f2.push(face[i]);
            if i == pa {
                break;
            }
            i = (i + 1) % len;
        }
        f2.extend(path[1..path.len() - 1].iter());
        faces.push(f1);
        faces.push(f2);
    }
    true
}

fn find_cycle(adj: &[Vec<(usize, usize)>], nv: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; nv];
    let mut state = vec![0u8; nv];
    let mut stack = vec![(0usize, usize::MAX, 0usize)];
    state[0] = 1;
    while let Some(&mut (u, pe, ref mut idx)) = stack.last_mut() {
        if *idx < adj[u].len() {
            let (w, e) = adj[u][*idx];
            *idx += 1;
            if e == pe {
                continue;
            }
            if state[w] == 1 {
                let mut cyc = vec![u];
                let mut x = u;
                while x != w {
                    x = parent[x];
                    cyc.push(x);
                }
                return Some(cyc);
            }
            if state[w] == 0 {
                state[w] = 1;
                parent[w] = u;
                stack.push((w, e, 0));
            }
        } else {
            state[u] = 2;
            stack.pop();
        }
    }
    None
}

struct Fragment {
    /// Chord edge, or the interior vertices of a component of G - V(H).
    chord: Option<usize>,
    interior: Vec<usize>,
    attachments: Vec<usize>,
}

fn fragments(adj: &[Vec<(usize, usize)>], emb_v: &[bool], emb_e: &[bool]) -> Vec<Fragment> {
    let nv = adj.len();
    let mut out = Vec::new();
    for u in 0..nv {
        if !emb_v[u] {
            continue;
        }
        for &(w, e) in &adj[u] {
            if u < w && emb_v[w] && !emb_e[e] {
                out.push(Fragment {
                    chord: Some(e),
                    interior: Vec::new(),
                    attachments: vec![u, w],
                });
            }
        }
    }
    let mut seen = vec![false; nv];
    for s in 0..nv {
        if emb_v[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &(w, _) in &adj[u] {
                if emb_v[w] {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    interior.push(w);
                    stack.push(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment {
            chord: None,
            interior,
            attachments,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(
    adj: &[Vec<(usize, usize)>],
    frag: &Fragment,
    emb_v: &[bool],
    _emb_e: &[bool],
) -> Vec<usize> {
    if frag.chord.is_some() {
        return frag.attachments.clone();
    }
    let start = frag.attachments[0];
    // BFS from start into the interior until another attachment is reached
    let nv = adj.len();
    let mut in_frag = vec![false; nv];
    for &v in &frag.interior {
        in_frag[v] = true;
    }
    let mut prev = vec![usize::MAX; nv];
    let mut queue = std::collections::VecDeque::new();
    for &(w, _) in &adj[start] {
        if in_frag[w] && prev[w] == usize::MAX {
            prev[w] = start;
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &(w, _) in &adj[u] {
            if emb_v[w] && w != start {
                let mut path = vec![w, u];
                let mut x = u;
                while prev[x] != start {
                    x = prev[x];
                    path.push(x);
                }
                path.push(start);
                path.reverse();
                return path;
            }
            if in_frag[w] && prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a biconnected graph has two attachments")
}

pub fn is_planar(g: &Graph) -> bool {
    blocks(g).iter().all(|b| biconnected_planar(g, b))
}

/// Six branch vertices split into the two sides of `K_{3,3}`, and the nine
/// internally disjoint paths `paths[3 * i + j]` from `left[i]` to `right[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K33Subdivision {
    pub left: [usize; 3],
    pub right: [usize; 3],
    pub paths: Vec<Vec<usize>>,
}

impl K33Subdivision {
    /// Checks the witness against `g`: paths are in `g`, join the right
    /// branch vertices, and share no interior vertices.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut used = vec![0usize; g.n()];
        for &b in self.left.iter().chain(&self.right) {
            used[b] += 1;
        }
        if used.iter().any(|&c| c > 1) || self.paths.len() != 9 {
            return false;
        }
        for i in 0..3 {
            for j in 0..3 {
                let p = &self.paths[3 * i + j];
                if p.len() < 2 || p[0] != self.left[i] || *p.last().unwrap() != self.right[j] {
                    return false;
                }
                if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                    return false;
                }
                for &x in &p[1..p.len() - 1] {
                    used[x] += 1;
                    if used[x] > 1 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A subdivided `K_{3,3}` in `g`, or `None` when `g` is planar. Rejects
/// graphs with a vertex of degree 4 or more.
pub fn find_k33_subdivision(g: &Graph) -> Result<Option<K33Subdivision>> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) {
        return Err(Error::DegreeTooHigh {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if is_planar(g) {
        return Ok(None);
    }
    // delete every edge whose removal keeps the graph non-planar
    let mut keep: Vec<EdgeId> = (0..g.edge_count()).collect();
    let mut i = 0;
    while i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        let h = Graph::new(g.n(), trial.iter().map(|&e| g.edge(e))).unwrap();
        if is_planar(&h) {
            i += 1;
        } else {
            keep = trial;
        }
    }
    let h = Graph::new(g.n(), keep.iter().map(|&e| g.edge(e))).unwrap();
    let branch: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) == 3).collect();
    debug_assert_eq!(branch.len(), 6);
    // trace the suppressed paths
    let mut paths = Vec::new();
    for &b in &branch {
        for start in h.neighbors(b) {
            let mut path = vec![b, start];
            let (mut prev, mut cur) = (b, start);
            while h.degree(cur) == 2 {
                let next = h.neighbors(cur).find(|&w| w != prev).unwrap();
                path.push(next);
                prev = cur;
                cur = next;
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    // branch graph is K_{3,3}: colour it
    let idx = |v: usize| branch.iter().position(|&b| b == v).unwrap();
    let bg = Graph::new(6, paths.iter().map(|p| (idx(p[0]), idx(*p.last().unwrap()))))
        .expect("minimal non-planar subcubic graph is a subdivided K_{3,3}");
    let colour = bg.bipartition().expect("K_{3,3} is bipartite");
    let left: Vec<usize> = (0..6).filter(|&i| !colour[i]).map(|i| branch[i]).collect();
    let right: Vec<usize> = (0..6).filter(|&i| colour[i]).map(|i| branch[i]).collect();
    let mut ordered = Vec::with_capacity(9);
    for &a in &left {
        for &b in &right {
            let p = paths
                .iter()
                .find(|p| {
                    (p[0] == a && *p.last().unwrap() == b) || (p[0] == b && *p.last().unwrap() == a)
                })
                .unwrap();
            let mut p = p.clone();
            if p[0] != a {
                p.reverse();
            }
            ordered.push(p);
        }
    }
    let sub = K33Subdivision {
        left: [left[0], left[1], left[2]],
        right: [right[0], right[1], right[2]],
        paths: ordered,
    };
    debug_assert!(sub.verify(g));
    Ok(Some(sub))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn classic_planarity() {
        assert!(is_planar(&named::cube()));
        assert!(!is_planar(&named::complete_bipartite(3, 3)));
        assert!(!is_planar(&named::petersen()));
        assert!(!is_planar(&named::heawood()));
        assert!(is_planar(&named::cycle(8)));
        assert!(is_planar(&Graph::empty(0)));
        let k5 = Graph::new(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))).unwrap();
        assert!(!is_planar(&k5));
        let k4 = Graph::new(4, (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j)))).unwrap();
        assert!(is_planar(&k4));
    }

    #[test]
    fn k33_witness_in_k33() {
        let g = named::complete_bipartite(3, 3);
        let w = find_k33_subdivision(&g).unwrap().unwrap();
        assert!(w.verify(&g));
        assert!(w.paths.iter().all(|p| p.len() == 2));
    }

    #[test]
    fn petersen_witness_is_valid() {
        let g = named::petersen();
        let w = find_k33_subdivision(&g).unwrap().unwrap();
        assert!(w.verify(&g));
    }

    #[test]
    fn planar_cube_has_none() {
        assert_eq!(find_k33_subdivision(&named::cube()).unwrap(), None);
    }

    #[test]
    fn rejects_degree_four() {
        let g = named::star(4);
        assert!(matches!(find_k33_subdivision(&g), Err(Error::DegreeTooHigh { .. })));
    }

    #[test]
    fn blocks_of_two_triangles_sharing_a_vertex() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(blocks(&g).len(), 2);
    }
}
