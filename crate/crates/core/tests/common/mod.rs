//! Brute-force oracles used only by the tests. None of them call the
//! library's matching, planarity, connectivity or Pfaffian code.

#![allow(dead_code)]

use polyhex::graph::Graph;
use polyhex::pfaffian::Orientation;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for &(u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

fn edge_index(g: &Graph) -> std::collections::HashMap<(usize, usize), usize> {
    g.edges().iter().enumerate().map(|(i, &(u, v))| ((u.min(v), u.max(v)), i)).collect()
}

/// Every perfect matching as a list of `(low, high)` pairs, found by
/// always matching the smallest free vertex.
pub fn perfect_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    fn go(adj: &[Vec<usize>], used: &mut [bool], cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some(v) = used.iter().position(|&u| !u) else {
            out.push(cur.clone());
            return;
        };
        used[v] = true;
        for &w in &adj[v] {
            if !used[w] {
                used[w] = true;
                cur.push((v.min(w), v.max(w)));
                go(adj, used, cur, out);
                cur.pop();
                used[w] = false;
            }
        }
        used[v] = false;
    }
    let adj = adjacency(g);
    let mut out = Vec::new();
    if g.n().is_multiple_of(2) {
        go(&adj, &mut vec![false; g.n()], &mut Vec::new(), &mut out);
    }
    out
}

pub fn matching_count(g: &Graph) -> u64 {
    perfect_matchings(g).len() as u64
}

/// Whether `g` minus `removed` has a perfect matching.
pub fn has_matching_avoiding(adj: &[Vec<usize>], removed: &[bool]) -> bool {
    fn go(adj: &[Vec<usize>], used: &mut [bool]) -> bool {
        let Some(v) = used.iter().position(|&u| !u) else {
            return true;
        };
        used[v] = true;
        for &w in &adj[v] {
            if !used[w] {
                used[w] = true;
                if go(adj, used) {
                    used[w] = false;
                    used[v] = false;
                    return true;
                }
                used[w] = false;
            }
        }
        used[v] = false;
        false
    }
    let mut used = removed.to_vec();
    go(adj, &mut used)
}

fn permutation_sign(seq: &[usize]) -> i32 {
    let inversions: usize = (0..seq.len())
        .map(|i| (i + 1..seq.len()).filter(|&j| seq[i] > seq[j]).count())
        .sum();
    if inversions.is_multiple_of(2) { 1 } else { -1 }
}

/// Per matching: the sign of its Pfaffian term when every edge points
/// low to high, and the bitmask of its edges.
pub struct MatchingSigns {
    pub terms: Vec<(i32, u64)>,
}

impl MatchingSigns {
    pub fn new(g: &Graph) -> Self {
        assert!(g.edge_count() <= 64);
        let idx = edge_index(g);
        let terms = perfect_matchings(g)
            .into_iter()
            .map(|m| {
                let seq: Vec<usize> = m.iter().flat_map(|&(a, b)| [a, b]).collect();
                let mask = m.iter().fold(0u64, |acc, p| acc | 1 << idx[p]);
                (permutation_sign(&seq), mask)
            })
            .collect();
        MatchingSigns { terms }
    }

    /// Whether every term has the same sign when the edges in `reversed`
    /// point high to low.
    pub fn all_same_sign(&self, reversed: u64) -> bool {
        let mut signs = self
            .terms
            .iter()
            .map(|&(s, m)| if (m & reversed).count_ones().is_multiple_of(2) { s } else { -s });
        match signs.next() {
            None => true,
            Some(first) => signs.all(|s| s == first),
        }
    }

    /// The Pfaffian itself under `reversed`.
    pub fn pfaffian(&self, reversed: u64) -> i64 {
        self.terms
            .iter()
            .map(|&(s, m)| if (m & reversed).count_ones().is_multiple_of(2) { s as i64 } else { -s as i64 })
            .sum()
    }
}

pub fn reversed_mask(d: &Orientation) -> u64 {
    let g = d.host();
    (0..g.edge_count())
        .filter(|&e| {
            let (t, h) = d.direction(e);
            t > h
        })
        .fold(0, |acc, e| acc | 1 << e)
}

/// An orientation is Pfaffian iff all perfect matchings contribute the
/// same sign to the Pfaffian of its skew adjacency matrix.
pub fn is_pfaffian_by_signs(d: &Orientation) -> bool {
    MatchingSigns::new(d.host()).all_same_sign(reversed_mask(d))
}

/// Exhaustive search over orientations modulo switching: fix a BFS tree
/// low to high and try every direction of the remaining edges.
pub fn has_pfaffian_orientation(g: &Graph) -> bool {
    let signs = MatchingSigns::new(g);
    if signs.terms.is_empty() {
        return true;
    }
    let adj = adjacency(g);
    let idx = edge_index(g);
    let mut seen = vec![false; g.n()];
    let mut tree = 0u64;
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    tree |= 1 << idx[&(v.min(w), v.max(w))];
                    queue.push_back(w);
                }
            }
        }
    }
    let free: Vec<usize> = (0..g.edge_count()).filter(|e| tree >> e & 1 == 0).collect();
    assert!(free.len() < 28, "oracle search too large");
    (0u64..1 << free.len()).any(|bits| {
        let reversed = free
            .iter()
            .enumerate()
            .filter(|&(i, _)| bits >> i & 1 == 1)
            .fold(0u64, |acc, (_, &e)| acc | 1 << e);
        signs.all_same_sign(reversed)
    })
}

/// Planarity of a connected cubic graph by trying every rotation system
/// and checking Euler's formula on the traced faces.
pub fn is_planar_by_rotations(g: &Graph) -> bool {
    assert!(g.is_cubic() && g.is_connected());
    let n = g.n();
    assert!(n <= 24, "rotation oracle too large");
    let adj = adjacency(g);
    let pos = |v: usize, w: usize| adj[v].iter().position(|&x| x == w).unwrap();
    let target_faces = 2 + g.edge_count() - n;
    (0u32..1 << (n - 1)).any(|bits| {
        let flipped = |v: usize| v > 0 && bits >> (v - 1) & 1 == 1;
        let mut seen = vec![[false; 3]; n];
        let mut faces = 0;
        for v in 0..n {
            for i in 0..3 {
                if seen[v][i] {
                    continue;
                }
                faces += 1;
                let (mut a, mut j) = (v, i);
                while !seen[a][j] {
                    seen[a][j] = true;
                    let b = adj[a][j];
                    let back = pos(b, a);
                    let next = if flipped(b) { (back + 2) % 3 } else { (back + 1) % 3 };
                    a = b;
                    j = next;
                }
            }
        }
        faces == target_faces
    })
}

/// Brace test straight from the definition: connected, bipartite, and
/// every matching of at most two edges extends to a perfect matching.
pub fn is_brace_by_definition(g: &Graph) -> bool {
    if !g.is_connected() || !g.is_bipartite() || g.n() < 6 {
        return false;
    }
    let adj = adjacency(g);
    let edges = g.edges();
    let mut removed = vec![false; g.n()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        removed[a] = true;
        removed[b] = true;
        if !has_matching_avoiding(&adj, &removed) {
            return false;
        }
        for &(c, d) in &edges[i + 1..] {
            if removed[c] || removed[d] {
                continue;
            }
            removed[c] = true;
            removed[d] = true;
            let ok = has_matching_avoiding(&adj, &removed);
            removed[c] = false;
            removed[d] = false;
            if !ok {
                return false;
            }
        }
        removed[a] = false;
        removed[b] = false;
    }
    true
}

fn has_cycle(g: &Graph, side: &[bool]) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(u, v) in g.edges() {
        if side[u] && side[v] {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return true;
            }
            parent[a] = b;
        }
    }
    false
}

/// Cyclic edge-connectivity by trying every vertex bipartition; `None`
/// when no edge cut leaves a cycle on both sides.
pub fn cyclic_connectivity_by_partitions(g: &Graph) -> Option<usize> {
    let n = g.n();
    assert!(n <= 20, "partition oracle too large");
    let mut best: Option<usize> = None;
    for bits in 1u32..1 << (n - 1) {
        let side: Vec<bool> = (0..n).map(|v| v > 0 && bits >> (v - 1) & 1 == 1).collect();
        let cut = g.edges().iter().filter(|&&(u, v)| side[u] != side[v]).count();
        if best.is_some_and(|b| cut >= b) {
            continue;
        }
        let other: Vec<bool> = side.iter().map(|&s| !s).collect();
        if has_cycle(g, &side) && has_cycle(g, &other) {
            best = Some(cut);
        }
    }
    best
}

/// A proper 3-edge-colouring check.
pub fn is_proper_edge_coloring(g: &Graph, colors: &[u8]) -> bool {
    colors.len() == g.edge_count()
        && colors.iter().all(|&c| c < 3)
        && (0..g.n()).all(|v| {
            let mut seen = [false; 3];
            g.incident(v).iter().all(|&(_, e)| !std::mem::replace(&mut seen[colors[e] as usize], true))
        })
}

pub type FacePair<'a> = (&'a [Vec<usize>], &'a [Vec<usize>]);

/// Whether `map` sends edges to edges and, if given, every face of the
/// first list onto some face of the second (as vertex sets).
pub fn is_isomorphism(g1: &Graph, g2: &Graph, map: &[usize], faces: Option<FacePair>) -> bool {
    let mut image = map.to_vec();
    image.sort_unstable();
    image.dedup();
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() || image.len() != g1.n() {
        return false;
    }
    if !g1.edges().iter().all(|&(u, v)| g2.has_edge(map[u], map[v])) {
        return false;
    }
    match faces {
        None => true,
        Some((f1, f2)) => {
            let key = |f: &[usize]| {
                let mut s = f.to_vec();
                s.sort_unstable();
                s
            };
            let targets: std::collections::HashSet<Vec<usize>> = f2.iter().map(|f| key(f)).collect();
            f1.iter().all(|f| {
                let mapped: Vec<usize> = f.iter().map(|&v| map[v]).collect();
                targets.contains(&key(&mapped))
            })
        }
    }
}
