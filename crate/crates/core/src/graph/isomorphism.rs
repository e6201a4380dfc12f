//! Backtracking isomorphism search with degree and distance pruning, with
//! optional face (hexagon) preservation.

use std::collections::HashSet;

use super::Graph;

/// Face boundaries of the two graphs, as vertex lists.
#[derive(Debug, Clone, Copy)]
pub struct FaceLists<'a> {
    pub first: &'a [Vec<usize>],
    pub second: &'a [Vec<usize>],
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    d1: Vec<Vec<usize>>,
    d2: Vec<Vec<usize>>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    faces: Option<FaceCheck<'a>>,
}

struct FaceCheck<'a> {
    first: &'a [Vec<usize>],
    /// faces of `first` whose last vertex (in search order) is the key
    closing: Vec<Vec<usize>>,
    second: HashSet<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        for v in 0..self.g2.n() {
            if self.used[v] || self.g1.degree(u) != self.g2.degree(v) {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&w| self.d1[u][w] == self.d2[v][self.map[w]]);
            if !consistent {
                continue;
            }
            self.map[u] = v;
            self.used[v] = true;
            if self.faces_ok(u) && self.extend(depth + 1) {
                return true;
            }
            self.used[v] = false;
            self.map[u] = usize::MAX;
        }
        false
    }

    fn faces_ok(&self, u: usize) -> bool {
        let Some(fc) = &self.faces else {
            return true;
        };
        fc.closing[u].iter().all(|&f| {
            let mut image: Vec<usize> = fc.first[f].iter().map(|&x| self.map[x]).collect();
            image.sort_unstable();
            fc.second.contains(&image)
        })
    }
}

/// BFS order from each component root so most vertices have a mapped
/// neighbour when they are placed.
fn search_order(g: &Graph, pin: Option<(usize, usize)>) -> Vec<usize> {
    let mut order: Vec<usize> = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    let roots = pin.map(|(u, _)| u).into_iter().chain(0..g.n());
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut queue = std::collections::VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

pub(crate) fn isomorphism_with_pin(
    g1: &Graph,
    g2: &Graph,
    pin: Option<(usize, usize)>,
    faces: Option<FaceLists<'_>>,
) -> Option<Vec<usize>> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let mut deg1: Vec<usize> = (0..g1.n()).map(|v| g1.degree(v)).collect();
    let mut deg2: Vec<usize> = (0..g2.n()).map(|v| g2.degree(v)).collect();
    deg1.sort_unstable();
    deg2.sort_unstable();
    if deg1 != deg2 {
        return None;
    }
    let face_check = match faces {
        Some(fl) => {
            if fl.first.len() != fl.second.len() {
                return None;
            }
            Some(fl)
        }
        None => None,
    };
    let order = search_order(g1, pin);
    let mut position = vec![0; g1.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let faces = face_check.map(|fl| {
        let mut closing = vec![Vec::new(); g1.n()];
        for (i, f) in fl.first.iter().enumerate() {
            if let Some(&last) = f.iter().max_by_key(|&&v| position[v]) {
                closing[last].push(i);
            }
        }
        let second = fl
            .second
            .iter()
            .map(|f| {
                let mut s = f.clone();
                s.sort_unstable();
                s
            })
            .collect();
        FaceCheck {
            first: fl.first,
            closing,
            second,
        }
    });
    let mut search = Search {
        g1,
        g2,
        d1: g1.distances(),
        d2: g2.distances(),
        order,
        map: vec![usize::MAX; g1.n()],
        used: vec![false; g2.n()],
        faces,
    };
    // the pinned vertex is the search root
    let mut start = 0;
    if let Some((u, v)) = pin {
        if g1.degree(u) != g2.degree(v) {
            return None;
        }
        search.map[u] = v;
        search.used[v] = true;
        if !search.faces_ok(u) {
            return None;
        }
        start = 1;
    }
    if search.extend(start) {
        Some(search.map)
    } else {
        None
    }
}

/// A bijection `sigma` (as `sigma[u]`) with `uv` an edge of `g1` iff
/// `sigma(u) sigma(v)` is an edge of `g2`. With face lists, every face of
/// `g1` must also map onto a face of `g2`.
pub fn find_isomorphism(g1: &Graph, g2: &Graph, faces: Option<FaceLists<'_>>) -> Option<Vec<usize>> {
    isomorphism_with_pin(g1, g2, None, faces)
}

/// Orbits of the automorphism group, each sorted, ordered by least element.
pub fn automorphism_vertex_orbits(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut orbit_of: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let next = p[x];
            p[x] = r;
            x = next;
        }
        r
    }
    for u in 0..n {
        if find(&mut orbit_of, u) != u {
            continue;
        }
        for v in u + 1..n {
            if find(&mut orbit_of, v) == find(&mut orbit_of, u) {
                continue;
            }
            if let Some(sigma) = isomorphism_with_pin(g, g, Some((u, v)), None) {
                for (w, &image) in sigma.iter().enumerate() {
                    let (a, b) = (find(&mut orbit_of, w), find(&mut orbit_of, image));
                    if a != b {
                        orbit_of[a.max(b)] = a.min(b);
                    }
                }
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut orbit_of, v);
        if index[r] == usize::MAX {
            index[r] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[index[r]].push(v);
    }
    orbits
}
