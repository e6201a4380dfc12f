//! Perfect matchings by backtracking on the lowest unmatched vertex, and
//! the extendability predicates built on top of it.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::{EdgeId, Graph, Matching};

/// Backtracking matcher over the vertices not yet covered. Failed states are
/// memoised, and any odd component of the uncovered part prunes immediately.
struct Matcher<'g> {
    g: &'g Graph,
    failed: HashSet<FixedBitSet>,
}

impl<'g> Matcher<'g> {
    fn new(g: &'g Graph) -> Self {
        Matcher {
            g,
            failed: HashSet::new(),
        }
    }

    fn has_odd_component(&self, covered: &FixedBitSet) -> bool {
        let g = self.g;
        let mut seen = covered.clone();
        let mut stack = Vec::new();
        for s in 0..g.n() {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            stack.push(s);
            let mut size = 0usize;
            while let Some(u) = stack.pop() {
                size += 1;
                for w in g.neighbors(u) {
                    if !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            if size % 2 == 1 {
                return true;
            }
        }
        false
    }

    fn exists(&mut self, covered: &mut FixedBitSet) -> bool {
        let Some(v) = (0..self.g.n()).find(|&v| !covered.contains(v)) else {
            return true;
        };
        if self.failed.contains(covered) || self.has_odd_component(covered) {
            return false;
        }
        covered.insert(v);
        for w in self.g.neighbors(v) {
            if covered.contains(w) {
                continue;
            }
            covered.insert(w);
            let found = self.exists(covered);
            covered.set(w, false);
            if found {
                covered.set(v, false);
                return true;
            }
        }
        covered.set(v, false);
        self.failed.insert(covered.clone());
        false
    }
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    has_perfect_matching_avoiding(g, &[])
}

/// Perfect matching of `g` minus the vertices flagged in `removed`.
pub fn has_perfect_matching_avoiding(g: &Graph, removed: &[bool]) -> bool {
    let mut covered = FixedBitSet::with_capacity(g.n());
    for (v, &r) in removed.iter().enumerate().take(g.n()) {
        covered.set(v, r);
    }
    if (g.n() - covered.count_ones(..)) % 2 == 1 {
        return false;
    }
    Matcher::new(g).exists(&mut covered)
}

fn walk_matchings(
    g: &Graph,
    covered: &mut [bool],
    current: &mut Vec<EdgeId>,
    visit: &mut dyn FnMut(&[EdgeId]),
) {
    let Some(v) = covered.iter().position(|&c| !c) else {
        visit(current);
        return;
    };
    covered[v] = true;
    for &(w, e) in g.incident(v) {
        if covered[w] {
            continue;
        }
        covered[w] = true;
        current.push(e);
        walk_matchings(g, covered, current, visit);
        current.pop();
        covered[w] = false;
    }
    covered[v] = false;
}

/// Every perfect matching, ordered lexicographically by sorted edge ids.
pub fn enumerate_perfect_matchings(g: &Graph) -> Vec<Matching> {
    let mut out = Vec::new();
    if g.n() % 2 == 1 {
        return out;
    }
    let mut covered = vec![false; g.n()];
    walk_matchings(g, &mut covered, &mut Vec::new(), &mut |edges| {
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        out.push(Matching { edges });
    });
    out.sort();
    out
}

pub fn count_perfect_matchings(g: &Graph) -> u64 {
    if g.n() % 2 == 1 {
        return 0;
    }
    let mut count = 0u64;
    let mut covered = vec![false; g.n()];
    walk_matchings(g, &mut covered, &mut Vec::new(), &mut |_| count += 1);
    count
}

/// Connected, `|V| >= 2k + 2`, and every `k` independent edges extend to a
/// perfect matching.
pub fn is_k_extendable(g: &Graph, k: usize) -> bool {
    if g.n() < 2 * k + 2 || !g.is_connected() {
        return false;
    }
    let mut removed = vec![false; g.n()];
    extend_from(g, k, 0, &mut removed)
}

fn extend_from(g: &Graph, k: usize, first: EdgeId, removed: &mut [bool]) -> bool {
    if k == 0 {
        return has_perfect_matching_avoiding(g, removed);
    }
    for e in first..g.edge_count() {
        let (u, v) = g.edge(e);
        if removed[u] || removed[v] {
            continue;
        }
        removed[u] = true;
        removed[v] = true;
        let ok = extend_from(g, k - 1, e + 1, removed);
        removed[u] = false;
        removed[v] = false;
        if !ok {
            return false;
        }
    }
    true
}

/// Bipartite and 2-extendable.
pub fn is_brace(g: &Graph) -> bool {
    g.is_bipartite() && is_k_extendable(g, 2)
}

/// `g - u - v` has a perfect matching for every pair of distinct vertices.
pub fn is_bicritical(g: &Graph) -> bool {
    if g.n() < 2 {
        return false;
    }
    let mut removed = vec![false; g.n()];
    for u in 0..g.n() {
        removed[u] = true;
        for v in u + 1..g.n() {
            removed[v] = true;
            let ok = has_perfect_matching_avoiding(g, &removed);
            removed[v] = false;
            if !ok {
                return false;
            }
        }
        removed[u] = false;
    }
    true
}

/// 3-connected and bicritical.
pub fn is_brick(g: &Graph) -> bool {
    super::vertex_connectivity_at_least(g, 3) && is_bicritical(g)
}
