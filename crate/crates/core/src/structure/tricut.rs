use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriCutSide {
    pub vertices: Vec<usize>,
    /// Components of `G - W` grouped into this side.
    pub components: usize,
}

/// An independent 4-set `W` with the components of `G - W` grouped into
/// three sides, each meeting `W` in a matching of size 4 and containing a
/// cycle. A `K_2` side is exempt from the matching condition but never
/// contains a cycle, so it never appears.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriCut {
    pub vertices: [usize; 4],
    pub sides: [TriCutSide; 3],
}

impl TriCut {
    /// Whether some side is made of more than one component.
    pub fn is_grouped(&self) -> bool {
        self.sides.iter().any(|s| s.components > 1)
    }
}

fn side_ok(g: &Graph, w: &[usize; 4], inside: &[bool], vertices: &[usize], components: usize) -> bool {
    let internal = vertices
        .iter()
        .flat_map(|&v| g.neighbors(v).filter(move |&x| x > v))
        .filter(|&x| inside[x])
        .count();
    if internal + components <= vertices.len() {
        return false;
    }
    let mut w_hit = [false; 4];
    let mut s_hit = Vec::new();
    for (i, &x) in w.iter().enumerate() {
        for y in g.neighbors(x) {
            if inside[y] {
                if std::mem::replace(&mut w_hit[i], true) {
                    return false;
                }
                s_hit.push(y);
            }
        }
    }
    s_hit.sort_unstable();
    s_hit.dedup();
    w_hit.iter().all(|&h| h) && s_hit.len() == 4
}

fn cut_at(g: &Graph, w: [usize; 4]) -> Option<TriCut> {
    let mut removed = vec![false; g.n()];
    for &x in &w {
        removed[x] = true;
    }
    let comps = g.components_avoiding(&removed);
    let m = comps.len();
    if m < 3 {
        return None;
    }
    // restricted growth strings over three labels
    let mut label = vec![0usize; m];
    loop {
        let used = label.iter().max().copied().unwrap_or(0);
        if used == 2 {
            if let Some(cut) = try_partition(g, w, &comps, &label) {
                return Some(cut);
            }
        }
        // next string
        let mut i = m - 1;
        loop {
            if i == 0 {
                return None;
            }
            let prefix_max = label[..i].iter().max().copied().unwrap_or(0);
            if label[i] < 2 && label[i] <= prefix_max {
                label[i] += 1;
                label[i + 1..].fill(0);
                break;
            }
            i -= 1;
        }
    }
}

fn try_partition(g: &Graph, w: [usize; 4], comps: &[Vec<usize>], label: &[usize]) -> Option<TriCut> {
    let mut sides = Vec::with_capacity(3);
    for s in 0..3 {
        let mut vertices: Vec<usize> = comps
            .iter()
            .zip(label)
            .filter(|&(_, &l)| l == s)
            .flat_map(|(c, _)| c.iter().copied())
            .collect();
        vertices.sort_unstable();
        let components = label.iter().filter(|&&l| l == s).count();
        let mut inside = vec![false; g.n()];
        for &v in &vertices {
            inside[v] = true;
        }
        if !side_ok(g, &w, &inside, &vertices, components) {
            return None;
        }
        sides.push(TriCutSide {
            vertices,
            components,
        });
    }
    Some(TriCut {
        vertices: w,
        sides: sides.try_into().expect("three sides"),
    })
}

/// The lexicographically first ideal tri-cut (by `W`, then by grouping of
/// components), or `None`.
pub fn find_ideal_tri_cut(g: &Graph) -> Result<Option<TriCut>> {
    g.require_cubic()?;
    let n = g.n();
    let mut candidates = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let w = [a, b, c, d];
                    let independent = (0..4).all(|i| (i + 1..4).all(|j| !g.has_edge(w[i], w[j])));
                    if independent {
                        candidates.push(w);
                    }
                }
            }
        }
    }
    Ok(candidates.par_iter().find_map_first(|&w| cut_at(g, w)))
}
