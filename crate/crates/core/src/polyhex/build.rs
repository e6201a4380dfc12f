use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{Family, PolyhexSpec};
use crate::error::{Error, Result};
use crate::graph::format::EdgeListJson;
use crate::graph::{Cycle, EdgeId, Graph};

/// The rectangle `L(k, q)` of the brick-wall lattice: vertex `v(i, j)` for
/// `0 <= i <= k`, `0 <= j <= q` has id `j * (k + 1) + i`.
#[derive(Debug, Clone)]
pub struct Lattice {
    pub k: usize,
    pub q: usize,
    pub graph: Graph,
}

impl Lattice {
    pub fn id(&self, i: usize, j: usize) -> usize {
        j * (self.k + 1) + i
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v % (self.k + 1), v / (self.k + 1))
    }

    /// Black vertices have `i + j` even.
    pub fn is_black(&self, v: usize) -> bool {
        let (i, j) = self.coords(v);
        (i + j) % 2 == 0
    }
}

pub fn build_lattice(k: usize, q: usize) -> Lattice {
    let id = |i: usize, j: usize| j * (k + 1) + i;
    let mut edges = Vec::new();
    for j in 0..=q {
        for i in 0..=k {
            if i < k {
                edges.push((id(i, j), id(i + 1, j)));
            }
            if j < q && i % 2 == j % 2 {
                edges.push((id(i, j), id(i, j + 1)));
            }
        }
    }
    let graph = Graph::new((k + 1) * (q + 1), edges).expect("lattice edges are distinct");
    Lattice { k, q, graph }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Surface {
    Torus,
    KleinBottle,
}

/// A hexagonal face; `boundary` lists its six vertices in cyclic order and
/// `label` is `(i, j)` for the hexagon `h(i, j)` whose lower-left corner is
/// lattice vertex `v(2i + (j mod 2), j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexFace {
    pub boundary: Vec<usize>,
    pub label: (usize, usize),
}

impl HexFace {
    /// Boundary edges, or `None` if some consecutive pair is not adjacent.
    pub fn edges(&self, g: &Graph) -> Option<Vec<EdgeId>> {
        let n = self.boundary.len();
        (0..n)
            .map(|i| g.edge_id(self.boundary[i], self.boundary[(i + 1) % n]))
            .collect()
    }

    pub fn cycle(&self, g: &Graph) -> Result<Cycle> {
        Cycle::new(g, self.boundary.clone())
    }
}

/// A polyhex graph with its hexagonal embedding. Vertex `y * k + x` is the
/// image of lattice vertex `v(x, y)`, so `coords[v] = (x, y)` with
/// `x < k`, `y < q`.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub spec: PolyhexSpec,
    pub surface: Surface,
    pub graph: Graph,
    pub faces: Vec<HexFace>,
    /// `layers[j]` is the path `v(0,j) .. v(k-1,j)`.
    pub layers: Vec<Vec<usize>>,
    /// For `Ko`, the edges `v(0,i) v(k-1,q-1-i)` created by gluing the
    /// left and right sides. Empty for the other families.
    pub crossing_edges: Vec<EdgeId>,
    pub coords: Vec<(usize, usize)>,
}

/// Reduces a lattice point to the fundamental domain `[0,k) x [0,q)` using
/// the deck transformations of the family.
fn canonical(spec: &PolyhexSpec, x: i64, y: i64) -> (usize, usize) {
    let (k, q, t) = (spec.k() as i64, spec.q() as i64, spec.t() as i64);
    let (mut x, mut y) = (x, y);
    match spec.family() {
        Family::Torus => {
            let s = q + 2 * t;
            while y >= q {
                y -= q;
                x -= s;
            }
            while y < 0 {
                y += q;
                x += s;
            }
            x = x.rem_euclid(k);
        }
        Family::KleinBipartite => {
            let r = k + q % 2;
            while y >= q {
                x = r - x;
                y -= q;
            }
            while y < 0 {
                x = r - x;
                y += q;
            }
            x = x.rem_euclid(k);
        }
        Family::KleinNonBipartite => {
            let r = if k % 2 == 0 { q - 1 } else { q - 2 };
            while x >= k {
                x -= k;
                y = r - y;
            }
            while x < 0 {
                x += k;
                y = r - y;
            }
            y = y.rem_euclid(q);
        }
    }
    (x as usize, y as usize)
}

pub fn build_polyhex(spec: &PolyhexSpec) -> Result<Embedding> {
    let (k, q) = (spec.k(), spec.q());
    let n = k * q;
    let id = |x: i64, y: i64| {
        let (x, y) = canonical(spec, x, y);
        y * k + x
    };
    let lattice = build_lattice(k, q);
    let mut edges = BTreeSet::new();
    for &(a, b) in lattice.graph.edges() {
        let (ai, aj) = lattice.coords(a);
        let (bi, bj) = lattice.coords(b);
        let (u, v) = (id(ai as i64, aj as i64), id(bi as i64, bj as i64));
        if u == v {
            return Err(Error::IdentificationCollision(format!(
                "{spec}: lattice edge v({ai},{aj}) v({bi},{bj}) becomes a loop"
            )));
        }
        edges.insert((u.min(v), u.max(v)));
    }
    if edges.len() != 3 * n / 2 {
        return Err(Error::IdentificationCollision(format!(
            "{spec}: gluing leaves {} distinct edges, expected {}",
            edges.len(),
            3 * n / 2
        )));
    }
    let graph = Graph::new(n, edges)?;
    if let Some(v) = (0..n).find(|&v| graph.degree(v) != 3) {
        return Err(Error::IdentificationCollision(format!(
            "{spec}: vertex {v} has degree {}",
            graph.degree(v)
        )));
    }

    let mut faces = Vec::with_capacity(n / 2);
    for j in 0..q {
        for c in (j % 2..k).step_by(2) {
            let (c, jj) = (c as i64, j as i64);
            let boundary = vec![
                id(c, jj),
                id(c + 1, jj),
                id(c + 2, jj),
                id(c + 2, jj + 1),
                id(c + 1, jj + 1),
                id(c, jj + 1),
            ];
            faces.push(HexFace {
                boundary,
                label: (c as usize / 2, j),
            });
        }
    }

    let layers = (0..q).map(|j| (0..k).map(|i| j * k + i).collect()).collect();
    let crossing_edges = if spec.family() == Family::KleinNonBipartite {
        (0..q as i64)
            .map(|j| {
                graph
                    .edge_id(id(k as i64 - 1, j), id(k as i64, j))
                    .expect("glued edge exists")
            })
            .collect()
    } else {
        Vec::new()
    };
    let surface = match spec.family() {
        Family::Torus => Surface::Torus,
        _ => Surface::KleinBottle,
    };
    Ok(Embedding {
        spec: *spec,
        surface,
        graph,
        faces,
        layers,
        crossing_edges,
        coords: (0..n).map(|v| (v % k, v / k)).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ValidationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Checks that the embedding is a cubic polyhex graph whose faces are
/// hexagons covering every edge exactly twice.
pub fn validate_polyhex(e: &Embedding) -> ValidationReport {
    let g = &e.graph;
    let n = e.spec.vertex_count();
    let mut checks = Vec::new();
    let mut check = |name, passed, detail: String| {
        checks.push(ValidationCheck {
            name,
            passed,
            detail,
        })
    };
    check("vertex count", g.n() == n, format!("{} (expected {n})", g.n()));
    check(
        "edge count",
        g.edge_count() * 2 == 3 * n,
        format!("{} (expected {})", g.edge_count(), 3 * n / 2),
    );
    check(
        "face count",
        e.faces.len() * 2 == n,
        format!("{} (expected {})", e.faces.len(), n / 2),
    );
    let bad_degree: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) != 3).collect();
    check("cubic", bad_degree.is_empty(), format!("vertices of degree != 3: {bad_degree:?}"));

    let mut not_hexagon = Vec::new();
    let mut cover: HashMap<EdgeId, Vec<usize>> = HashMap::new();
    for (f, face) in e.faces.iter().enumerate() {
        let is_hexagon = face.boundary.len() == 6 && face.cycle(g).is_ok();
        if !is_hexagon {
            not_hexagon.push(face.label);
            continue;
        }
        for edge in face.edges(g).expect("hexagon boundary is a cycle") {
            cover.entry(edge).or_default().push(f);
        }
    }
    check(
        "faces are 6-cycles",
        not_hexagon.is_empty(),
        format!("non-hexagonal faces: {not_hexagon:?}"),
    );
    let badly_covered: Vec<EdgeId> = (0..g.edge_count())
        .filter(|edge| match cover.get(edge) {
            Some(fs) => fs.len() != 2 || fs[0] == fs[1],
            None => true,
        })
        .collect();
    check(
        "every edge on two faces",
        badly_covered.is_empty(),
        format!("edges not on exactly two distinct faces: {badly_covered:?}"),
    );
    ValidationReport { checks }
}

/// Serialized form of an [`Embedding`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub spec: PolyhexSpec,
    pub surface: Surface,
    pub graph: EdgeListJson,
    pub faces: Vec<Vec<usize>>,
    pub face_labels: Vec<[usize; 2]>,
    pub crossing_edges: Vec<[usize; 2]>,
    pub coords: Vec<[usize; 2]>,
}

impl Embedding {
    pub fn to_json(&self) -> EmbeddingJson {
        EmbeddingJson {
            spec: self.spec,
            surface: self.surface,
            graph: EdgeListJson::from(&self.graph),
            faces: self.faces.iter().map(|f| f.boundary.clone()).collect(),
            face_labels: self.faces.iter().map(|f| [f.label.0, f.label.1]).collect(),
            crossing_edges: self
                .crossing_edges
                .iter()
                .map(|&e| {
                    let (u, v) = self.graph.edge(e);
                    [u, v]
                })
                .collect(),
            coords: self.coords.iter().map(|&(x, y)| [x, y]).collect(),
        }
    }

    pub fn face_boundaries(&self) -> Vec<Vec<usize>> {
        self.faces.iter().map(|f| f.boundary.clone()).collect()
    }
}
