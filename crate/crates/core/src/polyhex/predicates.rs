use serde::Serialize;

use super::{Embedding, Family, PolyhexSpec};
use crate::error::{Error, Result};
use crate::graph::{named, EdgeId, Graph};

/// The other parameter triple describing the same torus polyhex:
/// `t' = ((k - 2q - 2t) / 2) mod (k / 2)`.
pub fn torus_param_twin(spec: &PolyhexSpec) -> Result<PolyhexSpec> {
    if spec.family() != Family::Torus {
        return Err(Error::NotTorus(spec.to_string()));
    }
    let (k, q, t) = (spec.k() as i64, spec.q() as i64, spec.t() as i64);
    let twin = ((k - 2 * q - 2 * t) / 2).rem_euclid(k / 2);
    PolyhexSpec::torus(spec.k(), spec.q(), twin as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FaceWidthClass {
    Two,
    AtLeastThree,
}

impl std::fmt::Display for FaceWidthClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FaceWidthClass::Two => "2",
            FaceWidthClass::AtLeastThree => ">=3",
        })
    }
}

fn torus_fw_two(k: usize, q: usize, t: usize) -> bool {
    (k == 4 && q >= 2)
        || (q == 2 && (t + 2 == k / 2 || t + 1 == k / 2 || t == 0))
        || (q == 1 && 4 * t + 3 >= k && 4 * t <= k)
}

/// Face-width class from the parameters alone. Torus triples are matched
/// together with their twin, since both name the same embedded graph.
pub fn face_width_class(spec: &PolyhexSpec) -> FaceWidthClass {
    let (k, q) = (spec.k(), spec.q());
    let two = match spec.family() {
        Family::Torus => {
            let twin = torus_param_twin(spec).expect("torus spec");
            torus_fw_two(k, q, spec.t()) || torus_fw_two(k, q, twin.t())
        }
        Family::KleinBipartite => k == 4 || q == 2,
        Family::KleinNonBipartite => (3..=4).contains(&k) || q == 2,
    };
    if two {
        FaceWidthClass::Two
    } else {
        FaceWidthClass::AtLeastThree
    }
}

/// Two faces whose boundaries share two vertex-disjoint edges; a closed
/// curve through both faces and across those edges meets the graph twice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceWidthWitness {
    pub faces: (usize, usize),
    pub shared_edges: (EdgeId, EdgeId),
}

pub fn face_width_witness(e: &Embedding) -> Option<FaceWidthWitness> {
    let g = &e.graph;
    let face_edges: Vec<Vec<EdgeId>> = e
        .faces
        .iter()
        .map(|f| f.edges(g).unwrap_or_default())
        .collect();
    for a in 0..face_edges.len() {
        for b in a + 1..face_edges.len() {
            let shared: Vec<EdgeId> = face_edges[a]
                .iter()
                .copied()
                .filter(|x| face_edges[b].contains(x))
                .collect();
            for (i, &x) in shared.iter().enumerate() {
                for &y in &shared[i + 1..] {
                    let (p, q) = g.edge(x);
                    let (r, s) = g.edge(y);
                    if p != r && p != s && q != r && q != s {
                        return Some(FaceWidthWitness {
                            faces: (a, b),
                            shared_edges: (x, y),
                        });
                    }
                }
            }
        }
    }
    None
}

/// Planarity from the parameters alone.
pub fn is_planar_polyhex(spec: &PolyhexSpec) -> bool {
    let (k, q) = (spec.k(), spec.q());
    match spec.family() {
        Family::Torus => {
            let planar = |t: usize| (k == 4 && q == 2) || (k == 8 && q == 1) || (q == 2 && t + 1 == k / 2);
            let twin = torus_param_twin(spec).expect("torus spec");
            planar(spec.t()) || planar(twin.t())
        }
        Family::KleinBipartite => k == 4 && q == 2,
        // Ko(k,2) is the k-prism for odd k and a Möbius ladder for even k
        Family::KleinNonBipartite => k == 3 || (q == 2 && k % 2 == 1),
    }
}

/// `k33`, `cube` (or `q3`), `heawood` or `petersen`.
pub fn named_graph(name: &str) -> Result<Graph> {
    match name.to_ascii_lowercase().as_str() {
        "k33" | "k3,3" => Ok(named::complete_bipartite(3, 3)),
        "cube" | "q3" => Ok(named::cube()),
        "heawood" => Ok(named::heawood()),
        "petersen" => Ok(named::petersen()),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}
